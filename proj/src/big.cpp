#include "cfk/big.hpp"

#include <cctype>

#include "cfk/errors.hpp"

namespace cfk {

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_fraction_string(const BigRational& q) { return q.get_str(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

BigRational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  BigRational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw ParseError("malformed fraction: " + std::string(text));
    BigInt d{std::string(den)};
    if (d == 0) throw ParseError("zero denominator: " + std::string(text));
    value = make_rational(BigInt(std::string(num)), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto ip = s.substr(0, dot);
    auto fp = s.substr(dot + 1);
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) ||
        (ip.empty() && fp.empty()))
      throw ParseError("malformed decimal: " + std::string(text));
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
    BigInt whole(ip.empty() ? std::string("0") : std::string(ip));
    BigInt frac(fp.empty() ? std::string("0") : std::string(fp));
    value = make_rational(whole * scale + frac, scale);
  } else {
    if (!all_digits(s)) throw ParseError("malformed number: " + std::string(text));
    value = BigRational(BigInt(std::string(s)));
  }
  return negative ? BigRational(-value) : value;
}

std::string to_decimal(const BigRational& q, int digits) {
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  BigInt scaled = floor_of(q * scale);
  bool negative = scaled < 0;
  BigInt mag = negative ? BigInt(-scaled) : scaled;
  std::string s = mag.get_str();
  if (digits == 0) return (negative ? "-" : "") + s;
  if (s.size() <= static_cast<std::size_t>(digits))
    s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
  s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  return (negative ? "-" : "") + s;
}

BigInt pow2(std::uint64_t e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

BigRational pow10_inverse(int digits) {
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  return make_rational(1, scale);
}

BigInt floor_of(const BigRational& q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

BigInt ceil_of(const BigRational& q) {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

double to_double(const BigRational& q) { return q.get_d(); }

}  // namespace cfk
