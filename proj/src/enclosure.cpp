#include "cfk/enclosure.hpp"

namespace cfk {

std::string Enclosure::common_decimal(int max_digits) const {
  std::string a = to_decimal(lo, max_digits), b = to_decimal(hi, max_digits);
  std::size_t n = 0;
  while (n < a.size() && n < b.size() && a[n] == b[n]) ++n;
  std::string out = a.substr(0, n);
  if (!out.empty() && out.back() == '.') out.pop_back();
  return out;
}

std::optional<std::vector<Bit>> Enclosure::binary_digits(std::size_t n) const {
  BigInt scale = pow2(n);
  BigInt a = floor_of(lo * scale), b = floor_of(hi * scale);
  // hi itself may sit exactly on a dyadic boundary; floor(hi*2^n) then
  // exceeds the digits of every point strictly below hi.
  if (a != b) return std::nullopt;
  if (a < 0 || a >= scale) return std::nullopt;
  std::vector<Bit> digits(n);
  for (std::size_t i = 0; i < n; ++i)
    digits[i] = mpz_tstbit(a.get_mpz_t(), n - 1 - i) ? 1 : 0;
  return digits;
}

}  // namespace cfk
