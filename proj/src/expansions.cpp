#include "cfk/expansions.hpp"

#include <array>
#include <cctype>
#include <limits>

#include "cfk/errors.hpp"

namespace cfk {

namespace {

std::strong_ordering from_sign(int s) {
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Quotient to_quotient(const BigInt& a) {
  if (a <= 0 || !a.fits_ulong_p() || a.get_ui() > (std::numeric_limits<Quotient>::max() >> 2))
    throw DomainError("partial quotient out of range: " + a.get_str());
  return static_cast<Quotient>(a.get_ui());
}

// 2x2 integer matrix acting as a Moebius map t -> (a t + b) / (c t + d).
struct Moebius {
  BigInt a{1}, b{0}, c{0}, d{1};
  // Composition with t -> 1 / (q + t).
  void push(Quotient q) {
    BigInt qq(static_cast<unsigned long>(q));
    BigInt na = b, nb = a + b * qq, nc = d, nd = c + d * qq;
    a = na;
    b = nb;
    c = nc;
    d = nd;
  }
};

Moebius moebius_of(const std::vector<Quotient>& terms) {
  Moebius m;
  for (Quotient q : terms) m.push(q);
  return m;
}

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool done() {
    skip_ws();
    return pos_ == s_.size();
  }
  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string join(const std::vector<Quotient>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// ContinuedFractionExpansion

ContinuedFractionExpansion ContinuedFractionExpansion::from_terms(std::vector<Quotient> prefix,
                                                                  std::vector<Quotient> cycle) {
  for (Quotient q : prefix)
    if (q == 0) throw DomainError("partial quotients must be positive");
  for (Quotient q : cycle)
    if (q == 0) throw DomainError("partial quotients must be positive");
  ContinuedFractionExpansion cf(Lasso<Quotient>{std::move(prefix), std::move(cycle)});
  cf.canonicalize();
  return cf;
}

void ContinuedFractionExpansion::canonicalize() {
  terms_.minimize();
  if (terms_.finite() && terms_.prefix.size() >= 2 && terms_.prefix.back() == 1) {
    terms_.prefix.pop_back();
    terms_.prefix.back() += 1;
  }
}

ContinuedFractionExpansion ContinuedFractionExpansion::from_rational(const BigRational& x) {
  if (x < 0 || x > 1) throw DomainError("continued fraction value outside [0,1]: " + x.get_str());
  std::vector<Quotient> terms;
  BigInt n = x.get_num(), d = x.get_den();
  while (n != 0) {
    BigInt a = d / n;
    terms.push_back(to_quotient(a));
    BigInt r = d - a * n;
    d = n;
    n = r;
  }
  return from_terms(std::move(terms));
}

ContinuedFractionExpansion ContinuedFractionExpansion::from_surd(const QuadraticSurd& x) {
  if (x.is_rational()) return from_rational(x.rational_part());
  if (x.sign() <= 0 || x >= QuadraticSurd(BigRational(1)))
    throw DomainError("continued fraction value outside (0,1): " + x.to_string());
  // x = (P + sqrt(N)) / Q with Q | N - P^2.
  int s = sgn(x.q());
  BigInt p0 = s * x.p(), q0 = s * x.r();
  BigInt scale = abs(q0);
  BigInt n = x.q() * x.q() * x.radicand() * q0 * q0;
  BigInt sqrt_n;
  mpz_sqrt(sqrt_n.get_mpz_t(), n.get_mpz_t());
  using State = std::array<BigInt, 2>;
  auto floor_state = [&](const State& st) {
    const BigInt& P = st[0];
    const BigInt& Q = st[1];
    BigInt out, num = Q > 0 ? BigInt(P + sqrt_n) : BigInt(-P - sqrt_n - 1);
    BigInt den = abs(Q);
    mpz_fdiv_q(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return out;
  };
  auto advance = [&](const State& st, const BigInt& a) {
    BigInt P = a * st[1] - st[0];
    BigInt Q = (n - P * P) / st[1];
    return State{P, Q};
  };
  // x itself has integer part 0; its first complete quotient is 1/x.
  State start = advance(State{p0 * scale, q0 * scale}, BigInt(0));
  auto lasso = unroll<Quotient>(start, [&](const State& st) {
    BigInt a = floor_state(st);
    return std::pair{std::array<Quotient, 1>{to_quotient(a)}, std::optional<State>(advance(st, a))};
  });
  return from_terms(std::move(lasso.prefix), std::move(lasso.cycle));
}

ContinuedFractionExpansion ContinuedFractionExpansion::parse(std::string_view text) {
  Cursor c(text);
  auto fail = [&]() { return ParseError("malformed continued fraction: " + std::string(text)); };
  if (!c.eat('[')) throw fail();
  if (c.digits() != "0") throw fail();
  std::vector<Quotient> prefix, cycle;
  auto read_quotient = [&]() {
    std::string d = c.digits();
    if (d.empty() || d.size() > 18) throw fail();
    Quotient q = std::stoull(d);
    if (q == 0) throw fail();
    return q;
  };
  if (c.eat(';')) {
    bool first = true;
    while (!c.peek(']')) {
      if (!first && !c.eat(',')) throw fail();
      first = false;
      if (c.eat('(')) {
        do {
          cycle.push_back(read_quotient());
        } while (c.eat(','));
        if (!c.eat(')')) throw fail();
        if (!c.peek(']')) throw fail();
        break;
      }
      prefix.push_back(read_quotient());
    }
  }
  if (!c.eat(']') || !c.done()) throw fail();
  return from_terms(std::move(prefix), std::move(cycle));
}

std::string ContinuedFractionExpansion::to_string() const {
  if (is_zero()) return "[0]";
  std::string s = "[0;" + join(terms_.prefix);
  if (!terms_.cycle.empty()) s += std::string(terms_.prefix.empty() ? "" : ",") + "(" + join(terms_.cycle) + ")";
  return s + "]";
}

// ---------------------------------------------------------------------------
// BinaryExpansion

BinaryExpansion BinaryExpansion::from_bits(std::vector<Bit> prefix, std::vector<Bit> cycle) {
  for (Bit b : prefix)
    if (b > 1) throw DomainError("binary digit must be 0 or 1");
  for (Bit b : cycle)
    if (b > 1) throw DomainError("binary digit must be 0 or 1");
  BinaryExpansion out(Lasso<Bit>{std::move(prefix), std::move(cycle)});
  out.canonicalize();
  return out;
}

BinaryExpansion BinaryExpansion::from_sequence(const SymbolSequence& s) {
  return from_bits(s.prefix, s.cycle);
}

void BinaryExpansion::canonicalize() {
  bits_.minimize();
  if (bits_.cycle == std::vector<Bit>{0}) bits_.cycle.clear();
  if (bits_.cycle == std::vector<Bit>{1} && !bits_.prefix.empty()) {
    // minimize() leaves the prefix ending in 0: w0(1) = w1.
    bits_.prefix.back() = 1;
    bits_.cycle.clear();
  }
  if (bits_.finite())
    while (!bits_.prefix.empty() && bits_.prefix.back() == 0) bits_.prefix.pop_back();
}

BinaryExpansion BinaryExpansion::from_rational(const BigRational& x) {
  if (x < 0 || x > 1) throw DomainError("binary value outside [0,1]: " + x.get_str());
  if (x == 1) return one();
  const BigInt den = x.get_den();
  auto lasso = unroll<Bit>(BigInt(x.get_num()), [&](const BigInt& rem) {
    BigInt twice = 2 * rem;
    Bit digit = twice >= den ? 1 : 0;
    BigInt next = digit ? BigInt(twice - den) : twice;
    std::optional<BigInt> state;
    if (next != 0) state = next;
    return std::pair{std::array<Bit, 1>{digit}, state};
  });
  if (x == 0) lasso = {};
  return from_bits(std::move(lasso.prefix), std::move(lasso.cycle));
}

BinaryExpansion BinaryExpansion::parse(std::string_view text) {
  Cursor c(text);
  auto fail = [&]() { return ParseError("malformed binary expansion: " + std::string(text)); };
  std::string ip = c.digits();
  if (ip == "1" && c.done()) return one();
  if (ip != "0") throw fail();
  std::vector<Bit> prefix, cycle;
  if (c.eat('.')) {
    auto read_bits = [&](std::vector<Bit>& out) {
      std::string d = c.digits();
      for (char ch : d) {
        if (ch != '0' && ch != '1') throw fail();
        out.push_back(static_cast<Bit>(ch - '0'));
      }
    };
    read_bits(prefix);
    if (c.eat('(')) {
      read_bits(cycle);
      if (cycle.empty() || !c.eat(')')) throw fail();
    }
  }
  if (!c.done()) throw fail();
  return from_bits(std::move(prefix), std::move(cycle));
}

BigRational BinaryExpansion::to_rational() const {
  auto as_int = [](const std::vector<Bit>& v) {
    BigInt out = 0;
    for (Bit b : v) out = 2 * out + b;
    return out;
  };
  BigInt scale = pow2(bits_.prefix.size());
  BigRational value = make_rational(as_int(bits_.prefix), scale);
  if (!bits_.cycle.empty()) {
    BigInt period_den = pow2(bits_.cycle.size()) - 1;
    value += make_rational(as_int(bits_.cycle), scale * period_den);
  }
  return value;
}

std::string BinaryExpansion::to_string() const {
  if (is_zero()) return "0";
  std::string s = "0.";
  for (Bit b : bits_.prefix) s += static_cast<char>('0' + b);
  if (!bits_.cycle.empty()) {
    s += "(";
    for (Bit b : bits_.cycle) s += static_cast<char>('0' + b);
    s += ")";
  }
  return s;
}

SymbolSequence BinaryExpansion::sequence() const {
  if (bits_.finite()) return SymbolSequence{bits_.prefix, {0}};
  return bits_;
}

// ---------------------------------------------------------------------------
// Values

BigRational finite_cf_value(const std::vector<Quotient>& terms) {
  BigRational x = 0;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    x = BigRational(1) / (BigRational(BigInt(static_cast<unsigned long>(*it))) + x);
  }
  return x;
}

QuadraticSurd cf_surd(const ContinuedFractionExpansion& cf) {
  if (cf.is_rational()) return QuadraticSurd(finite_cf_value(cf.preperiod()));
  Moebius m = moebius_of(cf.period());
  // y = (a y + b) / (c y + d)  =>  c y^2 + (d - a) y - b = 0, positive root.
  BigInt disc = (m.d - m.a) * (m.d - m.a) + 4 * m.b * m.c;
  QuadraticSurd y(m.a - m.d, 1, 2 * m.c, disc);
  Moebius pre = moebius_of(cf.preperiod());
  QuadraticSurd num = y * QuadraticSurd(BigRational(pre.a)) + QuadraticSurd(BigRational(pre.b));
  QuadraticSurd den = y * QuadraticSurd(BigRational(pre.c)) + QuadraticSurd(BigRational(pre.d));
  return num / den;
}

ExactReal cf_value(const ContinuedFractionExpansion& cf) {
  if (cf.is_rational()) return finite_cf_value(cf.preperiod());
  return cf_surd(cf);
}

QuadraticSurd as_surd(const ExactReal& x) {
  return std::visit(
      [](const auto& v) -> QuadraticSurd {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, BigRational>) {
          return QuadraticSurd(v);
        } else {
          return v;
        }
      },
      x);
}

std::string to_string(const ExactReal& x) { return as_surd(x).to_string(); }

std::string to_decimal(const ExactReal& x, int digits) { return as_surd(x).to_decimal(digits); }

// ---------------------------------------------------------------------------
// Maps

ContinuedFractionExpansion gauss_step(const ContinuedFractionExpansion& cf) {
  if (cf.is_zero()) return cf;
  auto t = cf.terms().drop_front();
  return ContinuedFractionExpansion::from_terms(std::move(t.prefix), std::move(t.cycle));
}

ContinuedFractionExpansion farey_step(const ContinuedFractionExpansion& cf) {
  if (cf.is_zero()) return cf;
  Quotient first = *cf.terms().at(0);
  if (first == 1) return gauss_step(cf);
  Lasso<Quotient> t = cf.terms();
  if (t.prefix.empty()) {
    t.prefix.push_back(t.cycle.front() - 1);
    std::rotate(t.cycle.begin(), t.cycle.begin() + 1, t.cycle.end());
  } else {
    t.prefix.front() -= 1;
  }
  return ContinuedFractionExpansion::from_terms(std::move(t.prefix), std::move(t.cycle));
}

namespace {

SymbolSequence complemented(SymbolSequence s) {
  for (Bit& b : s.prefix) b ^= 1;
  for (Bit& b : s.cycle) b ^= 1;
  return s;
}

}  // namespace

BinaryExpansion tent_step(const BinaryExpansion& b) {
  if (b.is_zero()) return b;
  SymbolSequence s = b.sequence();
  Bit first = *s.at(0);
  SymbolSequence rest = s.drop_front();
  if (first == 1) rest = complemented(rest);
  return BinaryExpansion::from_sequence(rest);
}

BinaryExpansion doubling_step(const BinaryExpansion& b) {
  if (b.is_zero() || b.is_one()) return BinaryExpansion{};
  return BinaryExpansion::from_sequence(b.sequence().drop_front());
}

BinaryExpansion complement(const BinaryExpansion& b) {
  return BinaryExpansion::from_sequence(complemented(b.sequence()));
}

// ---------------------------------------------------------------------------
// Orders

std::strong_ordering compare(const ContinuedFractionExpansion& x,
                             const ContinuedFractionExpansion& y) {
  const auto& a = x.terms();
  const auto& b = y.terms();
  const std::size_t bound = joint_bound(a, b);
  for (std::size_t i = 0; i < bound; ++i) {
    auto ea = a.at(i), eb = b.at(i);
    if (!ea && !eb) return std::strong_ordering::equal;
    if (ea && eb && *ea == *eb) continue;
    // A terminated expansion behaves as an infinite quotient.
    bool a_bigger = !ea ? true : (!eb ? false : *ea > *eb);
    bool x_smaller = (i % 2 == 0) ? a_bigger : !a_bigger;
    return x_smaller ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare_sequences(const SymbolSequence& x, bool complement_x,
                                       const SymbolSequence& y, bool complement_y) {
  const std::size_t bound = joint_bound(x, y);
  for (std::size_t i = 0; i < bound; ++i) {
    Bit a = x.at(i).value_or(0) ^ (complement_x ? 1 : 0);
    Bit b = y.at(i).value_or(0) ^ (complement_y ? 1 : 0);
    if (a != b) return a < b ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare(const BinaryExpansion& x, const BinaryExpansion& y) {
  return compare_sequences(x.sequence(), false, y.sequence(), false);
}

std::strong_ordering compare(const ExactReal& x, const ExactReal& y) {
  return as_surd(x) <=> as_surd(y);
}

std::strong_ordering compare(const ContinuedFractionExpansion& x, const ExactReal& y) {
  return cf_surd(x) <=> as_surd(y);
}

std::strong_ordering compare(const BinaryExpansion& x, const BigRational& y) {
  return from_sign(sgn(x.to_rational() - y));
}

SymbolSequence shift(const SymbolSequence& s) { return s.drop_front(); }

BinaryExpansion encode_kneading(const SymbolSequence& s) {
  SymbolSequence full = s.finite() ? SymbolSequence{s.prefix, {0}} : s;
  using State = std::pair<std::size_t, Bit>;
  auto t = unroll<Bit>(State{0, 0}, [&](const State& st) {
    Bit out = st.second ^ *full.at(st.first);
    return std::pair{std::array<Bit, 1>{out}, std::optional<State>(State{full.normalize(st.first + 1), out})};
  });
  return BinaryExpansion::from_bits(std::move(t.prefix), std::move(t.cycle));
}

std::pair<std::vector<Quotient>, std::vector<Quotient>> even_odd_forms(const BigRational& r) {
  if (r <= 0 || r >= 1) throw DomainError("even/odd expansions need r in (0,1): " + r.get_str());
  std::vector<Quotient> canon = ContinuedFractionExpansion::from_rational(r).preperiod();
  std::vector<Quotient> alt = canon;
  alt.back() -= 1;
  alt.push_back(1);
  if (canon.size() % 2 == 0) return {canon, alt};
  return {alt, canon};
}

}  // namespace cfk
