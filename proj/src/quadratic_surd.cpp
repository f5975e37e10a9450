#include "cfk/quadratic_surd.hpp"

#include <map>
#include <vector>

#include "cfk/errors.hpp"

namespace cfk {

namespace {

constexpr unsigned long kTrialBound = 1u << 16;
constexpr unsigned long kRhoIterations = 1u << 18;

// Pollard-Brent; returns a nontrivial factor or 0 on failure.
BigInt pollard_brent(const BigInt& n, unsigned long seed) {
  if (n % 2 == 0) return 2;
  BigInt y = BigInt(seed) % n, c = (seed * 7 + 1) % n, m = 128, g = 1, r = 1, q = 1;
  BigInt x, ys;
  unsigned long iterations = 0;
  auto f = [&](const BigInt& v) {
    BigInt out = v * v + c;
    mpz_mod(out.get_mpz_t(), out.get_mpz_t(), n.get_mpz_t());
    return out;
  };
  while (g == 1) {
    x = y;
    for (BigInt i = 0; i < r; ++i) y = f(y);
    BigInt k = 0;
    while (k < r && g == 1) {
      ys = y;
      for (BigInt i = 0; i < m && i < r - k; ++i) {
        y = f(y);
        BigInt diff = abs(x - y);
        q = (q * diff) % n;
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += m;
      iterations += m.get_ui();
      if (iterations > kRhoIterations) return 0;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      ys = f(ys);
      BigInt diff = abs(x - ys);
      mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  if (g == n) return 0;
  return g;
}

// Accumulates prime (or unsplittable) factors of n into `exponents`.
void factor_into(const BigInt& n, std::map<BigInt, unsigned>& exponents) {
  if (n == 1) return;
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    BigInt root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    std::map<BigInt, unsigned> half;
    factor_into(root, half);
    for (auto& [prime, e] : half) exponents[prime] += 2 * e;
    return;
  }
  if (n < BigInt(kTrialBound) * kTrialBound || mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    exponents[n] += 1;
    return;
  }
  for (unsigned long seed = 2; seed < 12; ++seed) {
    BigInt f = pollard_brent(n, seed);
    if (f != 0) {
      factor_into(f, exponents);
      factor_into(n / f, exponents);
      return;
    }
  }
  exponents[n] += 1;
}

BigInt floor_parts(const BigInt& p, const BigInt& q, const BigInt& r, const BigInt& d) {
  BigInt out;
  if (q == 0 || d == 0) {
    mpz_fdiv_q(out.get_mpz_t(), p.get_mpz_t(), r.get_mpz_t());
    return out;
  }
  BigInt n = q * q * d;
  BigInt s;
  mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
  BigInt num = q > 0 ? BigInt(p + s) : BigInt(p - s - 1);
  mpz_fdiv_q(out.get_mpz_t(), num.get_mpz_t(), r.get_mpz_t());
  return out;
}

int sign_of_three(const BigRational& a, const BigRational& b, const BigInt& d1,
                  const BigRational& c, const BigInt& d2) {
  int s1 = sign_of_sum(a, b, d1);
  int s2 = d2 == 0 ? 0 : sgn(c);
  if (s2 == 0) return s1;
  if (s1 == 0 || s1 == s2) return s1 == 0 ? s2 : s1;
  BigRational d1q(d1), d2q(d2);
  int t = sign_of_sum(a * a + b * b * d1q - c * c * d2q, 2 * a * b, d1);
  if (t > 0) return s1;
  if (t < 0) return s2;
  return 0;
}

}  // namespace

void extract_square(const BigInt& n, BigInt& square_root_part, BigInt& core) {
  if (n < 0) throw DomainError("negative radicand");
  square_root_part = 1;
  core = 1;
  if (n == 0) {
    square_root_part = 0;
    core = 0;
    return;
  }
  BigInt rest = n;
  for (unsigned long p = 2; p < kTrialBound; p += (p == 2 ? 1 : 2)) {
    if (rest < BigInt(p) * p) break;
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    for (unsigned i = 0; i < e / 2; ++i) square_root_part *= p;
    if (e % 2) core *= p;
  }
  std::map<BigInt, unsigned> exponents;
  factor_into(rest, exponents);
  for (const auto& [factor, e] : exponents) {
    BigInt power;
    mpz_pow_ui(power.get_mpz_t(), factor.get_mpz_t(), e / 2);
    square_root_part *= power;
    if (e % 2) core *= factor;
  }
}

int sign_of_sum(const BigRational& x, const BigRational& y, const BigInt& d) {
  int sx = sgn(x);
  int sy = (d == 0) ? 0 : sgn(y);
  if (sy == 0) return sx;
  if (sx == 0 || sx == sy) return sx == 0 ? sy : sx;
  BigRational lhs = x * x;
  BigRational rhs = y * y * BigRational(d);
  if (lhs > rhs) return sx;
  if (lhs < rhs) return sy;
  return 0;
}

QuadraticSurd::QuadraticSurd(const BigRational& value)
    : p_(value.get_num()), q_(0), r_(value.get_den()), d_(0) {}

QuadraticSurd::QuadraticSurd(BigInt p, BigInt q, BigInt r, BigInt D)
    : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), d_(std::move(D)) {
  if (r_ == 0) throw DomainError("QuadraticSurd with zero denominator");
  if (d_ < 0) throw DomainError("QuadraticSurd with negative radicand");
  if (q_ != 0 && d_ != 0) {
    BigInt s, core;
    extract_square(d_, s, core);
    q_ *= s;
    d_ = core;
  }
  normalize();
}

void QuadraticSurd::normalize() {
  if (q_ == 0 || d_ == 0) {
    q_ = 0;
    d_ = 0;
  } else if (d_ == 1) {
    p_ += q_;
    q_ = 0;
    d_ = 0;
  }
  if (r_ < 0) {
    p_ = -p_;
    q_ = -q_;
    r_ = -r_;
  }
  BigInt g;
  mpz_gcd(g.get_mpz_t(), p_.get_mpz_t(), q_.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r_.get_mpz_t());
  if (g > 1) {
    p_ /= g;
    q_ /= g;
    r_ /= g;
  }
}

int QuadraticSurd::sign() const { return sign_of_sum(BigRational(p_), BigRational(q_), d_); }

BigInt QuadraticSurd::floor() const { return floor_parts(p_, q_, r_, d_); }

QuadraticSurd QuadraticSurd::operator-() const {
  QuadraticSurd out = *this;
  out.p_ = -p_;
  out.q_ = -q_;
  return out;
}

QuadraticSurd QuadraticSurd::reciprocal() const {
  BigInt den = p_ * p_ - q_ * q_ * d_;
  if (den == 0) throw DomainError("reciprocal of zero");
  QuadraticSurd out;
  out.p_ = r_ * p_;
  out.q_ = -r_ * q_;
  out.r_ = den;
  out.d_ = d_;
  out.normalize();
  return out;
}

namespace {

const BigInt& common_radicand(const QuadraticSurd& a, const QuadraticSurd& b) {
  if (a.is_rational()) return b.radicand();
  if (b.is_rational() || a.radicand() == b.radicand()) return a.radicand();
  throw DomainError("QuadraticSurd arithmetic across different radicands");
}

}  // namespace

QuadraticSurd operator+(const QuadraticSurd& a, const QuadraticSurd& b) {
  QuadraticSurd out;
  out.d_ = common_radicand(a, b);
  out.p_ = a.p_ * b.r_ + b.p_ * a.r_;
  out.q_ = a.q_ * b.r_ + b.q_ * a.r_;
  out.r_ = a.r_ * b.r_;
  out.normalize();
  return out;
}

QuadraticSurd operator-(const QuadraticSurd& a, const QuadraticSurd& b) { return a + (-b); }

QuadraticSurd operator*(const QuadraticSurd& a, const QuadraticSurd& b) {
  QuadraticSurd out;
  out.d_ = common_radicand(a, b);
  out.p_ = a.p_ * b.p_ + a.q_ * b.q_ * out.d_;
  out.q_ = a.p_ * b.q_ + a.q_ * b.p_;
  out.r_ = a.r_ * b.r_;
  out.normalize();
  return out;
}

QuadraticSurd operator/(const QuadraticSurd& a, const QuadraticSurd& b) {
  return a * b.reciprocal();
}

std::strong_ordering operator<=>(const QuadraticSurd& a, const QuadraticSurd& b) {
  BigRational ra = a.rational_part() - b.rational_part();
  int s = a.d_ == b.d_
              ? sign_of_sum(ra, a.surd_coefficient() - b.surd_coefficient(), a.d_)
              : sign_of_three(ra, a.surd_coefficient(), a.d_, -b.surd_coefficient(), b.d_);
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

bool operator==(const QuadraticSurd& a, const QuadraticSurd& b) {
  return (a <=> b) == std::strong_ordering::equal;
}

std::string QuadraticSurd::to_string() const {
  if (is_rational()) return to_fraction_string(rational_part());
  std::string s = "(";
  if (p_ != 0) s += p_.get_str();
  if (q_ < 0) {
    s += "-";
  } else if (p_ != 0) {
    s += "+";
  }
  BigInt mag = abs(q_);
  if (mag != 1) s += mag.get_str() + "*";
  s += "sqrt(" + d_.get_str() + "))";
  if (r_ != 1) s += "/" + r_.get_str();
  return s;
}

std::string QuadraticSurd::to_decimal(int digits) const {
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  BigInt scaled = floor_parts(p_ * scale, q_ * scale, r_, d_);
  return cfk::to_decimal(make_rational(scaled, scale), digits);
}

double QuadraticSurd::approx() const { return std::stod(to_decimal(20)); }

}  // namespace cfk
