#pragma once

#include <compare>
#include <string>

#include "cfk/big.hpp"

namespace cfk {

// (p + q*sqrt(D)) / r with r > 0 and gcd(p, q, r) = 1.
//
// D is reduced by extracting square factors. Trial division, a primality
// test and a bounded Pollard-Brent split handle every radical this library
// produces in practice; an unsplittable composite cofactor is kept as is,
// which leaves the value exact but D possibly not squarefree.
// Rational values are stored with q = 0 and D = 0.
class QuadraticSurd {
 public:
  QuadraticSurd() = default;
  explicit QuadraticSurd(const BigRational& value);
  QuadraticSurd(BigInt p, BigInt q, BigInt r, BigInt D);

  const BigInt& p() const { return p_; }
  const BigInt& q() const { return q_; }
  const BigInt& r() const { return r_; }
  const BigInt& radicand() const { return d_; }

  bool is_rational() const { return q_ == 0; }
  BigRational rational_part() const { return make_rational(p_, r_); }
  BigRational surd_coefficient() const { return make_rational(q_, r_); }

  int sign() const;
  BigInt floor() const;

  QuadraticSurd operator-() const;
  QuadraticSurd reciprocal() const;

  // Arithmetic requires equal radicands (or a rational operand).
  friend QuadraticSurd operator+(const QuadraticSurd& a, const QuadraticSurd& b);
  friend QuadraticSurd operator-(const QuadraticSurd& a, const QuadraticSurd& b);
  friend QuadraticSurd operator*(const QuadraticSurd& a, const QuadraticSurd& b);
  friend QuadraticSurd operator/(const QuadraticSurd& a, const QuadraticSurd& b);

  friend bool operator==(const QuadraticSurd& a, const QuadraticSurd& b);
  friend std::strong_ordering operator<=>(const QuadraticSurd& a, const QuadraticSurd& b);

  /// "(p+q*sqrt(D))/r", or "p/q" when rational.
  std::string to_string() const;
  std::string to_decimal(int digits) const;
  double approx() const;

 private:
  void normalize();

  BigInt p_{0};
  BigInt q_{0};
  BigInt r_{1};
  BigInt d_{0};
};

/// Splits n >= 0 as square * core; core is squarefree whenever every
/// composite cofactor could be factored.
void extract_square(const BigInt& n, BigInt& square_root_part, BigInt& core);

/// sign(x + y*sqrt(d)) for rationals x, y and d >= 0.
int sign_of_sum(const BigRational& x, const BigRational& y, const BigInt& d);

}  // namespace cfk
