#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace cfk {

using BigInt = mpz_class;
// mpq_class keeps values reduced with a positive denominator after every
// arithmetic operation; construction from raw parts must call canonicalize().
using BigRational = mpq_class;

BigRational make_rational(const BigInt& num, const BigInt& den);

/// "p/q" for non-integers, "p" for integers.
std::string to_fraction_string(const BigRational& q);

/// Parses "p/q", "p", "-p/q" or a finite decimal such as "0.375".
/// Throws ParseError on malformed input or a zero denominator.
BigRational parse_rational(std::string_view text);

/// Truncates toward negative infinity to `digits` decimals, e.g. 2/3 -> "0.666".
std::string to_decimal(const BigRational& q, int digits);

BigInt pow2(std::uint64_t e);
BigRational pow10_inverse(int digits);

BigInt floor_of(const BigRational& q);
BigInt ceil_of(const BigRational& q);

inline int sign_of(const BigRational& q) { return sgn(q); }
inline int sign_of(const BigInt& z) { return sgn(z); }

double to_double(const BigRational& q);

}  // namespace cfk
