#pragma once

#include "cfk/enclosure.hpp"

namespace cfk {

/// Positive root of t^K - (t^(K-1) + ... + t + 1), bracketed in [1,2] and
/// narrowed by exact dyadic bisection. K >= 2.
Enclosure multinacci_root(unsigned K, const BigRational& target_width);

/// log2 of the multinacci enclosure, rounded outward.
Enclosure dim_CK(unsigned K, const BigRational& target_width);

/// Number of n-digit binary words starting with 1 without K+1 equal
/// consecutive digits. Words of length n <= K+1 are enumerated directly
/// (K <= 24) and seed the recurrence a(n+K) = a(n+K-1) + ... + a(n).
BigInt count_aK(unsigned K, unsigned n);

/// Brute-force count over all 2^(n-1) words; n <= 30.
BigInt count_aK_enumerate(unsigned K, unsigned n);

/// Asymptotic 1 - 6/(pi^2 K) for the continued-fraction side. Not rigorous.
double e_side_reference(unsigned K);

struct DimensionReport {
  unsigned K = 0;
  Enclosure lambda_K;
  Enclosure dim;
  Enclosure sandwich_low;  // dim C_(K-1); C_1 is a single point, dimension 0
  Enclosure sandwich_high;  // dim C_K
  double e_reference = 0;
};

DimensionReport dimension_report(unsigned K, const BigRational& target_width);

}  // namespace cfk
