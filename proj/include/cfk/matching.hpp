#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cfk/big.hpp"
#include "cfk/quadratic_surd.hpp"

namespace cfk {

// N = sum of even-indexed, M = sum of odd-indexed partial quotients of the
// even-length expansion of r.
struct MatchingExponents {
  std::uint64_t N = 0;
  std::uint64_t M = 0;
  BigRational r;
};

/// r must lie in (0,1).
MatchingExponents matching_exponents(const BigRational& r);

/// T_alpha(x) = 1/|x| - floor(1/|x| + 1 - alpha), T_alpha(0) = 0.
/// Throws DomainError unless alpha in (0,1] and x in [alpha-1, alpha].
QuadraticSurd talpha_step(const QuadraticSurd& alpha, const QuadraticSurd& x);
BigRational talpha_step(const BigRational& alpha, const BigRational& x);

struct MatchingResult {
  MatchingExponents exponents;
  QuadraticSurd alpha;
  bool holds = false;
  // Steps applied to alpha and to alpha - 1: (N+1, M+1).
  std::pair<std::uint64_t, std::uint64_t> steps;
  // First (i, j) with i, j >= 1 and T^i(alpha) = T^j(alpha-1), if any
  // within max_steps.
  std::optional<std::pair<std::uint64_t, std::uint64_t>> first_match;
};

/// Checks T^(N+1)(alpha) = T^(M+1)(alpha-1) exactly. alpha must lie in the
/// quadratic interval I_r; throws DomainError otherwise.
MatchingResult verify_matching(const BigRational& r, const QuadraticSurd& alpha,
                               std::uint64_t max_steps = 200);

/// First (i, j), i, j in [1, max_steps], with T^i(alpha) = T^j(alpha - 1),
/// smallest i first.
std::optional<std::pair<std::uint64_t, std::uint64_t>> find_matching(const QuadraticSurd& alpha,
                                                                     std::uint64_t max_steps);

/// alpha = r, [0; A A] for the even-length expansion A of r and [0; B B B]
/// for the odd-length one B; all three lie strictly inside I_r.
std::vector<BigRational> matching_sample_points(const BigRational& r);

}  // namespace cfk
