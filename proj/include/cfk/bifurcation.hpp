#pragma once

#include <string>
#include <variant>
#include <vector>

#include "cfk/expansions.hpp"

namespace cfk {

// Membership tests for the two bifurcation sets and the Allouche-Cosnard set.
// All inputs are eventually periodic, so every orbit closure is finite and
// each test is a complete decision.

/// Lambda = { x in [0,1] : T^k(x) <= x for all k }.
bool lambda_member(const BinaryExpansion& x);

/// Equivalent characterizations of the continued-fraction bifurcation set.
enum class ECriterion {
  gauss,      // G^k(x) >= x for all k
  farey,      // F^k(x) >= x for all k
  farey_psi,  // F^k(psi1(x)) <= psi1(x) for all k
};

bool e_member(const ContinuedFractionExpansion& x, ECriterion criterion = ECriterion::gauss);

/// Gamma = { x : 1 - x <= {2^k x} <= x for all k >= 0 }; 0 is excluded.
bool gamma_member(const BinaryExpansion& x);

enum class GapKind { quadratic, dyadic };

using Expansion = std::variant<ContinuedFractionExpansion, BinaryExpansion>;

// One connected component of the complement of a bifurcation set: a
// quadratic interval I_r (CF endpoints) or a dyadic interval J_d (binary
// endpoints). `depth` is the bisection generation, 0 when built directly.
struct IntervalGap {
  Expansion left;
  Expansion right;
  GapKind kind = GapKind::quadratic;
  BigRational pseudocenter;
  int depth = 0;
};

/// I_r for rational r in (0,1]; r = 1 gives the degenerate (g, 1].
IntervalGap quadratic_interval(const BigRational& r);

/// J_d = (0.(w*), 0.(w w^)) for the dyadic d = 0.w; d must lie in (0,1).
IntervalGap dyadic_interval(const BinaryExpansion& d);
IntervalGap dyadic_interval(const BigRational& d);

/// 0.a1...a(n-1)1 where n is the first index at which the expansions of
/// a < b differ (terminating expansion for a, all-ones tail for b).
BigRational binary_pseudocenter(const BinaryExpansion& a, const BinaryExpansion& b);

/// True iff I_r is a connected component of the complement of E, decided by
/// testing both endpoints for membership.
bool is_maximal(const BigRational& r);

enum class Space { lambda, e };

/// All gaps produced by the first `depth` bisection generations, sorted by
/// left endpoint. The E side is the lambda run mapped back through phi_inv.
std::vector<IntervalGap> bisect_enumerate(Space space, int depth);

enum class PointClass { isolated, limit };

/// Purely periodic members of E are isolated iff their minimal period is odd.
PointClass classify_e_point(const ContinuedFractionExpansion& x);

std::string to_string(const Expansion& e);
std::string to_decimal(const Expansion& e, int digits);
std::strong_ordering compare(const Expansion& a, const Expansion& b);
std::string to_string(GapKind kind);
std::string to_string(PointClass c);

}  // namespace cfk
