#pragma once

#include <cmath>

#include "cfk/expansions.hpp"

namespace cfk {

/// Hoelder exponent of the question-mark function, log 2 / (2 log golden ratio).
/// Reported, never computed from data.
inline const double kQuestionMarkHolderExponent =
    std::log(2.0) / (2.0 * std::log((std::sqrt(5.0) + 1.0) / 2.0));

/// Minkowski's question-mark function.
///
/// Finite expansions use the alternating sum
///   ?(x) = sum_k (-1)^(k-1) 2^-(a_1 + ... + a_k - 1),
/// which is always dyadic. Infinite expansions are written as the block
/// word 0^(a1-1) 1^(a2) 0^(a3) ..., which is eventually periodic and
/// non-dyadic whenever the CF is.
BinaryExpansion question_mark(const ContinuedFractionExpansion& x);

/// Inverse of question_mark: run lengths of the binary digits become partial quotients.
ContinuedFractionExpansion question_mark_inv(const BinaryExpansion& b);

/// x -> 1/(1+x): prepends the partial quotient 1.
ContinuedFractionExpansion psi1(const ContinuedFractionExpansion& x);
/// Inverse branch on [1/2, 1]; throws DomainError elsewhere.
ContinuedFractionExpansion psi1_inv(const ContinuedFractionExpansion& y);

/// phi = ? o psi1, the orientation-reversing homeomorphism [0,1] -> [1/2,1]
/// carrying the continued-fraction bifurcation set onto the kneading one.
BinaryExpansion phi(const ContinuedFractionExpansion& x);
/// Throws DomainError for values below 1/2.
ContinuedFractionExpansion phi_inv(const BinaryExpansion& b);

}  // namespace cfk
