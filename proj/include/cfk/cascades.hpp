#pragma once

#include <string>
#include <vector>

#include "cfk/enclosure.hpp"
#include "cfk/expansions.hpp"
#include "cfk/quadratic_surd.hpp"

namespace cfk {

using Word = std::vector<Bit>;

/// Parses a word over {0,1}; "" and "e" denote the empty word.
Word parse_word(const std::string& text);
std::string word_string(const Word& w);

/// Delta(eta) = eta 1 complement(eta).
Word delta(const Word& eta);

/// tau_j(eta) = 0.(Delta^j(eta) 0) built digit by digit.
BigRational tau_j_direct(const Word& eta, unsigned j);

/// Closed form P_j / Q_j with P_0 = int(eta 0), Q_j = 2^(2^j (p+1)) - 1 and
/// P_(j+1) = (P_j + 2) Q_j. Throws DomainError unless tau_0(eta) is in Lambda.
/// The tau_j, j >= 1, are themselves in Lambda only when eta 0 is a primitive
/// word: eta = 0 gives tau_0 = 0 but tau_1 = 2/5.
BigRational tau_j(const Word& eta, unsigned j);
/// d_j(eta) = (P_j + 1) / (Q_j + 1).
BigRational d_j(const Word& eta, unsigned j);

/// Xi(z) = prod_{k>=0} (1 - z^(2^k)) for 0 <= z < 1, enclosed in an interval
/// of width at most target_width.
Enclosure xi_eval(const BigRational& z, const BigRational& target_width);

/// 1 - (1 - d_0(eta)) Xi(2^-(p+1)), cross-checked against the increasing
/// sequence tau_j(eta).
Enclosure tau_infinity(const Word& eta, const BigRational& target_width);

/// Parity of the binary digit sum of n.
Bit thue_morse(std::uint64_t n);

struct PeriodicWindow {
  Word eta;
  std::vector<BigRational> tau;  // tau_0 .. tau_J
  std::vector<BigRational> d;    // d_0 .. d_J
  Enclosure tau_infinity;
};

PeriodicWindow periodic_window(const Word& eta, unsigned max_j, const BigRational& target_width);

struct CfCascade {
  BigRational r;
  std::vector<Quotient> S0;  // even-length expansion of r
  std::vector<Quotient> S1;  // odd-length expansion of r
  std::vector<Word> sigma;   // Sigma_0 .. Sigma_n over {0 = S0, 1 = S1}
  std::vector<QuadraticSurd> alpha;
  std::vector<ContinuedFractionExpansion> alpha_cf;
  Enclosure alpha_infinity;

  /// Partial quotients of Sigma_n with S0, S1 substituted.
  std::vector<Quotient> expand(const Word& symbols) const;
};

/// Sigma_0 = S0, Sigma_1 = S1, Sigma_(n+1) = Sigma_n with S1 -> S1 S0 and
/// S0 -> S1 S1; alpha_n = [0; (Sigma_n)]. The alpha_infinity enclosure uses
/// Sigma_(n+extra) for extra chosen so that its width is below target_width.
/// Throws DomainError unless r in (0,1) is the pseudocenter of a maximal interval.
CfCascade cf_cascade(const BigRational& r, unsigned n, const BigRational& target_width);

}  // namespace cfk
