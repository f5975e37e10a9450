#pragma once

#include <functional>
#include <optional>
#include <string>

#include "cfk/enclosure.hpp"
#include "cfk/expansions.hpp"

namespace cfk {

// A digit stream c_1 c_2 ... either eventually periodic (decided exactly)
// or produced by a generator (checked to a finite depth).
struct AdmissibleSequence {
  std::function<Bit(std::uint64_t)> digit;  // c_k for k >= 1
  std::optional<SymbolSequence> periodic;   // set for eventually periodic streams
  std::string label;

  static AdmissibleSequence from_expansion(const BinaryExpansion& b);
  static AdmissibleSequence from_symbols(const SymbolSequence& s);
  /// c_k = t_k for k >= 1: the Thue-Morse sequence without its first term.
  static AdmissibleSequence shifted_thue_morse();
};

/// For every k >= 1: sigma^k(c) < c when c_k = 0 and sigma^k(c) > c^ when
/// c_k = 1, in the strict lexicographic order. Complete on eventually
/// periodic input; uses the canonical digit stream.
bool is_admissible(const BinaryExpansion& c);
bool is_admissible(const SymbolSequence& c);

struct AdmissibilityReport {
  bool admissible = false;
  bool complete = false;    // true for eventually periodic input
  std::uint64_t depth = 0;  // indices and comparison length checked otherwise
};

AdmissibilityReport check_admissible(const AdmissibleSequence& c, std::uint64_t depth);

struct UnivoqueResult {
  Enclosure q;
  std::uint64_t depth = 0;  // series terms used; 0 when summed in closed form
};

/// Root q in (1,2] of sum_{k>=1} c_k q^-k = 1 by bisection. Throws
/// DomainError for sequences with fewer than two ones (no root above 1).
UnivoqueResult univoque_q(const AdmissibleSequence& c, const BigRational& target_width);

/// sum_{k=1}^{m} c_k q^-k.
BigRational partial_sum(const AdmissibleSequence& c, const BigRational& q, std::uint64_t m);

/// q for the digit stream of tau in Lambda; purely periodic tau has no
/// univoque partner and is rejected.
UnivoqueResult lambda_to_univoque(const BinaryExpansion& tau, const BigRational& target_width);

}  // namespace cfk
