#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cfk/big.hpp"
#include "cfk/expansions.hpp"

namespace cfk {

// Closed interval [lo, hi] with exact rational endpoints, used for
// transcendental or otherwise non-eventually-periodic quantities.
struct Enclosure {
  BigRational lo;
  BigRational hi;

  BigRational width() const { return hi - lo; }
  BigRational midpoint() const { return (lo + hi) / 2; }
  bool contains(const BigRational& x) const { return lo <= x && x <= hi; }
  bool contains(const Enclosure& e) const { return lo <= e.lo && e.hi <= hi; }

  /// Decimal digits shared by both endpoints, after "0." or the integer part.
  std::string common_decimal(int max_digits) const;

  /// Binary digits b_1..b_n when lo and hi agree on all of them.
  std::optional<std::vector<Bit>> binary_digits(std::size_t n) const;
};

}  // namespace cfk
