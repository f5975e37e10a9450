#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "cfk/big.hpp"
#include "cfk/lasso.hpp"
#include "cfk/quadratic_surd.hpp"

namespace cfk {

using Quotient = std::uint64_t;
using Bit = std::uint8_t;

// A raw 0/1 symbol stream. Unlike BinaryExpansion it is never rewritten, so
// 0.0111... and 0.1000... stay distinct sequences.
using SymbolSequence = Lasso<Bit>;

// x = [0; a1, a2, ...] in [0, 1], eventually periodic.
//
// Canonical form: finite expansions end in a quotient >= 2, except [0;1]
// which is the value 1; the empty expansion is 0. Periods are minimal and
// preperiods shortest, so equal values have equal representations.
class ContinuedFractionExpansion {
 public:
  ContinuedFractionExpansion() = default;

  /// Throws DomainError if any quotient is 0.
  static ContinuedFractionExpansion from_terms(std::vector<Quotient> prefix,
                                               std::vector<Quotient> cycle = {});
  static ContinuedFractionExpansion from_rational(const BigRational& x);
  static ContinuedFractionExpansion from_surd(const QuadraticSurd& x);
  /// "[0;2,1,(2,1)]"; "[0]" and "[0;]" are zero.
  static ContinuedFractionExpansion parse(std::string_view text);

  const Lasso<Quotient>& terms() const { return terms_; }
  const std::vector<Quotient>& preperiod() const { return terms_.prefix; }
  const std::vector<Quotient>& period() const { return terms_.cycle; }

  bool is_zero() const { return terms_.prefix.empty() && terms_.cycle.empty(); }
  bool is_rational() const { return terms_.finite(); }
  bool is_purely_periodic() const { return terms_.prefix.empty() && !terms_.cycle.empty(); }

  std::string to_string() const;

  friend bool operator==(const ContinuedFractionExpansion&,
                         const ContinuedFractionExpansion&) = default;

 private:
  explicit ContinuedFractionExpansion(Lasso<Quotient> t) : terms_(std::move(t)) {}
  void canonicalize();

  Lasso<Quotient> terms_;
};

using CfExpansion = ContinuedFractionExpansion;

// x = 0.b1 b2 ... in [0, 1], eventually periodic.
//
// Canonical form: a trailing period (1) is carried away and a trailing
// period (0) is dropped, so dyadics are finite. The value 1 is the single
// exception and is stored as 0.(1).
class BinaryExpansion {
 public:
  BinaryExpansion() = default;

  static BinaryExpansion from_bits(std::vector<Bit> prefix, std::vector<Bit> cycle = {});
  static BinaryExpansion from_sequence(const SymbolSequence& s);
  static BinaryExpansion from_rational(const BigRational& x);
  /// "0.1101(10)", "0" and "0.(1)".
  static BinaryExpansion parse(std::string_view text);
  static BinaryExpansion one() { return from_bits({}, {1}); }

  const Lasso<Bit>& bits() const { return bits_; }
  const std::vector<Bit>& preperiod() const { return bits_.prefix; }
  const std::vector<Bit>& period() const { return bits_.cycle; }
  /// Digit b_{i+1} (0-based index); 0 past the end of a dyadic.
  Bit bit(std::size_t i) const { return bits_.at(i).value_or(0); }

  bool is_zero() const { return bits_.prefix.empty() && bits_.cycle.empty(); }
  bool is_one() const { return bits_.prefix.empty() && bits_.cycle == std::vector<Bit>{1}; }
  bool is_dyadic() const { return bits_.finite() || is_one(); }
  bool is_purely_periodic() const { return bits_.prefix.empty() && !bits_.cycle.empty(); }

  BigRational to_rational() const;
  std::string to_string() const;
  /// The digit stream as a symbol sequence (dyadics end in zeros).
  SymbolSequence sequence() const;

  friend bool operator==(const BinaryExpansion&, const BinaryExpansion&) = default;

 private:
  explicit BinaryExpansion(Lasso<Bit> b) : bits_(std::move(b)) {}
  void canonicalize();

  Lasso<Bit> bits_;
};

// Exact value of an expansion: rational for finite CFs, quadratic surd for
// periodic ones.
using ExactReal = std::variant<BigRational, QuadraticSurd>;

ExactReal cf_value(const ContinuedFractionExpansion& cf);
QuadraticSurd as_surd(const ExactReal& x);
QuadraticSurd cf_surd(const ContinuedFractionExpansion& cf);
std::string to_string(const ExactReal& x);
std::string to_decimal(const ExactReal& x, int digits);

/// Gauss map G([0;a1,a2,...]) = [0;a2,...], G(0) = 0.
ContinuedFractionExpansion gauss_step(const ContinuedFractionExpansion& cf);
/// Farey map: decrement a1, or drop it when a1 = 1.
ContinuedFractionExpansion farey_step(const ContinuedFractionExpansion& cf);
/// Tent map: T(0.0w) = 0.w, T(0.1w) = 0.(complement of w).
BinaryExpansion tent_step(const BinaryExpansion& b);
/// Doubling map {2x}; maps the value 1 to 0.
BinaryExpansion doubling_step(const BinaryExpansion& b);
BinaryExpansion complement(const BinaryExpansion& b);

/// Alternating lexicographic order on partial quotients.
std::strong_ordering compare(const ContinuedFractionExpansion& x,
                             const ContinuedFractionExpansion& y);
/// Plain lexicographic order on canonical digit streams.
std::strong_ordering compare(const BinaryExpansion& x, const BinaryExpansion& y);
std::strong_ordering compare(const ExactReal& x, const ExactReal& y);
std::strong_ordering compare(const ContinuedFractionExpansion& x, const ExactReal& y);
std::strong_ordering compare(const BinaryExpansion& x, const BigRational& y);

/// Lexicographic order on symbol sequences, optionally complementing each side.
std::strong_ordering compare_sequences(const SymbolSequence& x, bool complement_x,
                                       const SymbolSequence& y, bool complement_y);

SymbolSequence shift(const SymbolSequence& s);

/// Kneading coordinate: t_k = s_1 + ... + s_k (mod 2), returned as a number.
BinaryExpansion encode_kneading(const SymbolSequence& s);

/// The two CF expansions of a rational in (0, 1]: (even length, odd length).
std::pair<std::vector<Quotient>, std::vector<Quotient>> even_odd_forms(const BigRational& r);

/// Exact value of a finite quotient list [0; a1, ..., an].
BigRational finite_cf_value(const std::vector<Quotient>& terms);

}  // namespace cfk
