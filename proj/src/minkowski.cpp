#include "cfk/minkowski.hpp"

#include <tuple>

#include "cfk/errors.hpp"

namespace cfk {

BinaryExpansion question_mark(const ContinuedFractionExpansion& x) {
  if (x.is_rational()) {
    BigRational sum = 0;
    std::uint64_t partial = 0;
    int sign = 1;
    for (Quotient a : x.preperiod()) {
      partial += a;
      sum += sign * make_rational(1, pow2(partial - 1));
      sign = -sign;
    }
    return BinaryExpansion::from_rational(sum);
  }
  const Lasso<Quotient>& terms = x.terms();
  // (normalized index, symbol of the block, first block?)
  using State = std::tuple<std::size_t, Bit, bool>;
  auto bits = unroll<Bit>(State{0, 0, true}, [&](const State& st) {
    auto [idx, symbol, first] = st;
    Quotient len = *terms.at(idx) - (first ? 1 : 0);
    std::vector<Bit> block(len, symbol);
    return std::pair{std::move(block),
                     std::optional<State>(State{terms.normalize(idx + 1), symbol ^ 1, false})};
  });
  return BinaryExpansion::from_bits(std::move(bits.prefix), std::move(bits.cycle));
}

namespace {

std::vector<Quotient> run_lengths(const std::vector<Bit>& word) {
  std::vector<Quotient> runs;
  Bit current = 0;
  Quotient len = 0;
  for (Bit b : word) {
    if (b == current) {
      ++len;
    } else {
      runs.push_back(len);
      current = b;
      len = 1;
    }
  }
  runs.push_back(len);
  return runs;
}

}  // namespace

ContinuedFractionExpansion question_mark_inv(const BinaryExpansion& b) {
  if (b.is_zero()) return {};
  if (b.is_one()) return ContinuedFractionExpansion::from_terms({1});
  if (b.is_dyadic()) {
    // 0^(a1-1) 1^(a2) ... 1^(an): an even number of runs, the first one
    // (zeros) possibly empty.
    std::vector<Quotient> terms = run_lengths(b.preperiod());
    terms.front() += 1;
    return ContinuedFractionExpansion::from_terms(std::move(terms));
  }
  const Lasso<Bit>& seq = b.bits();
  auto run_from = [&](std::size_t i) {
    std::size_t j = i;
    while (*seq.at(j) == *seq.at(i)) ++j;
    return j - i;
  };
  // State: (initial?, run start). The first run is zeros and gets +1.
  using State = std::pair<bool, std::size_t>;
  auto terms = unroll<Quotient>(State{true, 0}, [&](const State& st) {
    auto [initial, idx] = st;
    if (initial) {
      if (*seq.at(0) == 1)
        return std::pair{std::vector<Quotient>{1}, std::optional<State>(State{false, 0})};
      std::size_t len = run_from(0);
      return std::pair{std::vector<Quotient>{len + 1},
                       std::optional<State>(State{false, seq.normalize(len)})};
    }
    std::size_t len = run_from(idx);
    return std::pair{std::vector<Quotient>{len},
                     std::optional<State>(State{false, seq.normalize(idx + len)})};
  });
  return ContinuedFractionExpansion::from_terms(std::move(terms.prefix), std::move(terms.cycle));
}

ContinuedFractionExpansion psi1(const ContinuedFractionExpansion& x) {
  std::vector<Quotient> prefix{1};
  prefix.insert(prefix.end(), x.preperiod().begin(), x.preperiod().end());
  return ContinuedFractionExpansion::from_terms(std::move(prefix), x.period());
}

ContinuedFractionExpansion psi1_inv(const ContinuedFractionExpansion& y) {
  if (y == ContinuedFractionExpansion::from_terms({2})) return ContinuedFractionExpansion::from_terms({1});
  if (y.is_zero() || *y.terms().at(0) != 1)
    throw DomainError("psi1_inv: " + y.to_string() + " is outside [1/2, 1]");
  return gauss_step(y);
}

BinaryExpansion phi(const ContinuedFractionExpansion& x) { return question_mark(psi1(x)); }

ContinuedFractionExpansion phi_inv(const BinaryExpansion& b) {
  if (compare(b, BigRational(1, 2)) < 0)
    throw DomainError("phi_inv: " + b.to_string() + " is below 1/2");
  return psi1_inv(question_mark_inv(b));
}

}  // namespace cfk
