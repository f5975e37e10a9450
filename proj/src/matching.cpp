#include "cfk/matching.hpp"

#include <map>

#include "cfk/bifurcation.hpp"
#include "cfk/errors.hpp"
#include "cfk/expansions.hpp"

namespace cfk {

MatchingExponents matching_exponents(const BigRational& r) {
  if (r <= 0 || r >= 1) throw DomainError("matching_exponents needs r in (0,1): " + r.get_str());
  auto [even, odd] = even_odd_forms(r);
  MatchingExponents e;
  e.r = r;
  for (std::size_t i = 0; i < even.size(); ++i) (i % 2 == 1 ? e.N : e.M) += even[i];
  return e;
}

QuadraticSurd talpha_step(const QuadraticSurd& alpha, const QuadraticSurd& x) {
  const QuadraticSurd one(BigRational(1));
  if (alpha.sign() <= 0 || alpha > one) throw DomainError("alpha must lie in (0,1]: " + alpha.to_string());
  if (x < alpha - one || x > alpha)
    throw DomainError("x = " + x.to_string() + " lies outside [alpha-1, alpha]");
  if (x.sign() == 0) return x;
  QuadraticSurd inv = (x.sign() < 0 ? -x : x).reciprocal();
  BigInt c = (inv + one - alpha).floor();
  return inv - QuadraticSurd(BigRational(c));
}

BigRational talpha_step(const BigRational& alpha, const BigRational& x) {
  return talpha_step(QuadraticSurd(alpha), QuadraticSurd(x)).rational_part();
}

namespace {

std::vector<QuadraticSurd> orbit(const QuadraticSurd& alpha, QuadraticSurd x, std::uint64_t steps) {
  std::vector<QuadraticSurd> out{x};
  for (std::uint64_t k = 0; k < steps; ++k) {
    x = talpha_step(alpha, x);
    out.push_back(x);
  }
  return out;
}

}  // namespace

std::optional<std::pair<std::uint64_t, std::uint64_t>> find_matching(const QuadraticSurd& alpha,
                                                                     std::uint64_t max_steps) {
  const QuadraticSurd one(BigRational(1));
  auto a = orbit(alpha, alpha, max_steps);
  auto b = orbit(alpha, alpha - one, max_steps);
  std::map<QuadraticSurd, std::uint64_t> first;
  for (std::uint64_t j = 1; j < b.size(); ++j) first.emplace(b[j], j);
  for (std::uint64_t i = 1; i < a.size(); ++i)
    if (auto it = first.find(a[i]); it != first.end()) return std::pair{i, it->second};
  return std::nullopt;
}

MatchingResult verify_matching(const BigRational& r, const QuadraticSurd& alpha,
                               std::uint64_t max_steps) {
  IntervalGap gap = quadratic_interval(r);
  QuadraticSurd lo = cf_surd(std::get<ContinuedFractionExpansion>(gap.left));
  QuadraticSurd hi = cf_surd(std::get<ContinuedFractionExpansion>(gap.right));
  if (alpha <= lo || alpha >= hi)
    throw DomainError("alpha = " + alpha.to_string() + " lies outside I_" + to_fraction_string(r));
  MatchingResult res;
  res.exponents = matching_exponents(r);
  res.alpha = alpha;
  res.steps = {res.exponents.N + 1, res.exponents.M + 1};
  const QuadraticSurd one(BigRational(1));
  auto a = orbit(alpha, alpha, res.steps.first);
  auto b = orbit(alpha, alpha - one, res.steps.second);
  res.holds = a.back() == b.back();
  res.first_match = find_matching(alpha, max_steps);
  return res;
}

std::vector<BigRational> matching_sample_points(const BigRational& r) {
  auto [even, odd] = even_odd_forms(r);
  std::vector<BigRational> out{r};
  // Convergents of even index lie below the limit and odd ones above, so
  // the truncation must have the parity of the form itself.
  std::vector<Quotient> a = even;
  a.insert(a.end(), even.begin(), even.end());
  std::vector<Quotient> b = odd;
  for (int k = 0; k < 2; ++k) b.insert(b.end(), odd.begin(), odd.end());
  out.push_back(finite_cf_value(a));
  out.push_back(finite_cf_value(b));
  return out;
}

}  // namespace cfk
