#include "cfk/bifurcation.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "cfk/errors.hpp"
#include "cfk/minkowski.hpp"

namespace cfk {

namespace {

// Walks x, step(x), step^2(x), ... until a repeat and returns false as soon
// as `ok` fails on some iterate with k >= 1.
template <class T, class Step, class Ok>
bool orbit_all(const T& x, Step step, Ok ok) {
  std::set<std::string> seen;
  T y = step(x);
  while (true) {
    if (!ok(y)) return false;
    if (!seen.insert(y.to_string()).second) return true;
    y = step(y);
  }
}

BinaryExpansion half() { return BinaryExpansion::from_bits({1}); }

}  // namespace

bool lambda_member(const BinaryExpansion& x) {
  return orbit_all(x, tent_step, [&](const BinaryExpansion& y) { return compare(y, x) <= 0; });
}

bool e_member(const ContinuedFractionExpansion& x, ECriterion criterion) {
  switch (criterion) {
    case ECriterion::gauss:
      return orbit_all(x, gauss_step,
                       [&](const ContinuedFractionExpansion& y) { return compare(y, x) >= 0; });
    case ECriterion::farey:
      return orbit_all(x, farey_step,
                       [&](const ContinuedFractionExpansion& y) { return compare(y, x) >= 0; });
    case ECriterion::farey_psi: {
      ContinuedFractionExpansion y0 = psi1(x);
      return orbit_all(y0, farey_step,
                       [&](const ContinuedFractionExpansion& y) { return compare(y, y0) <= 0; });
    }
  }
  throw std::logic_error("unknown criterion");
}

bool gamma_member(const BinaryExpansion& x) {
  if (x.is_zero()) return false;
  auto ok = [&](const BinaryExpansion& y) {
    BinaryExpansion c = complement(y);
    const BinaryExpansion& larger = compare(y, c) >= 0 ? y : c;
    return compare(larger, x) <= 0;
  };
  if (!ok(x)) return false;
  return orbit_all(x, doubling_step, ok);
}

IntervalGap quadratic_interval(const BigRational& r) {
  if (r <= 0 || r > 1) throw DomainError("quadratic_interval needs r in (0,1]: " + r.get_str());
  IntervalGap gap;
  gap.kind = GapKind::quadratic;
  gap.pseudocenter = r;
  if (r == 1) {
    gap.left = ContinuedFractionExpansion::from_terms({}, {1});
    gap.right = ContinuedFractionExpansion::from_terms({1});
    return gap;
  }
  std::vector<Quotient> terms = ContinuedFractionExpansion::from_rational(r).preperiod();
  std::vector<Quotient> other = terms;
  other.back() -= 1;
  other.push_back(1);
  auto a = ContinuedFractionExpansion::from_terms({}, terms);
  auto b = ContinuedFractionExpansion::from_terms({}, other);
  if (compare(a, b) > 0) std::swap(a, b);
  gap.left = a;
  gap.right = b;
  return gap;
}

IntervalGap dyadic_interval(const BinaryExpansion& d) {
  if (!d.is_dyadic() || d.is_zero() || d.is_one())
    throw DomainError("dyadic_interval needs a dyadic in (0,1): " + d.to_string());
  std::vector<Bit> word = d.preperiod();
  if (word.empty()) throw std::logic_error("nonzero dyadic with an empty expansion");
  std::vector<Bit> star = word;
  star.back() = 0;
  std::vector<Bit> doubled = word;
  for (Bit b : word) doubled.push_back(b ^ 1);
  IntervalGap gap;
  gap.kind = GapKind::dyadic;
  gap.pseudocenter = d.to_rational();
  gap.left = BinaryExpansion::from_bits({}, star);
  gap.right = BinaryExpansion::from_bits({}, doubled);
  return gap;
}

IntervalGap dyadic_interval(const BigRational& d) {
  BigInt den = d.get_den();
  if (mpz_popcount(den.get_mpz_t()) != 1) throw DomainError("not a dyadic rational: " + d.get_str());
  return dyadic_interval(BinaryExpansion::from_rational(d));
}

BigRational binary_pseudocenter(const BinaryExpansion& a, const BinaryExpansion& b) {
  if (compare(a, b) >= 0)
    throw DomainError("binary_pseudocenter needs a < b: " + a.to_string() + ", " + b.to_string());
  SymbolSequence sa = a.sequence();
  SymbolSequence sb = b.sequence();
  if (b.bits().finite()) {
    // 0.w1 -> 0.w0111...
    std::vector<Bit> w = b.preperiod();
    w.back() = 0;
    sb = SymbolSequence{w, {1}};
  }
  BigRational d = 0;
  BigRational weight(1, 2);
  for (std::size_t i = 0;; ++i) {
    Bit x = *sa.at(i), y = *sb.at(i);
    if (x != y) return d + weight;
    if (x) d += weight;
    weight /= 2;
  }
}

bool is_maximal(const BigRational& r) {
  if (r == 1) return true;
  IntervalGap gap = quadratic_interval(r);
  return e_member(std::get<ContinuedFractionExpansion>(gap.left)) &&
         e_member(std::get<ContinuedFractionExpansion>(gap.right));
}

std::vector<IntervalGap> bisect_enumerate(Space space, int depth) {
  if (depth < 1) throw DomainError("bisect_enumerate needs depth >= 1");
  struct Component {
    BinaryExpansion a, b;
  };
  std::vector<Component> components{{BinaryExpansion{}, BinaryExpansion::one()}};
  std::vector<IntervalGap> gaps;
  for (int gen = 1; gen <= depth; ++gen) {
    std::vector<Component> next;
    for (const Component& c : components) {
      if (c.a == c.b) continue;  // isolated point of Lambda
      IntervalGap gap = dyadic_interval(BinaryExpansion::from_rational(binary_pseudocenter(c.a, c.b)));
      gap.depth = gen;
      const auto& lo = std::get<BinaryExpansion>(gap.left);
      const auto& hi = std::get<BinaryExpansion>(gap.right);
      if (compare(c.a, lo) > 0 || compare(hi, c.b) > 0)
        throw std::logic_error("bisection gap escapes its component");
      next.push_back({c.a, lo});
      next.push_back({hi, c.b});
      gaps.push_back(std::move(gap));
    }
    components = std::move(next);
  }
  if (space == Space::e) {
    for (IntervalGap& gap : gaps) {
      auto lo = std::get<BinaryExpansion>(gap.left);
      auto hi = std::get<BinaryExpansion>(gap.right);
      // J_(1/2) = (0, 2/3) meets the image of phi only in [1/2, 2/3).
      if (compare(lo, half()) < 0) lo = half();
      IntervalGap mapped;
      mapped.kind = GapKind::quadratic;
      mapped.depth = gap.depth;
      mapped.left = phi_inv(hi);
      mapped.right = phi_inv(lo);
      mapped.pseudocenter =
          finite_cf_value(phi_inv(BinaryExpansion::from_rational(gap.pseudocenter)).preperiod());
      gap = std::move(mapped);
    }
  }
  std::sort(gaps.begin(), gaps.end(),
            [](const IntervalGap& x, const IntervalGap& y) { return compare(x.left, y.left) < 0; });
  return gaps;
}

PointClass classify_e_point(const ContinuedFractionExpansion& x) {
  if (!x.is_purely_periodic())
    throw DomainError("classify_e_point needs a purely periodic expansion: " + x.to_string());
  if (!e_member(x)) throw DomainError("classify_e_point: " + x.to_string() + " is not in E");
  return x.period().size() % 2 == 1 ? PointClass::isolated : PointClass::limit;
}

std::string to_string(const Expansion& e) {
  return std::visit([](const auto& v) { return v.to_string(); }, e);
}

std::string to_decimal(const Expansion& e, int digits) {
  if (const auto* cf = std::get_if<ContinuedFractionExpansion>(&e)) return cf_surd(*cf).to_decimal(digits);
  return cfk::to_decimal(std::get<BinaryExpansion>(e).to_rational(), digits);
}

std::strong_ordering compare(const Expansion& a, const Expansion& b) {
  if (a.index() != b.index()) throw DomainError("comparing a CF expansion with a binary one");
  if (const auto* cf = std::get_if<ContinuedFractionExpansion>(&a))
    return compare(*cf, std::get<ContinuedFractionExpansion>(b));
  return compare(std::get<BinaryExpansion>(a), std::get<BinaryExpansion>(b));
}

std::string to_string(GapKind kind) { return kind == GapKind::quadratic ? "quadratic" : "dyadic"; }

std::string to_string(PointClass c) { return c == PointClass::isolated ? "isolated" : "limit"; }

}  // namespace cfk
