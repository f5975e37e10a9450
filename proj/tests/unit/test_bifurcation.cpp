#include <doctest.h>

#include <random>
#include <set>

#include "cfk/bifurcation.hpp"
#include "cfk/errors.hpp"
#include "cfk/minkowski.hpp"

using namespace cfk;

namespace {
CfExpansion cf(const std::string& s) { return CfExpansion::parse(s); }
BinaryExpansion bin(const std::string& s) { return BinaryExpansion::parse(s); }
BigRational q(const std::string& s) { return parse_rational(s); }
BinaryExpansion binq(const std::string& s) { return BinaryExpansion::from_rational(q(s)); }

BigRational value(const Expansion& e) { return std::get<BinaryExpansion>(e).to_rational(); }

// Oracle: T^k(x) <= x for k <= bound, by rational arithmetic.
bool lambda_bruteforce(BigRational x, int bound) {
  BigRational y = x;
  for (int k = 0; k < bound; ++k) {
    y = y < BigRational(1, 2) ? BigRational(2 * y) : BigRational(2 - 2 * y);
    if (y > x) return false;
  }
  return true;
}

std::vector<CfExpansion> random_cfs(unsigned seed, int n) {
  std::mt19937 rng(seed);
  std::vector<CfExpansion> out;
  for (int i = 0; i < n; ++i) {
    std::vector<Quotient> pre(rng() % 4), cyc(rng() % 5);
    for (auto& a : pre) a = 1 + rng() % 5;
    for (auto& a : cyc) a = 1 + rng() % 5;
    if (cyc.empty() && !pre.empty() && pre.back() == 1) pre.back() = 2;
    out.push_back(CfExpansion::from_terms(pre, cyc));
  }
  return out;
}
}  // namespace

TEST_CASE("lambda_member examples") {
  CHECK(lambda_member(binq("2/3")));
  CHECK_FALSE(lambda_member(binq("3/4")));
  CHECK(lambda_member(bin("0.(11010010)")));
  CHECK(lambda_member(binq("14/17")));
  CHECK(lambda_member(BinaryExpansion{}));
  CHECK(lambda_member(BinaryExpansion::one()));
}

TEST_CASE("e_member examples") {
  for (auto c : {ECriterion::gauss, ECriterion::farey, ECriterion::farey_psi}) {
    CHECK(e_member(cf("[0;(1)]"), c));
    CHECK(e_member(cf("[0;(2,1)]"), c));
    CHECK_FALSE(e_member(cf("[0;2,2]"), c));
    CHECK(e_member(CfExpansion{}, c));
  }
}

TEST_CASE("gamma_member examples") {
  CHECK(gamma_member(binq("2/3")));
  CHECK_FALSE(gamma_member(BinaryExpansion{}));
  CHECK_FALSE(gamma_member(binq("3/4")));
}

TEST_CASE("quadratic intervals") {
  auto i3 = quadratic_interval(q("1/3"));
  CHECK(to_string(i3.left) == "[0;(3)]");
  CHECK(to_string(i3.right) == "[0;(2,1)]");
  auto i1 = quadratic_interval(1);
  CHECK(to_string(i1.left) == "[0;(1)]");
  CHECK(to_string(i1.right) == "[0;1]");
  auto i2 = quadratic_interval(q("1/2"));
  CHECK(to_string(i2.left) == "[0;(2)]");
  CHECK(to_string(i2.right) == "[0;(1)]");
  CHECK_THROWS_AS(quadratic_interval(0), DomainError);
}

TEST_CASE("dyadic intervals") {
  auto j = dyadic_interval(q("13/16"));
  CHECK(value(j.left) == q("4/5"));
  CHECK(value(j.right) == q("14/17"));
  CHECK(to_string(j.left) == "0.(1100)");
  CHECK(to_string(j.right) == "0.(11010010)");
  auto h = dyadic_interval(q("1/2"));
  CHECK(value(h.left) == 0);
  CHECK(value(h.right) == q("2/3"));
  auto s = dyadic_interval(q("7/8"));
  CHECK(value(s.left) == q("6/7"));
  CHECK(value(s.right) == q("8/9"));
  CHECK_THROWS_AS(dyadic_interval(q("1/3")), DomainError);
  CHECK_THROWS_AS(dyadic_interval(BigRational(1)), DomainError);
}

TEST_CASE("binary pseudocenter") {
  CHECK(binary_pseudocenter(binq("4/5"), binq("14/17")) == q("13/16"));
  CHECK(binary_pseudocenter(BinaryExpansion{}, BinaryExpansion::one()) == q("1/2"));
  CHECK(binary_pseudocenter(binq("2/3"), BinaryExpansion::one()) == q("3/4"));
  CHECK_THROWS_AS(binary_pseudocenter(binq("2/3"), binq("2/3")), DomainError);
}

TEST_CASE("is_maximal") {
  CHECK(is_maximal(q("1/3")));
  CHECK_FALSE(is_maximal(q("8/25")));
  CHECK(is_maximal(q("1/2")));
  CHECK(is_maximal(1));
}

TEST_CASE("bisect_enumerate") {
  auto g1 = bisect_enumerate(Space::lambda, 1);
  REQUIRE(g1.size() == 1);
  CHECK(value(g1[0].left) == 0);
  CHECK(value(g1[0].right) == q("2/3"));
  auto g2 = bisect_enumerate(Space::lambda, 2);
  bool found = false;
  for (auto& g : g2)
    if (g.pseudocenter == q("3/4") && value(g.left) == q("2/3") && value(g.right) == q("4/5")) found = true;
  CHECK(found);
  auto e2 = bisect_enumerate(Space::e, 2);
  found = false;
  for (auto& g : e2)
    if (to_string(g.left) == "[0;(2)]" && to_string(g.right) == "[0;(1)]") found = true;
  CHECK(found);
}

TEST_CASE("gap consistency through depth 6") {
  auto gaps = bisect_enumerate(Space::lambda, 6);
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    auto l = std::get<BinaryExpansion>(gaps[i].left), r = std::get<BinaryExpansion>(gaps[i].right);
    CHECK(lambda_member(l));
    CHECK(lambda_member(r));
    CHECK_FALSE(lambda_member(BinaryExpansion::from_rational(gaps[i].pseudocenter)));
    CHECK(compare(l, r) < 0);
    if (i + 1 < gaps.size()) CHECK(compare(r, std::get<BinaryExpansion>(gaps[i + 1].left)) <= 0);
  }
  auto egaps = bisect_enumerate(Space::e, 6);
  CHECK(egaps.size() == gaps.size());
  for (std::size_t i = 0; i < egaps.size(); ++i) {
    auto l = std::get<CfExpansion>(egaps[i].left), r = std::get<CfExpansion>(egaps[i].right);
    CHECK(e_member(l));
    if (r != CfExpansion::from_terms({1})) CHECK(e_member(r));  // I_1 = (g, 1] contains 1
    CHECK_FALSE(e_member(CfExpansion::from_rational(egaps[i].pseudocenter)));
    CHECK(compare(l, r) < 0);
    CHECK(is_maximal(egaps[i].pseudocenter));
    if (i + 1 < egaps.size()) CHECK(compare(r, std::get<CfExpansion>(egaps[i + 1].left)) <= 0);
  }
}

TEST_CASE("classify_e_point") {
  CHECK(classify_e_point(cf("[0;(1)]")) == PointClass::isolated);
  CHECK(classify_e_point(cf("[0;(2,1)]")) == PointClass::limit);
  CHECK(classify_e_point(cf("[0;(3)]")) == PointClass::isolated);
  CHECK_THROWS_AS(classify_e_point(cf("[0;2,(1)]")), DomainError);
  CHECK_THROWS_AS(classify_e_point(cf("[0;(3,8)]")), DomainError);
}

TEST_CASE("phi transport and agreement of the E criteria") {
  for (const auto& x : random_cfs(5, 500)) {
    bool b = e_member(x, ECriterion::gauss);
    CHECK(b == e_member(x, ECriterion::farey));
    CHECK(b == e_member(x, ECriterion::farey_psi));
    CHECK(b == lambda_member(phi(x)));
  }
}

TEST_CASE("purely periodic binaries: oracle, and Gamma = Lambda minus 0") {
  for (int n = 1; n <= 12; ++n)
    for (unsigned w = 0; w < (1u << n); ++w) {
      std::vector<Bit> cyc(n);
      for (int i = 0; i < n; ++i) cyc[i] = (w >> (n - 1 - i)) & 1;
      auto b = BinaryExpansion::from_bits({}, cyc);
      bool member = lambda_member(b);
      REQUIRE(member == lambda_bruteforce(b.to_rational(), 3 * n + 2));
      if (!b.is_zero()) REQUIRE(member == gamma_member(b));
    }
}

TEST_CASE("dyadic interiors avoid Lambda") {
  for (int den = 2; den <= 256; den *= 2)
    for (int num = 1; num < den; num += 2) {
      auto j = dyadic_interval(make_rational(num, den));
      BigRational lo = value(j.left), hi = value(j.right);
      for (int n = 1; n <= 8; ++n)
        for (unsigned w = 0; w < (1u << n); ++w) {
          std::vector<Bit> cyc(n);
          for (int i = 0; i < n; ++i) cyc[i] = (w >> (n - 1 - i)) & 1;
          auto b = BinaryExpansion::from_bits({}, cyc);
          BigRational v = b.to_rational();
          if (v > lo && v < hi) REQUIRE_FALSE(lambda_member(b));
        }
    }
}
