#include <doctest.h>

#include "cfk/bifurcation.hpp"
#include "cfk/errors.hpp"
#include "cfk/matching.hpp"

using namespace cfk;

namespace {
BigRational q(const std::string& s) { return parse_rational(s); }
QuadraticSurd sq(const std::string& s) { return QuadraticSurd(q(s)); }
}  // namespace

TEST_CASE("matching exponents") {
  auto e = matching_exponents(q("1/2"));
  CHECK(e.N == 1);
  CHECK(e.M == 1);
  e = matching_exponents(q("1/3"));
  CHECK(e.N == 1);
  CHECK(e.M == 2);
  e = matching_exponents(q("2/5"));
  CHECK(e.N == 2);
  CHECK(e.M == 2);
  CHECK_THROWS_AS(matching_exponents(1), DomainError);
}

TEST_CASE("talpha_step") {
  CHECK(talpha_step(BigRational(1), q("2/5")) == q("1/2"));
  CHECK(talpha_step(q("1/2"), BigRational(0)) == 0);
  CHECK(talpha_step(q("1/2"), q("-1/3")) == 0);
  CHECK_THROWS_AS(talpha_step(q("1/2"), q("3/4")), DomainError);
  CHECK_THROWS_AS(talpha_step(q("1/2"), q("-2/3")), DomainError);
}

TEST_CASE("verify_matching examples") {
  auto m = verify_matching(q("1/2"), sq("1/2"));
  CHECK(m.holds);
  CHECK(m.steps == std::pair<std::uint64_t, std::uint64_t>{2, 2});
  m = verify_matching(q("1/3"), sq("1/3"));
  CHECK(m.holds);
  CHECK(m.steps == std::pair<std::uint64_t, std::uint64_t>{2, 3});
  CHECK_THROWS_AS(verify_matching(q("1/3"), sq("1/2")), DomainError);
}

TEST_CASE("alpha = g: the orbits of g and g-1 meet immediately") {
  // T_g(g) = g - 1 and g - 1 is fixed, so both orbits coincide from step 1.
  QuadraticSurd g(-1, 1, 2, 5);
  QuadraticSurd gm1 = g - QuadraticSurd(BigRational(1));
  CHECK(talpha_step(g, g) == gm1);
  CHECK(talpha_step(g, gm1) == gm1);
  auto fm = find_matching(g, 50);
  REQUIRE(fm.has_value());
  CHECK(*fm == std::pair<std::uint64_t, std::uint64_t>{1, 1});
}

TEST_CASE("Gauss specialization") {
  for (int den = 2; den <= 60; ++den)
    for (int num = 1; num < den; ++num) {
      BigRational x = make_rational(num, den);
      auto g = gauss_step(CfExpansion::from_rational(x));
      CHECK(std::get<BigRational>(cf_value(g)) == talpha_step(BigRational(1), x));
    }
}

TEST_CASE("matching at every maximal pseudocenter with denominator <= 40") {
  int count = 0;
  for (int den = 2; den <= 40; ++den)
    for (int num = 1; num < den; ++num) {
      BigRational r = make_rational(num, den);
      if (r.get_den() != den || !is_maximal(r)) continue;
      ++count;
      for (const BigRational& a : matching_sample_points(r)) {
        auto m = verify_matching(r, QuadraticSurd(a));
        CHECK_MESSAGE(m.holds, "r = ", r.get_str(), " alpha = ", a.get_str());
      }
    }
  CHECK(count > 20);
}
