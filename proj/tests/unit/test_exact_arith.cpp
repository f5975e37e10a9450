#include <doctest.h>

#include <random>

#include "cfk/errors.hpp"
#include "cfk/expansions.hpp"

using namespace cfk;

namespace {
CfExpansion cf(const std::string& s) { return CfExpansion::parse(s); }
BinaryExpansion bin(const std::string& s) { return BinaryExpansion::parse(s); }
BigRational q(const std::string& s) { return parse_rational(s); }
}  // namespace

TEST_CASE("cf_value") {
  CHECK(std::get<BigRational>(cf_value(cf("[0;2,2]"))) == q("2/5"));
  auto g = std::get<QuadraticSurd>(cf_value(cf("[0;(1)]")));
  CHECK(g.to_decimal(4) == "0.6180");
  auto s3 = std::get<QuadraticSurd>(cf_value(cf("[0;(3)]")));
  CHECK(s3.to_decimal(6) == "0.302775");
  CHECK(s3 == (QuadraticSurd(-3, 1, 2, 13)));
}

TEST_CASE("parsing and printing round trip") {
  for (const char* s : {"[0]", "[0;1]", "[0;2,2]", "[0;(1)]", "[0;2,(1)]", "[0;3,(2,1)]"})
    CHECK(cf(s).to_string() == s);
  for (const char* s : {"0", "0.(1)", "0.11", "0.(10)", "0.1(10)", "0.(11010010)"})
    CHECK(bin(s).to_string() == s);
  CHECK(cf("[0;2,1]") == cf("[0;3]"));
  CHECK(cf("[0;(1,1)]") == cf("[0;(1)]"));
  CHECK(cf("[0;1,(1)]") == cf("[0;(1)]"));
  CHECK(bin("0.0(1)") == bin("0.1"));
  CHECK(bin("0.(1)").is_one());
  CHECK_THROWS_AS(cf("[0;0,2]"), ParseError);
  CHECK_THROWS_AS(cf("[1;2]"), ParseError);
  CHECK_THROWS_AS(bin("0.12"), ParseError);
}

TEST_CASE("maps") {
  CHECK(gauss_step(cf("[0;2,2]")) == cf("[0;2]"));
  CHECK(gauss_step(cf("[0;(2,1)]")) == cf("[0;(1,2)]"));
  CHECK(gauss_step(CfExpansion{}).is_zero());
  CHECK(farey_step(cf("[0;3,2]")) == cf("[0;2,2]"));
  CHECK(farey_step(cf("[0;1,2,2]")) == cf("[0;2,2]"));
  CHECK(tent_step(bin("0.(10)")) == bin("0.(10)"));
  CHECK(tent_step(bin("0.11")) == bin("0.1"));
  CHECK(tent_step(bin("0.011")) == bin("0.11"));
}

TEST_CASE("compare") {
  CHECK(compare(cf("[0;1,3]"), cf("[0;2,5]")) > 0);
  CHECK(compare(bin("0.(10)"), bin("0.11")) < 0);
  CHECK(compare(cf("[0;(2,1)]"), cf("[0;(3)]")) > 0);
  CHECK(compare(cf_value(cf("[0;(2,1)]")), cf_value(cf("[0;(3)]"))) > 0);
}

TEST_CASE("encode_kneading") {
  CHECK(encode_kneading(SymbolSequence{{}, {1}}).to_rational() == q("2/3"));
  CHECK(encode_kneading(SymbolSequence{{1}, {0}}).is_one());
  CHECK(encode_kneading(SymbolSequence{{}, {0}}).is_zero());
}

TEST_CASE("rational round trips for q <= 200") {
  for (int den = 1; den <= 200; ++den)
    for (int num = 0; num <= den; ++num) {
      BigRational r = make_rational(num, den);
      if (r.get_den() != den) continue;
      auto c = CfExpansion::from_rational(r);
      CHECK(std::get<BigRational>(cf_value(c)) == r);
      CHECK(CfExpansion::parse(c.to_string()) == c);
      auto b = BinaryExpansion::from_rational(r);
      CHECK(b.to_rational() == r);
      CHECK(BinaryExpansion::parse(b.to_string()) == b);
    }
}

TEST_CASE("induced map: F^floor(1/x) = G on rationals") {
  for (int den = 1; den <= 200; ++den)
    for (int num = 1; num <= den; ++num) {
      BigRational r = make_rational(num, den);
      if (r.get_den() != den) continue;
      auto x = CfExpansion::from_rational(r);
      auto y = x;
      BigInt n = floor_of(1 / r);
      for (unsigned long k = 0; k < n.get_ui(); ++k) y = farey_step(y);
      REQUIRE(y == gauss_step(x));
    }
}

TEST_CASE("kneading coding conjugates the shift and the tent map") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Bit> pre(rng() % 6), cyc(1 + rng() % 6);
    for (auto& b : pre) b = rng() & 1;
    for (auto& b : cyc) b = rng() & 1;
    SymbolSequence s{pre, cyc};
    SymbolSequence shifted = s.drop_front();
    CHECK(encode_kneading(shifted) == tent_step(encode_kneading(s)));
  }
}

TEST_CASE("order embedding against exact values") {
  std::mt19937 rng(11);
  auto random_cf = [&] {
    std::vector<Quotient> pre(rng() % 4), cyc(rng() % 4);
    for (auto& a : pre) a = 1 + rng() % 5;
    for (auto& a : cyc) a = 1 + rng() % 5;
    if (cyc.empty() && !pre.empty() && pre.back() == 1) pre.back() = 2;
    return CfExpansion::from_terms(pre, cyc);
  };
  for (int trial = 0; trial < 10000; ++trial) {
    auto x = random_cf(), y = random_cf();
    REQUIRE(compare(x, y) == compare(cf_value(x), cf_value(y)));
  }
  for (int trial = 0; trial < 2000; ++trial) {
    BigRational a = make_rational(rng() % 97, 97), b = make_rational(rng() % 64, 64);
    auto ba = BinaryExpansion::from_rational(a), bb = BinaryExpansion::from_rational(b);
    REQUIRE(compare(ba, bb) == (sign_of(a - b) <=> 0));
  }
}

TEST_CASE("even and odd length forms") {
  auto [even, odd] = even_odd_forms(q("1/2"));
  CHECK(even == std::vector<Quotient>{1, 1});
  CHECK(odd == std::vector<Quotient>{2});
  auto [e3, o3] = even_odd_forms(q("1/3"));
  CHECK(e3 == std::vector<Quotient>{2, 1});
  CHECK(o3 == std::vector<Quotient>{3});
}

TEST_CASE("quadratic surd arithmetic") {
  QuadraticSurd a(-1, 1, 1, 2);  // sqrt2 - 1
  CHECK(a.floor() == 0);
  CHECK((a * a + a * QuadraticSurd(BigRational(2))) == QuadraticSurd(BigRational(1)));
  CHECK(a.reciprocal() == QuadraticSurd(1, 1, 1, 2));
  CHECK(QuadraticSurd(0, 1, 1, 12) == QuadraticSurd(0, 2, 1, 3));
  CHECK(QuadraticSurd(0, 1, 1, 2) < QuadraticSurd(0, 1, 1, 3));
  CHECK(cf_surd(CfExpansion::from_surd(QuadraticSurd(-3, 1, 2, 13))) == QuadraticSurd(-3, 1, 2, 13));
}
