#include <doctest.h>

#include <random>

#include "cfk/bifurcation.hpp"
#include "cfk/errors.hpp"
#include "cfk/lamination.hpp"

using namespace cfk;

namespace {
BigRational q(const std::string& s) { return parse_rational(s); }
BinaryExpansion binq(const std::string& s) { return BinaryExpansion::from_rational(q(s)); }
Leaf leaf(const std::string& a, const std::string& b) { return Leaf(q(a), q(b)); }

BigRational tent(const BigRational& x) { return x <= BigRational(1, 2) ? BigRational(2 * x) : BigRational(2 - 2 * x); }
}  // namespace

TEST_CASE("leaf lengths and images") {
  CHECK(leaf_length(leaf("5/12", "7/12")) == q("1/6"));
  CHECK(leaf_length(leaf("1/3", "1/3")) == 0);
  CHECK(leaf_length(leaf("0", "1/2")) == q("1/2"));
  CHECK(leaf_image(leaf("5/12", "7/12")) == leaf("1/6", "5/6"));
  CHECK(leaf_length(leaf("1/6", "5/6")) == q("1/3"));
  CHECK(leaf_image(leaf("1/3", "2/3")) == leaf("1/3", "2/3"));
  CHECK(leaf_image(leaf("0", "0")) == leaf("0", "0"));
}

TEST_CASE("minor leaves from Lambda") {
  CHECK(minor_leaf_from_lambda(binq("5/6")) == leaf("5/12", "7/12"));
  CHECK(minor_leaf_from_lambda(binq("6/7")) == leaf("3/7", "4/7"));
  CHECK(minor_leaf_from_lambda(binq("2/3")) == leaf("1/3", "2/3"));
  CHECK_THROWS_AS(minor_leaf_from_lambda(binq("3/4")), DomainError);
}

TEST_CASE("Thurston criterion") {
  CHECK(is_minor_leaf(leaf("3/7", "4/7")));
  CHECK(is_minor_leaf(leaf("5/12", "7/12")));
  CHECK(is_minor_leaf(leaf("1/7", "2/7")));
  CHECK_FALSE(is_real_minor_leaf(leaf("1/7", "2/7")));
  CHECK(is_real_minor_leaf(leaf("3/7", "4/7")));
  CHECK_FALSE(is_minor_leaf(leaf("1/5", "4/5")));
}

TEST_CASE("real rays") {
  CHECK(real_ray_member(q("3/7")));
  CHECK(real_ray_member(q("5/12")));
  CHECK_FALSE(real_ray_member(q("1/5")));
}

TEST_CASE("length conjugacy on random rational leaves") {
  std::mt19937 rng(17);
  for (int i = 0; i < 10000; ++i) {
    unsigned den = 1 + rng() % 500;
    Leaf L(make_rational(rng() % den, den), make_rational(rng() % den, den));
    REQUIRE(2 * leaf_length(leaf_image(L)) == tent(2 * leaf_length(L)));
  }
}

TEST_CASE("real minor leaves correspond to Lambda") {
  for (int n = 1; n <= 10; ++n)
    for (unsigned w = 0; w < (1u << n); ++w) {
      std::vector<Bit> cyc(n);
      for (int i = 0; i < n; ++i) cyc[i] = (w >> (n - 1 - i)) & 1;
      auto x = BinaryExpansion::from_bits({}, cyc);
      if (!lambda_member(x)) continue;
      Leaf m = minor_leaf_from_lambda(x);
      REQUIRE_MESSAGE(is_real_minor_leaf(m), x.to_string());
      CHECK((m.b == 1 - m.a || m.degenerate()));
    }
  for (unsigned den = 1; den <= 127; den += 2)
    for (unsigned num = 1; 2 * num <= den; ++num) {
      BigRational a = make_rational(num, den);
      Leaf L(a, 1 - a);
      if (is_real_minor_leaf(L)) REQUIRE(lambda_member(BinaryExpansion::from_rational(2 * a)));
      if (lambda_member(BinaryExpansion::from_rational(2 * a))) REQUIRE(is_real_minor_leaf(L));
    }
}
