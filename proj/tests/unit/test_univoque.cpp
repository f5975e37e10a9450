#include <doctest.h>

#include "cfk/bifurcation.hpp"
#include "cfk/cascades.hpp"
#include "cfk/errors.hpp"
#include "cfk/univoque.hpp"

using namespace cfk;

namespace {
BinaryExpansion bin(const std::string& s) { return BinaryExpansion::parse(s); }
const BigRational kWidth = make_rational(1, BigInt("10000000000"));

// Truncated periodic approximant of the shifted Thue-Morse stream:
// t_1 ... t_(2^n - 1), then 0, repeated.
SymbolSequence tm_approximant(unsigned n) {
  std::vector<Bit> w;
  for (std::uint64_t k = 1; k < (std::uint64_t{1} << n); ++k) w.push_back(thue_morse(k));
  w.push_back(0);
  return {{}, w};
}
}  // namespace

TEST_CASE("admissibility examples") {
  CHECK_FALSE(is_admissible(bin("0.(10)")));
  CHECK(is_admissible(BinaryExpansion::one()));
  CHECK(is_admissible(bin("0.1(10)")));
  auto tm = AdmissibleSequence::shifted_thue_morse();
  for (std::uint64_t depth : {8, 32, 128}) {
    auto rep = check_admissible(tm, depth);
    CHECK(rep.admissible);
    CHECK_FALSE(rep.complete);
  }
}

TEST_CASE("univoque q") {
  auto two = univoque_q(AdmissibleSequence::from_expansion(BinaryExpansion::one()), kWidth);
  CHECK(two.q.contains(2));
  auto q1 = univoque_q(AdmissibleSequence::shifted_thue_morse(), make_rational(1, 10000000));
  CHECK(q1.q.width() < BigRational(1, 1000000));
  CHECK(q1.q.common_decimal(10).rfind("1.78723", 0) == 0);
  BigRational residual = partial_sum(AdmissibleSequence::shifted_thue_morse(), q1.q.midpoint(), 128) - 1;
  CHECK(std::abs(to_double(residual)) < 1e-6);
  CHECK_THROWS_AS(univoque_q(AdmissibleSequence::from_expansion(BinaryExpansion{}), kWidth), DomainError);

  auto c = AdmissibleSequence::from_expansion(bin("0.11(10)"));
  auto r = univoque_q(c, make_rational(1, BigInt("1000000000000000")));
  BigRational res = partial_sum(c, r.q.midpoint(), 128) - 1;
  CHECK(std::abs(to_double(res)) < 1e-10);
}

TEST_CASE("lambda_to_univoque") {
  CHECK_THROWS_AS(lambda_to_univoque(bin("0.(10)"), kWidth), DomainError);
  CHECK_THROWS_AS(lambda_to_univoque(bin("0.11"), kWidth), DomainError);
  auto a = lambda_to_univoque(bin("0.1(10)"), kWidth);
  auto b = lambda_to_univoque(bin("0.11(10)"), kWidth);
  CHECK(a.q.hi < b.q.lo);
}

TEST_CASE("Thue-Morse approximants converge to q1 from below") {
  BigRational prev = 1;
  for (unsigned n = 2; n <= 6; ++n) {
    auto c = AdmissibleSequence::from_symbols(tm_approximant(n));
    auto r = univoque_q(c, kWidth);
    CHECK(r.q.lo > prev);
    CHECK(r.q.hi < BigRational(17873, 10000));
    prev = r.q.lo;
  }
}

TEST_CASE("admissible iff in Gamma and not purely periodic, or all ones") {
  // preperiod + period <= 10
  for (unsigned total = 1; total <= 10; ++total)
    for (unsigned per = 1; per <= total; ++per) {
      unsigned pre = total - per;
      for (unsigned w = 0; w < (1u << total); ++w) {
        std::vector<Bit> p(pre), c(per);
        for (unsigned i = 0; i < total; ++i) ((i < pre) ? p[i] : c[i - pre]) = (w >> (total - 1 - i)) & 1;
        auto b = BinaryExpansion::from_bits(p, c);
        if (b.is_zero()) continue;
        bool gamma = gamma_member(b);
        REQUIRE(gamma == lambda_member(b));
        bool expected = b.is_one() || (gamma && !b.is_purely_periodic() && !b.is_dyadic());
        REQUIRE_MESSAGE(is_admissible(b) == expected, b.to_string());
      }
    }
}
