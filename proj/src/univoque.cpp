#include "cfk/univoque.hpp"

#include "cfk/bifurcation.hpp"
#include "cfk/cascades.hpp"
#include "cfk/errors.hpp"

namespace cfk {

AdmissibleSequence AdmissibleSequence::from_symbols(const SymbolSequence& s) {
  AdmissibleSequence c;
  c.periodic = s;
  c.digit = [s](std::uint64_t k) { return *s.at(k - 1); };
  c.label = BinaryExpansion::from_sequence(s).to_string();
  return c;
}

AdmissibleSequence AdmissibleSequence::from_expansion(const BinaryExpansion& b) {
  AdmissibleSequence c = from_symbols(b.sequence());
  c.label = b.to_string();
  return c;
}

AdmissibleSequence AdmissibleSequence::shifted_thue_morse() {
  AdmissibleSequence c;
  c.digit = [](std::uint64_t k) { return thue_morse(k); };
  c.label = "thue-morse";
  return c;
}

bool is_admissible(const SymbolSequence& c) {
  const std::size_t distinct = c.prefix.size() + std::max<std::size_t>(c.cycle.size(), 1);
  SymbolSequence tail = c;
  for (std::size_t k = 1; k <= distinct; ++k) {
    Bit ck = *c.at(k - 1);
    tail = tail.drop_front();
    auto order = ck ? compare_sequences(tail, false, c, true) : compare_sequences(tail, false, c, false);
    if (ck ? order <= 0 : order >= 0) return false;
  }
  return true;
}

bool is_admissible(const BinaryExpansion& c) { return is_admissible(c.sequence()); }

AdmissibilityReport check_admissible(const AdmissibleSequence& c, std::uint64_t depth) {
  if (c.periodic) return {is_admissible(*c.periodic), true, 0};
  // Compare sigma^k(c) with c (or its complement) on the first `depth`
  // digits; ties within the window count as unresolved, not as failures.
  for (std::uint64_t k = 1; k <= depth; ++k) {
    Bit ck = c.digit(k);
    for (std::uint64_t i = 1; i <= depth; ++i) {
      Bit t = c.digit(k + i);
      Bit ref = ck ? static_cast<Bit>(c.digit(i) ^ 1) : c.digit(i);
      if (t == ref) continue;
      if (ck ? t < ref : t > ref) return {false, false, depth};
      break;
    }
  }
  return {true, false, depth};
}

BigRational partial_sum(const AdmissibleSequence& c, const BigRational& q, std::uint64_t m) {
  const BigRational x = 1 / q;
  BigRational acc = 0;
  for (std::uint64_t k = m; k >= 1; --k) acc = (acc + c.digit(k)) * x;
  return acc;
}

namespace {

// Exact sum of the series for an eventually periodic stream.
BigRational periodic_sum(const SymbolSequence& s, const BigRational& q) {
  const BigRational x = 1 / q;
  BigRational head = 0, power = 1;
  for (Bit b : s.prefix) {
    power *= x;
    if (b) head += power;
  }
  BigRational cyc = 0, cpow = 1;
  for (Bit b : s.cycle) {
    cpow *= x;
    if (b) cyc += cpow;
  }
  return head + power * cyc / (1 - cpow);
}

std::size_t ones(const std::vector<Bit>& w) {
  std::size_t n = 0;
  for (Bit b : w) n += b;
  return n;
}

}  // namespace

UnivoqueResult univoque_q(const AdmissibleSequence& c, const BigRational& target_width) {
  if (target_width <= 0) throw DomainError("target width must be positive");
  if (c.periodic && ones(c.periodic->cycle) == 0 && ones(c.periodic->prefix) < 2)
    throw DomainError("univoque_q: " + c.label + " has no root q > 1");
  UnivoqueResult res;
  Enclosure e{1, 2};
  std::uint64_t m = 64;
  while (e.width() > target_width) {
    BigRational mid = e.midpoint();
    int side;  // sign of f(mid) - 1
    if (c.periodic) {
      side = sgn(periodic_sum(*c.periodic, mid) - 1);
    } else {
      while (true) {
        BigRational s = partial_sum(c, mid, m);
        BigRational tail = 1 / (mid - 1);
        for (std::uint64_t i = 0; i < m; ++i) tail /= mid;
        if (s > 1) {
          side = 1;
        } else if (s + tail < 1) {
          side = -1;
        } else {
          if (m >= (std::uint64_t{1} << 16)) throw DomainError("univoque_q: series depth exhausted");
          m *= 2;
          continue;
        }
        break;
      }
      res.depth = m;
    }
    if (side == 0) {
      e = {mid, mid};
      break;
    }
    (side > 0 ? e.lo : e.hi) = mid;
  }
  res.q = e;
  return res;
}

UnivoqueResult lambda_to_univoque(const BinaryExpansion& tau, const BigRational& target_width) {
  if (!lambda_member(tau)) throw DomainError(tau.to_string() + " is not in Lambda");
  if (tau.is_purely_periodic() || tau.is_zero())
    throw DomainError("periodic: " + tau.to_string() + " lies in Q1 and has no univoque partner");
  return univoque_q(AdmissibleSequence::from_expansion(tau), target_width);
}

}  // namespace cfk
