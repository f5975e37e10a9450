#include "cfk/cascades.hpp"

#include <stdexcept>

#include "cfk/bifurcation.hpp"
#include "cfk/errors.hpp"

namespace cfk {

Word parse_word(const std::string& text) {
  Word w;
  if (text == "e") return w;
  for (char ch : text) {
    if (ch != '0' && ch != '1') throw ParseError("not a binary word: " + text);
    w.push_back(static_cast<Bit>(ch - '0'));
  }
  return w;
}

std::string word_string(const Word& w) {
  std::string s;
  for (Bit b : w) s.push_back(static_cast<char>('0' + b));
  return s;
}

Word delta(const Word& eta) {
  Word out = eta;
  out.push_back(1);
  for (Bit b : eta) out.push_back(b ^ 1);
  return out;
}

BigRational tau_j_direct(const Word& eta, unsigned j) {
  Word w = eta;
  for (unsigned k = 0; k < j; ++k) w = delta(w);
  w.push_back(0);
  return BinaryExpansion::from_bits({}, w).to_rational();
}

namespace {

void require_admissible(const Word& eta) {
  if (!lambda_member(BinaryExpansion::from_bits({}, [&] {
        Word w = eta;
        w.push_back(0);
        return w;
      }())))
    throw DomainError("tau_0(" + word_string(eta) + ") is not in Lambda");
}

// (P_j, Q_j)
std::pair<BigInt, BigInt> pq(const Word& eta, unsigned j) {
  require_admissible(eta);
  const std::uint64_t p = eta.size();
  BigInt P = 0;
  for (Bit b : eta) P = 2 * P + b;
  P *= 2;
  BigInt Q = pow2(p + 1) - 1;
  for (unsigned k = 0; k < j; ++k) {
    P = (P + 2) * Q;
    Q = pow2((std::uint64_t{1} << (k + 1)) * (p + 1)) - 1;
  }
  return {P, Q};
}

}  // namespace

BigRational tau_j(const Word& eta, unsigned j) {
  auto [P, Q] = pq(eta, j);
  return make_rational(P, Q);
}

BigRational d_j(const Word& eta, unsigned j) {
  auto [P, Q] = pq(eta, j);
  return make_rational(P + 1, Q + 1);
}

Enclosure xi_eval(const BigRational& z, const BigRational& target_width) {
  if (z < 0 || z >= 1) throw DomainError("xi_eval needs 0 <= z < 1: " + z.get_str());
  if (target_width <= 0) throw DomainError("xi_eval needs a positive target width");
  if (z == 0) return {1, 1};
  // Tail factors: prod_{k>=m} (1 - w_k) >= 1 - 2 sum w_k >= 1 - 2 z^(2^m)/(1-z)
  // whenever every w_k = z^(2^k) is at most 1/2.
  BigRational product = 1, power = z;
  while (true) {
    BigRational eps = 2 * power / (1 - z);
    if (2 * power <= 1 && product * eps <= target_width) return {product * (1 - eps), product};
    product *= 1 - power;
    power *= power;
  }
}

Enclosure tau_infinity(const Word& eta, const BigRational& target_width) {
  const BigRational d0 = d_j(eta, 0);
  const BigRational scale = 1 - d0;
  Enclosure xi = xi_eval(make_rational(1, pow2(eta.size() + 1)), target_width / scale);
  Enclosure out{1 - scale * xi.hi, 1 - scale * xi.lo};
  // tau_j increases to tau_infinity: every tau_j stays below hi.
  for (unsigned j = 0;; ++j) {
    BigRational t = tau_j(eta, j);
    if (t > out.hi) throw std::logic_error("tau_j exceeds the tau_infinity enclosure");
    if (out.hi - t <= 2 * out.width() + target_width) break;
  }
  return out;
}

Bit thue_morse(std::uint64_t n) { return static_cast<Bit>(__builtin_popcountll(n) & 1); }

PeriodicWindow periodic_window(const Word& eta, unsigned max_j, const BigRational& target_width) {
  PeriodicWindow w;
  w.eta = eta;
  for (unsigned j = 0; j <= max_j; ++j) {
    w.tau.push_back(tau_j(eta, j));
    w.d.push_back(d_j(eta, j));
  }
  w.tau_infinity = tau_infinity(eta, target_width);
  return w;
}

std::vector<Quotient> CfCascade::expand(const Word& symbols) const {
  std::vector<Quotient> out;
  for (Bit s : symbols) {
    const auto& block = s ? S1 : S0;
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

namespace {

Word substitute(const Word& sigma) {
  Word out;
  for (Bit s : sigma) {
    out.push_back(1);
    out.push_back(s ? 0 : 1);
  }
  return out;
}

}  // namespace

CfCascade cf_cascade(const BigRational& r, unsigned n, const BigRational& target_width) {
  if (r <= 0 || r >= 1) throw DomainError("cf_cascade needs r in (0,1): " + r.get_str());
  if (!is_maximal(r)) throw DomainError("I_" + to_fraction_string(r) + " is not maximal");
  CfCascade c;
  c.r = r;
  std::tie(c.S0, c.S1) = even_odd_forms(r);
  c.sigma.push_back({0});
  for (unsigned k = 1; k <= n; ++k) c.sigma.push_back(k == 1 ? Word{1} : substitute(c.sigma.back()));
  for (const Word& s : c.sigma) {
    auto cf = ContinuedFractionExpansion::from_terms({}, c.expand(s));
    c.alpha_cf.push_back(cf);
    c.alpha.push_back(cf_surd(cf));
  }
  // alpha_infinity = [0; w, ...] for every prefix w = Sigma_k, so it lies
  // between [0; w] and [0; w_1, ..., w_L + 1].
  Word sigma = n >= 1 ? c.sigma.back() : Word{1};
  while (true) {
    std::vector<Quotient> w = c.expand(sigma);
    BigRational a = finite_cf_value(w);
    w.back() += 1;
    BigRational b = finite_cf_value(w);
    c.alpha_infinity = a < b ? Enclosure{a, b} : Enclosure{b, a};
    if (c.alpha_infinity.width() <= target_width) break;
    sigma = substitute(sigma);
  }
  return c;
}

}  // namespace cfk
