#include "cfk/spectra.hpp"

#include <mpfr.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "cfk/errors.hpp"

namespace cfk {

namespace {

// sign of t^K - (t^(K-1) + ... + 1)
int multinacci_sign(unsigned K, const BigRational& t) {
  BigRational lower = 0, power = 1;
  for (unsigned i = 0; i < K; ++i) {
    lower += power;
    power *= t;
  }
  return sgn(power - lower);
}

BigRational log2_rounded(const BigRational& x, mpfr_rnd_t mode, mpfr_prec_t bits) {
  mpfr_t v;
  mpfr_init2(v, bits);
  mpfr_set_q(v, x.get_mpq_t(), mode);
  mpfr_log2(v, v, mode);
  BigRational out;
  mpfr_get_q(out.get_mpq_t(), v);
  mpfr_clear(v);
  return out;
}

}  // namespace

Enclosure multinacci_root(unsigned K, const BigRational& target_width) {
  if (K < 2) throw DomainError("multinacci_root needs K >= 2");
  if (target_width <= 0) throw DomainError("target width must be positive");
  Enclosure e{1, 2};
  while (e.width() > target_width) {
    BigRational mid = e.midpoint();
    int s = multinacci_sign(K, mid);
    if (s == 0) return {mid, mid};
    (s < 0 ? e.lo : e.hi) = mid;
  }
  return e;
}

Enclosure dim_CK(unsigned K, const BigRational& target_width) {
  // |d log2 t / dt| <= 1/ln 2 < 3/2 on [1,2].
  Enclosure root = multinacci_root(K, target_width / 3);
  long bits = 0;
  for (BigRational w = target_width; w < 1; w *= 2) ++bits;
  mpfr_prec_t prec = static_cast<mpfr_prec_t>(bits + 16);
  return {log2_rounded(root.lo, MPFR_RNDD, prec), log2_rounded(root.hi, MPFR_RNDU, prec)};
}

BigInt count_aK_enumerate(unsigned K, unsigned n) {
  if (n == 0 || n > 30) throw DomainError("count_aK_enumerate needs 1 <= n <= 30");
  BigInt count = 0;
  const std::uint64_t total = std::uint64_t{1} << (n - 1);
  for (std::uint64_t tail = 0; tail < total; ++tail) {
    std::uint64_t word = (std::uint64_t{1} << (n - 1)) | tail;
    unsigned run = 1;
    bool ok = true;
    for (unsigned i = 1; i < n && ok; ++i) {
      bool same = ((word >> (n - 1 - i)) & 1) == ((word >> (n - i)) & 1);
      run = same ? run + 1 : 1;
      ok = run <= K;
    }
    if (ok) ++count;
  }
  return count;
}

BigInt count_aK(unsigned K, unsigned n) {
  if (K < 1 || n < 1) throw DomainError("count_aK needs K >= 1 and n >= 1");
  if (K > 24) throw DomainError("count_aK seeds by enumeration and supports K <= 24");
  std::vector<BigInt> a{0};  // 1-based
  for (unsigned m = 1; m <= std::min(n, K + 1); ++m) a.push_back(count_aK_enumerate(K, m));
  for (unsigned m = K + 2; m <= n; ++m) {
    BigInt s = 0;
    for (unsigned i = 1; i <= K; ++i) s += a[m - i];
    a.push_back(s);
  }
  return a[n];
}

double e_side_reference(unsigned K) {
  if (K < 1) throw DomainError("e_side_reference needs K >= 1");
  return 1.0 - 6.0 / (std::numbers::pi * std::numbers::pi * K);
}

DimensionReport dimension_report(unsigned K, const BigRational& target_width) {
  if (K < 2) throw DomainError("dimension report needs K >= 2");
  DimensionReport r;
  r.K = K;
  r.lambda_K = multinacci_root(K, target_width);
  r.dim = dim_CK(K, target_width);
  r.sandwich_high = r.dim;
  r.sandwich_low = K == 2 ? Enclosure{0, 0} : dim_CK(K - 1, target_width);
  r.e_reference = e_side_reference(K);
  return r;
}

}  // namespace cfk
