#include "cpq/qcomb.hpp"

#include <string>

namespace cpq {

LaurentPoly qint(long x) {
  if (x == 0) return LaurentPoly::zero();
  LaurentPoly num = LaurentPoly::q_power(x) - LaurentPoly::q_power(-x);
  LaurentPoly den = LaurentPoly::q_power(1) - LaurentPoly::q_power(-1);
  return num.divide_exact(den);
}

namespace {

LaurentPoly one_minus_q2k(long k) {
  return LaurentPoly::one() - LaurentPoly::q_power(2 * k);
}

}  // namespace

LaurentPoly qbinomial(long n, long k) {
  if (n < 0 || k < 0 || k > n)
    throw Error("qbinomial requires 0 <= k <= n, got n=" + std::to_string(n) +
                " k=" + std::to_string(k));
  LaurentPoly num = LaurentPoly::one();
  LaurentPoly den = LaurentPoly::one();
  for (long j = 0; j < k; ++j) {
    num *= one_minus_q2k(n - j);
    den *= one_minus_q2k(j + 1);
  }
  return num.divide_exact(den);
}

LaurentPoly frame_alpha(long n, long mu) {
  if (n < 0 || mu < 0 || mu > n)
    throw Error("frame_alpha requires 0 <= mu <= n");
  return qbinomial(n, n - mu);
}

LaurentPoly frame_beta(long s, long mu) {
  if (s < 0 || mu < 0 || mu > s)
    throw Error("frame_beta requires 0 <= mu <= |n|");
  LaurentPoly num = LaurentPoly::one();
  LaurentPoly den = LaurentPoly::one();
  for (long j = 0; j < mu; ++j) {
    num *= LaurentPoly::one() - LaurentPoly::q_power(-2 * (s - j));
    den *= LaurentPoly::one() - LaurentPoly::q_power(-2 * (j + 1));
  }
  LaurentPoly ratio = num.divide_exact(den);
  return ratio.shifted_half(4 * mu);  // the q^{2 mu} prefactor
}

}  // namespace cpq
