#ifndef CPQ_QCOMB_HPP
#define CPQ_QCOMB_HPP

#include "cpq/laurent.hpp"

namespace cpq {

/// The q-integer [x] = (q^x - q^{-x})/(q - q^{-1}), a Laurent polynomial for
/// every integer x.
LaurentPoly qint(long x);

/// Gaussian binomial in q^2:
///   prod_{j=0}^{k-1} (1 - q^{2(n-j)}) / (1 - q^{2(j+1)}),
/// reduced to a genuine Laurent polynomial (the division is checked exact).
LaurentPoly qbinomial(long n, long k);

/// Frame weight alpha_{n,mu} = prod_{j=0}^{n-mu-1} (1-q^{2(n-j)})/(1-q^{2(j+1)}).
LaurentPoly frame_alpha(long n, long mu);

/// Frame weight beta_{s,mu} = q^{2 mu} prod_{j=0}^{mu-1} (1-q^{-2(s-j)})/(1-q^{-2(j+1)}),
/// s = |n|.
LaurentPoly frame_beta(long s, long mu);

}  // namespace cpq

#endif
