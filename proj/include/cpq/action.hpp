#ifndef CPQ_ACTION_HPP
#define CPQ_ACTION_HPP

#include <vector>

#include "cpq/algebra.hpp"

namespace cpq {

/// Generators of the symmetry algebra acting on the left.  X+, X-, X_z are
/// derived operators (quantum tangent space of the 3D calculus); their action
/// is computed from the primitive ones, never stored.
enum class UqGenerator { E, F, K, Kinv, Xplus, Xminus, Xz };

/// Left action.  K acts diagonally by q^{w_L/2}; E and F extend their
/// generator values through the twisted Leibniz rule
///   E |> (x y) = (E |> x)(K |> y) + (K^{-1} |> x)(E |> y)
/// and likewise for F.  X± carry the q^{±1/2} E K / F K normalization; X_z
/// multiplies the left-weight-n component by (1 - q^{2n})/(1 - q^{-2}).
AlgebraElement act(UqGenerator g, const AlgebraElement& x);

/// Modular automorphism: diagonal in the right-weight grading,
/// sigma(m) = q^{w_R(m)} m.  On the invariant subalgebra this is the
/// automorphism twisting the Haar state.
AlgebraElement sigma(const AlgebraElement& x);
AlgebraElement sigma_inverse(const AlgebraElement& x);

/// Modular automorphism of the Haar state on the whole coordinate algebra,
/// q^{w_R - w_L} per monomial.  Restricts to sigma() on the invariant
/// subalgebra; h(x y) = h(modular_haar(y) x) holds for arbitrary x, y.
AlgebraElement modular_haar(const AlgebraElement& x);

/// Diagonal of pi_J(K^2): entries q^{2m} with m = J - mu for mu = 0..2J.
struct RepWeights {
  long two_j = 0;
  std::vector<LaurentPoly> diagonal;
};

RepWeights rep_K2(long two_j);

}  // namespace cpq

#endif
