#ifndef RICCIFORGE_SEMIDIRECT_HPP
#define RICCIFORGE_SEMIDIRECT_HPP

#include "ricciforge/lie_algebra.hpp"
#include "ricciforge/poly_reps.hpp"

namespace ricciforge {

/// Layout of a semidirect-product basis: [Z?] [left...] [right...].
struct ProductLayout {
  int z = -1;                 // index of the central Z, or -1
  std::vector<int> left;      // u (or a + r) indices
  std::vector<int> right;     // V / n indices
};

ProductLayout product_layout(const LieAlgebra& L);

/// (R Z + u) |x V with [Z, u] = 0, [Z, v] = v, [x, v] = pi(x) v, V abelian.
/// Basis order: Z, u-basis, V-basis.
LieAlgebra central_semidirect(const LieAlgebra& u, const Representation& rep);

struct SemidirectSpec {
  LieAlgebra left;                      // a + r (brackets internal to it)
  LieAlgebra right;                     // nilpotent n
  std::vector<RatMatrix> action;        // per left-basis-element matrix on right
  std::vector<Rat> z_scaling;           // optional diagonal weights replacing action of a leading Z
};

/// General (a + r) |x n.  Verifies that each action matrix is a derivation
/// of the right algebra and that the action is a Lie homomorphism; throws
/// "not a derivation" / homomorphism errors naming the violating pair.
LieAlgebra general_semidirect(const SemidirectSpec& spec);

}  // namespace ricciforge

#endif
