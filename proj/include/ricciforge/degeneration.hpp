#ifndef RICCIFORGE_DEGENERATION_HPP
#define RICCIFORGE_DEGENERATION_HPP

#include <map>

#include "ricciforge/lie_algebra.hpp"
#include "ricciforge/poly_reps.hpp"

namespace ricciforge {

/// Diagonal one-parameter family phi_t(e_i) = constant_i t^{exponent_i} e_i.
struct ScalingFamily {
  std::vector<int> exponents;
  std::vector<Rat> constants;  // all nonzero

  int dim() const { return int(exponents.size()); }
  void validate() const;
};

/// Bracket with coefficients that are finite Laurent polynomials in t:
/// entries (i, j, k) -> { exponent -> coefficient }.
struct LaurentBracket {
  int dim = 0;
  std::map<std::tuple<int, int, int>, std::map<int, Rat>> entries;  // i < j

  /// Evaluation at a concrete t > 0 (exact).
  StructureTensor instantiate(const Rat& t) const;
};

/// c_t(i,j,k) = (f_k / (f_i f_j)) c_{ij}^k with f_i = constant_i t^{exp_i}.
LaurentBracket scale_bracket(const LieAlgebra& L, const ScalingFamily& f);

/// The t -> infinity limit: keeps exponent-0 coefficients, drops negative
/// exponents, and throws "limit diverges" naming (i,j,k) when a positive
/// exponent carries a nonzero coefficient.  The result is Jacobi-checked.
LieAlgebra take_limit(const LaurentBracket& lb, const std::vector<BasisLabel>& labels,
                      std::vector<std::string>* dropped_log = nullptr);

/// The scaling family fixing Z and the Cartan directions, stretching the
/// root vectors linearly, V1 linearly with constant 1/rho and V2
/// quadratically.  `L` must be a central semidirect product with monomial
/// right factor; `split` indexes the representation space.
ScalingFamily lemma0_family(const LieAlgebra& L, const SubspaceSplit& split, const Rat& rho);

/// The abelianization family: identity on a + r (left part), t on n.
ScalingFamily abelianization_family(int dim, const std::vector<int>& n_indices);

/// phi_t as a matrix for a concrete t.
RatMatrix scaling_matrix(const ScalingFamily& f, const Rat& t);

}  // namespace ricciforge

#endif
