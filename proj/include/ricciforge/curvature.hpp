#ifndef RICCIFORGE_CURVATURE_HPP
#define RICCIFORGE_CURVATURE_HPP

#include <string>

#include "ricciforge/lie_algebra.hpp"

namespace ricciforge {

struct MetricLieAlgebra {
  LieAlgebra algebra;
  RatMatrix gram;  // symmetric positive definite
};

MetricLieAlgebra make_metric(LieAlgebra L, RatMatrix gram);

enum class Definiteness {
  negative_definite,
  negative_semidefinite,
  indefinite,
  positive_semidefinite,
  positive_definite,
  zero
};

std::string definiteness_name(Definiteness d);

struct DefinitenessReport {
  Definiteness verdict;
  double lambda_min = 0, lambda_max = 0;
  double boundary_eigenvalue = 0;  // the offending near-zero eigenvalue, when any
};

/// Classifies a gram-self-adjoint operator by the eigenvalues of its
/// symmetric form; tau is relative to the largest |eigenvalue|.
DefinitenessReport definiteness(const RatMatrix& sym_form, const RatMatrix& gram,
                                double tau = 1e-9);

struct RicciReport {
  RatMatrix moment;      // M operator
  RatMatrix killing_op;  // B operator
  std::vector<Rat> mean_curvature;
  RatMatrix ricci;       // Ric = M - B/2 - S(ad H)
  std::vector<double> eigenvalues;  // sorted ascending
  DefinitenessReport definiteness;
};

/// The metric dual of X -> tr ad X.
std::vector<Rat> mean_curvature(const MetricLieAlgebra& ml);

/// The first curvature operator: <M X, X> = -1/2 sum <[X,X_i],X_j>^2
/// + 1/4 sum <[X_i,X_j],X>^2 over a gram-orthonormal frame, expressed back
/// in the algebra basis.  Exact.
RatMatrix moment_map(const MetricLieAlgebra& ml);

/// gram-symmetrization A -> (A + A*)/2 with A* = gram^{-1} A^T gram.
RatMatrix metric_symmetrize(const RatMatrix& a, const RatMatrix& gram);

RicciReport ricci(const MetricLieAlgebra& ml);

/// Solvable-case evaluation: a abelian complement (indices a_idx), n the
/// nilradical (indices n_idx), decomposition gram-orthogonal.  Returns the
/// full Ricci matrix assembled blockwise.
RatMatrix ricci_solvable(const MetricLieAlgebra& ml, const std::vector<int>& a_idx,
                         const std::vector<int>& n_idx);

/// Blockwise Ricci for g = (a + r) |x n with [a, a + r] = 0, r a subalgebra,
/// n a nilpotent ideal, all three factors gram-orthogonal.
RatMatrix ricci_triple(const MetricLieAlgebra& ml, const std::vector<int>& a_idx,
                       const std::vector<int>& r_idx, const std::vector<int>& n_idx);

struct NiceBasisReport {
  bool nice = true;
  // witnesses for the failed condition, when not nice
  int condition = 0;  // 1 or 2
  int i = -1, j = -1, k1 = -1, k2 = -1;
};

/// Checks the two nice-basis conditions on the stored sparse constants.
NiceBasisReport is_nice_basis(const LieAlgebra& L);

/// Float eigenvalues of a gram-self-adjoint operator (pencil of the
/// symmetric form against the gram), sorted ascending.
std::vector<double> selfadjoint_eigenvalues(const RatMatrix& sym_form, const RatMatrix& gram);

}  // namespace ricciforge

#endif
