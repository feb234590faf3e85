#ifndef RICCIFORGE_POLY_REPS_HPP
#define RICCIFORGE_POLY_REPS_HPP

#include <map>
#include <optional>

#include "ricciforge/classical.hpp"
#include "ricciforge/lie_algebra.hpp"

namespace ricciforge {

/// Real basis of the space of complex homogeneous polynomials of degree n in
/// r variables: one vector per (exponent vector, phase) with phase in {1, i}.
/// Order: exponent vectors graded-lexicographic descending, phase 1 before i.
struct MonomialBasis {
  int num_vars = 0;
  int degree = 0;
  std::vector<std::pair<std::vector<int>, bool>> elements;  // (exps, imag)
  std::map<std::vector<int>, int> monomial_index;           // exps -> index of phase-1 vector

  static MonomialBasis build(int num_vars, int degree);
  int size() const { return int(elements.size()); }
  int index_of(const std::vector<int>& exps, bool imag) const;
};

struct SubspaceSplit {
  std::vector<int> v1, v2;  // disjoint, exhaustive
};

struct Representation {
  LieAlgebra source;                  // the acting algebra
  int dim_v = 0;
  std::vector<SparseRatMatrix> operators;  // parallel to source basis
  std::optional<MonomialBasis> monomials;

  /// pi([e_i, e_j]) - [pi(e_i), pi(e_j)], exact; nonzero means not a
  /// homomorphism.
  bool homomorphism_holds() const;
};

/// Extends the variable action z_k -> sum_j T_{kj} z_j (T complex rational)
/// to degree-n monomials by the Leibniz rule, realified over (p, i p).
SparseRatMatrix derivation_action(const CMat& variable_matrix, const MonomialBasis& basis);

struct PolyRep {
  Representation rep;
  SubspaceSplit split;  // V1 = span{ s z_k^n }, V2 = the rest
};

/// Standard real representation on complex homogeneous polynomials of
/// degree n: r = m variables for su/so/sl, r = 2m for sp.  The split takes
/// all pure powers for su/sp/sl and the first 2l for so(m), m in {2l, 2l+1}.
PolyRep build_poly_rep(ClassicalFamily family, int m, int n);

struct CasimirBlock {
  double eigenvalue = 0;
  std::vector<int> indices;  // columns of V in this invariant subspace
  bool isotypic_merge = false;
};

/// Eigenspace blocks of pi(H)^2 + pi(X)^2 + pi(Y)^2 for an su(2) source
/// (numeric, clustering tolerance tau); throws when clusters are closer
/// than tau ("decomposition unresolved").
std::vector<CasimirBlock> casimir_decompose_su2(const Representation& rep, double tau = 1e-8);

}  // namespace ricciforge

#endif
