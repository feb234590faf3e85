#ifndef RICCIFORGE_LIE_ALGEBRA_HPP
#define RICCIFORGE_LIE_ALGEBRA_HPP

#include <map>
#include <optional>
#include <vector>

#include "ricciforge/labels.hpp"
#include "ricciforge/rational.hpp"
#include "ricciforge/roots.hpp"

namespace ricciforge {

/// One stored structure constant c_{ij}^k with i < j.  The antisymmetric
/// partner c_{ji}^k = -c_{ij}^k is implied and never stored.
struct TensorEntry {
  int i, j, k;
  Rat c;
};

/// Sparse antisymmetric rank-3 tensor of exact rationals: the Lie bracket.
class StructureTensor {
 public:
  StructureTensor() : dim_(0) {}
  explicit StructureTensor(int dim) : dim_(dim) {}

  int dim() const { return dim_; }
  const std::vector<TensorEntry>& entries() const { return entries_; }

  /// Accumulates a coefficient onto [e_i, e_j] -> e_k (any i != j).
  void add(int i, int j, int k, const Rat& c);
  void set(int i, int j, int k, const Rat& c);
  Rat coeff(int i, int j, int k) const;

  /// [e_i, e_j] as a dense coefficient vector (works for i > j too).
  std::vector<Rat> bracket_basis(int i, int j) const;

  bool operator==(const StructureTensor& o) const;
  bool is_zero() const { return entries_.empty(); }

 private:
  void normalize();
  int dim_;
  std::vector<TensorEntry> entries_;  // sorted by (i, j, k), i < j, c != 0
  std::map<std::pair<int, int>, std::pair<int, int>> index_;  // (i,j) -> [begin,end) in entries_
  friend class LieAlgebra;
};

struct JacobiReport {
  bool ok = true;
  int i = -1, j = -1, k = -1;  // worst violating triple
  Rat residual;                // its largest-magnitude residual coefficient
};

struct LieAlgebra {
  std::vector<BasisLabel> labels;
  StructureTensor bracket;
  std::optional<RootDatum> root_meta;
  std::vector<std::string> notes;

  int dim() const { return bracket.dim(); }
};

LieAlgebra make_lie_algebra(std::vector<BasisLabel> labels, StructureTensor t,
                            std::optional<RootDatum> roots = std::nullopt);

/// Bilinear bracket of two coefficient vectors.
std::vector<Rat> bracket_eval(const LieAlgebra& L, const std::vector<Rat>& x,
                              const std::vector<Rat>& y);

/// Exact Jacobi check over all basis triples.
JacobiReport check_jacobi(const LieAlgebra& L);

/// ad(x) as a matrix: column j is [x, e_j].
RatMatrix ad_matrix(const LieAlgebra& L, const std::vector<Rat>& x);
SparseRatMatrix ad_basis_sparse(const LieAlgebra& L, int i);

/// Killing form K_{ab} = tr(ad e_a ad e_b).
RatMatrix killing_form(const LieAlgebra& L);
/// The operator G^{-1} K, self-adjoint w.r.t. the (SPD) gram matrix G.
RatMatrix killing_operator(const LieAlgebra& L, const RatMatrix& gram);

/// Basis-change action (g.mu)(x, y) = g mu(g^{-1} x, g^{-1} y).
LieAlgebra gl_action(const RatMatrix& g, const LieAlgebra& L);

/// Lower central series g = g^1 >= [g, g^1] >= ... as row-echelon bases.
std::vector<std::vector<std::vector<Rat>>> lower_central_series(const LieAlgebra& L);
std::vector<std::vector<std::vector<Rat>>> derived_series(const LieAlgebra& L);
bool is_nilpotent(const LieAlgebra& L);
bool is_solvable(const LieAlgebra& L);
bool is_abelian(const LieAlgebra& L);

/// Basis of the center: all x with [x, e_j] = 0 for every j.
std::vector<std::vector<Rat>> center(const LieAlgebra& L);

/// Restriction of the bracket to a subspace spanned by basis indices;
/// throws if the subspace is not closed under the bracket.
LieAlgebra subalgebra_on_indices(const LieAlgebra& L, const std::vector<int>& idx);

/// True iff the span of the given basis indices is an ideal.
bool indices_form_ideal(const LieAlgebra& L, const std::vector<int>& idx);

std::vector<Rat> basis_vector(int dim, int i);
std::vector<Rat> trace_vector(const LieAlgebra& L);  // (tr ad e_i)_i

}  // namespace ricciforge

#endif
