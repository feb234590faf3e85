#ifndef RICCIFORGE_CLASSICAL_HPP
#define RICCIFORGE_CLASSICAL_HPP

#include <string>
#include <vector>

#include "ricciforge/lie_algebra.hpp"

namespace ricciforge {

/// Complex matrix with exact rational real and imaginary parts.
struct CMat {
  RatMatrix re, im;

  CMat() = default;
  CMat(int rows, int cols) : re(rows, cols), im(rows, cols) {}
  CMat(RatMatrix re_, RatMatrix im_) : re(std::move(re_)), im(std::move(im_)) {}
  int rows() const { return re.rows(); }
  int cols() const { return re.cols(); }

  CMat operator+(const CMat& o) const { return {re + o.re, im + o.im}; }
  CMat operator-(const CMat& o) const { return {re - o.re, im - o.im}; }
  CMat operator*(const CMat& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  CMat operator*(const Rat& s) const { return {re * s, im * s}; }
  CMat times_i() const { return {im * Rat(-1), re}; }
  CMat commutator(const CMat& o) const { return *this * o - o * *this; }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool operator==(const CMat& o) const { return re == o.re && im == o.im; }

  static CMat unit(int n, int i, int j, Rat re_v = Rat(1), Rat im_v = Rat(0));
  static CMat identity(int n);
};

/// Explicit matrices realizing a Lie algebra basis inside gl(ambient, C).
struct MatrixRealization {
  int ambient = 0;
  std::vector<CMat> matrices;  // parallel to the algebra's labels

  /// Expands M in the rational span of the basis matrices; throws if M is
  /// not exactly in the span.
  std::vector<Rat> expand(const CMat& m) const;
};

enum class ClassicalFamily { su, so, sp, sl };
ClassicalFamily family_from_string(const std::string& s);
std::string family_to_string(ClassicalFamily f);

struct CompactBuild {
  LieAlgebra algebra;
  MatrixRealization realization;
  RootDatum roots;
};

/// Compact real forms in the explicit matrix realizations.  su: m >= 2,
/// so: m >= 3 (so(3) accepted and noted as isomorphic to su(2)), sp: m >= 2.
/// Basis order: simple Cartans, then X[beta], then Y[beta] over the positive
/// roots in their listed order.  Structure constants come from exact matrix
/// commutators; the Jacobi identity is checked on construction.
CompactBuild build_compact(ClassicalFamily family, int m);

struct NoncompactBuild {
  LieAlgebra algebra;
  MatrixRealization realization;
  RootDatum roots;
};

/// sl(m,R) in the eigenvector basis {H_alpha, X[beta], Y[beta]} with
/// H = diag, X = E_ij - E_ji, Y = E_ij + E_ji; prepends Z = Id when
/// with_center is set (giving gl(m,R)).
NoncompactBuild build_noncompact_sl(int m, bool with_center);

/// Complex linear form sum_k coeff_k x_k over the ambient coordinates.
struct VarForm {
  std::vector<std::pair<int, std::pair<Rat, Rat>>> terms;  // (x-index, (re, im))
};

/// The variable list z_1..z_m used for the polynomial spaces of so(m):
/// z_{2k-1} = x_{2k-1} + i x_{2k}, z_{2k} = x_{2k-1} - i x_{2k}, and for odd
/// m the final variable is z_m = x_m.
std::vector<VarForm> so_variables(int m);

/// r x r complex matrix T with pi(A) z_k = sum_j T_{kj} z_j on the span of
/// the polynomial variables; for so the x->z coordinate change is applied.
CMat variable_action(ClassicalFamily family, const CMat& realization_matrix, int m);

}  // namespace ricciforge

#endif
