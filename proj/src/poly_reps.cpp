#include "ricciforge/poly_reps.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <stdexcept>

namespace ricciforge {

namespace {

void gen_exponents(int num_vars, int degree, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
  if (int(cur.size()) == num_vars - 1) {
    cur.push_back(degree);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int e = degree; e >= 0; --e) {
    cur.push_back(e);
    gen_exponents(num_vars, degree - e, cur, out);
    cur.pop_back();
  }
}

}  // namespace

MonomialBasis MonomialBasis::build(int num_vars, int degree) {
  MonomialBasis b;
  b.num_vars = num_vars;
  b.degree = degree;
  std::vector<std::vector<int>> exps;
  std::vector<int> cur;
  gen_exponents(num_vars, degree, cur, exps);
  // gen_exponents already emits exponent vectors in lexicographic descending
  // order (first variable's exponent decreasing), matching p[n,0,..] first.
  for (const auto& e : exps) {
    b.monomial_index[e] = int(b.elements.size());
    b.elements.push_back({e, false});
    b.elements.push_back({e, true});
  }
  return b;
}

int MonomialBasis::index_of(const std::vector<int>& exps, bool imag) const {
  auto it = monomial_index.find(exps);
  if (it == monomial_index.end()) throw std::out_of_range("monomial not in basis");
  return it->second + (imag ? 1 : 0);
}

bool Representation::homomorphism_holds() const {
  int n = source.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      SparseRatMatrix lhs(dim_v, dim_v);
      std::vector<Rat> br = source.bracket.bracket_basis(i, j);
      for (int k = 0; k < n; ++k)
        if (br[k] != 0) lhs = lhs + operators[k] * br[k];
      SparseRatMatrix rhs = operators[i].commutator(operators[j]);
      if (!(lhs - rhs).is_zero()) return false;
    }
  return true;
}

SparseRatMatrix derivation_action(const CMat& t, const MonomialBasis& basis) {
  int r = basis.num_vars;
  if (t.rows() != r || t.cols() != r)
    throw std::invalid_argument("variable action matrix size mismatch");
  int d = basis.size();
  SparseRatMatrix out(d, d);
  // Act on each phase-1 monomial; the phase-i column follows by i-linearity.
  for (int col = 0; col < d; col += 2) {
    const auto& exps = basis.elements[col].first;
    // Leibniz: d(z^J) = sum_k J_k z^{J - e_k} * (T z)_k
    for (int k = 0; k < r; ++k) {
      if (exps[k] == 0) continue;
      for (int j = 0; j < r; ++j) {
        Rat cre = t.re(k, j) * exps[k];
        Rat cim = t.im(k, j) * exps[k];
        if (cre == 0 && cim == 0) continue;
        std::vector<int> target = exps;
        target[k] -= 1;
        target[j] += 1;
        int row1 = basis.index_of(target, false);
        // image of (J, 1): coefficient c = cre + i cim on monomial target
        out.add(row1, col, cre);
        out.add(row1 + 1, col, cim);
        // image of (J, i): coefficient i c -> (-cim, cre)
        out.add(row1, col + 1, -cim);
        out.add(row1 + 1, col + 1, cre);
      }
    }
  }
  return out;
}

PolyRep build_poly_rep(ClassicalFamily family, int m, int n) {
  if (n < 1) throw std::invalid_argument("polynomial degree must be >= 1");
  CompactBuild cb;
  NoncompactBuild nb;
  const LieAlgebra* src = nullptr;
  const MatrixRealization* real = nullptr;
  if (family == ClassicalFamily::sl) {
    nb = build_noncompact_sl(m, false);
    src = &nb.algebra;
    real = &nb.realization;
  } else {
    cb = build_compact(family, m);
    src = &cb.algebra;
    real = &cb.realization;
  }
  int num_vars = family == ClassicalFamily::sp ? 2 * m : m;
  MonomialBasis basis = MonomialBasis::build(num_vars, n);

  Representation rep;
  rep.source = *src;
  rep.dim_v = basis.size();
  rep.monomials = basis;
  for (const auto& mat : real->matrices)
    rep.operators.push_back(derivation_action(variable_action(family, mat, m), basis));
  if (!rep.homomorphism_holds())
    throw std::runtime_error("derived polynomial action is not a homomorphism");

  // V1 = span{ z_k^n, i z_k^n } over the allowed variables.
  int split_vars = num_vars;
  if (family == ClassicalFamily::so) split_vars = 2 * (m / 2);  // exclude the odd z_m
  SubspaceSplit split;
  std::vector<bool> in_v1(basis.size(), false);
  for (int k = 0; k < split_vars; ++k) {
    std::vector<int> exps(num_vars, 0);
    exps[k] = n;
    int idx = basis.index_of(exps, false);
    in_v1[idx] = in_v1[idx + 1] = true;
  }
  for (int i = 0; i < basis.size(); ++i)
    (in_v1[i] ? split.v1 : split.v2).push_back(i);
  return {std::move(rep), std::move(split)};
}

std::vector<CasimirBlock> casimir_decompose_su2(const Representation& rep, double tau) {
  if (rep.source.dim() != 3)
    throw std::invalid_argument("casimir_decompose_su2 expects a 3-dimensional source algebra");
  int d = rep.dim_v;
  Eigen::MatrixXd cas = Eigen::MatrixXd::Zero(d, d);
  std::vector<Eigen::MatrixXd> ops;
  for (const auto& op : rep.operators) {
    RatMatrix dm = op.dense();
    Eigen::MatrixXd e(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) e(i, j) = dm(i, j).get_d();
    ops.push_back(e);
    cas += e * e;
  }
  Eigen::MatrixXd cas_sym = (cas + cas.transpose()) / 2;
  if ((cas - cas.transpose()).cwiseAbs().maxCoeff() > tau)
    throw std::runtime_error("casimir operator is not symmetric; use a compatible basis");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(cas_sym);
  const auto& ev = es.eigenvalues();
  // cluster eigenvalues
  std::vector<CasimirBlock> blocks;
  int i = 0;
  while (i < d) {
    int j = i;
    while (j + 1 < d && std::abs(ev[j + 1] - ev[i]) <= tau * std::max(1.0, std::abs(ev[i]))) ++j;
    if (j + 1 < d) {
      double gap = std::abs(ev[j + 1] - ev[j]);
      if (gap <= 10 * tau) throw std::runtime_error("decomposition unresolved: clustered eigenvalues");
    }
    CasimirBlock b;
    b.eigenvalue = ev[i];
    for (int k = i; k <= j; ++k) b.indices.push_back(k);
    blocks.push_back(b);
    i = j + 1;
  }
  // verify invariance of each eigenspace and flag isotypic (multi-irreducible)
  // blocks: an su(2)-irreducible real representation has dimension <= 4 when
  // the Casimir scalar repeats, so equal-eigenvalue blocks from distinct
  // summands show up as one block here.
  Eigen::MatrixXd vecs = es.eigenvectors();
  for (auto& b : blocks) {
    Eigen::MatrixXd P(d, int(b.indices.size()));
    for (size_t c = 0; c < b.indices.size(); ++c) P.col(int(c)) = vecs.col(b.indices[c]);
    for (const auto& op : ops) {
      Eigen::MatrixXd img = op * P;
      Eigen::MatrixXd resid = img - P * (P.transpose() * img);
      if (resid.cwiseAbs().maxCoeff() > 1e-6)
        throw std::runtime_error("casimir eigenspace is not invariant under the action");
    }
  }
  // Isotypic flag via the commutant: the commutant of a real-irreducible
  // block is R, C or H (dimension at most 4), so dimension > 4 means the
  // block holds several irreducible summands with equal Casimir scalar.
  for (auto& b : blocks) {
    int bd = int(b.indices.size());
    if (bd == 1) {
      b.isotypic_merge = false;
      continue;
    }
    Eigen::MatrixXd P(d, bd);
    for (int c = 0; c < bd; ++c) P.col(c) = vecs.col(b.indices[c]);
    // restricted operators and the commutant system [op, S] = 0
    Eigen::MatrixXd sys = Eigen::MatrixXd::Zero(3 * bd * bd, bd * bd);
    for (int o = 0; o < 3; ++o) {
      Eigen::MatrixXd r = P.transpose() * ops[o] * P;
      for (int i2 = 0; i2 < bd; ++i2)
        for (int j2 = 0; j2 < bd; ++j2)
          for (int k2 = 0; k2 < bd; ++k2) {
            // (r S - S r)_{i2 j2} coefficient of S_{k2, l2}
            sys(o * bd * bd + i2 * bd + j2, k2 * bd + j2) += r(i2, k2);
            sys(o * bd * bd + i2 * bd + j2, i2 * bd + k2) -= r(k2, j2);
          }
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(sys);
    double tol = 1e-7 * std::max(1.0, svd.singularValues()[0]);
    int rank = 0;
    for (int s = 0; s < svd.singularValues().size(); ++s)
      if (svd.singularValues()[s] > tol) ++rank;
    int commutant_dim = bd * bd - rank;
    b.isotypic_merge = commutant_dim > 4;
  }
  return blocks;
}

}  // namespace ricciforge
