#include "ricciforge/curvature.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <map>
#include <stdexcept>

namespace ricciforge {

namespace {

Eigen::MatrixXd to_eigen(const RatMatrix& m) {
  Eigen::MatrixXd e(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) e(i, j) = m(i, j).get_d();
  return e;
}

bool is_diagonal(const RatMatrix& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (i != j && m(i, j) != 0) return false;
  return true;
}

// Expanded entry list: (first argument a, second argument i, output j, c)
// meaning [e_a, e_i] has coefficient c on e_j.  Grouped by (i, j).
using Grouped = std::map<std::pair<int, int>, std::vector<std::pair<int, Rat>>>;

Grouped group_by_arg_out(const StructureTensor& t) {
  Grouped g;
  for (const auto& e : t.entries()) {
    g[{e.j, e.k}].push_back({e.i, e.c});
    g[{e.i, e.k}].push_back({e.j, -e.c});
  }
  return g;
}

}  // namespace

MetricLieAlgebra make_metric(LieAlgebra L, RatMatrix gram) {
  if (gram.rows() != L.dim() || gram.cols() != L.dim())
    throw std::invalid_argument("gram matrix size mismatch");
  if (!gram.is_positive_definite())
    throw std::invalid_argument("gram matrix is not symmetric positive definite");
  return {std::move(L), std::move(gram)};
}

std::string definiteness_name(Definiteness d) {
  switch (d) {
    case Definiteness::negative_definite: return "negative_definite";
    case Definiteness::negative_semidefinite: return "negative_semidefinite";
    case Definiteness::indefinite: return "indefinite";
    case Definiteness::positive_semidefinite: return "positive_semidefinite";
    case Definiteness::positive_definite: return "positive_definite";
    case Definiteness::zero: return "zero";
  }
  return "?";
}

std::vector<double> selfadjoint_eigenvalues(const RatMatrix& sym_form, const RatMatrix& gram) {
  Eigen::MatrixXd A = to_eigen(sym_form), G = to_eigen(gram);
  A = (A + A.transpose()) / 2;
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(A, G);
  std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + A.rows());
  std::sort(ev.begin(), ev.end());
  return ev;
}

DefinitenessReport definiteness(const RatMatrix& sym_form, const RatMatrix& gram, double tau) {
  // Self-adjointness w.r.t. the gram means the form G * op is symmetric;
  // callers pass the form directly.  Reject badly asymmetric input.
  RatMatrix asym = sym_form - sym_form.transpose();
  double worst = 0;
  for (int i = 0; i < asym.rows(); ++i)
    for (int j = 0; j < asym.cols(); ++j) worst = std::max(worst, std::abs(asym(i, j).get_d()));
  double scale_in = std::max(1.0, sym_form.max_abs().get_d());
  if (worst > 1e-12 * scale_in)
    throw std::invalid_argument("definiteness: input form is not symmetric");

  DefinitenessReport rep;
  std::vector<double> ev = selfadjoint_eigenvalues(sym_form, gram);
  rep.lambda_min = ev.front();
  rep.lambda_max = ev.back();
  double scale = std::max(std::abs(rep.lambda_min), std::abs(rep.lambda_max));
  double eps = tau * std::max(1.0, scale);
  if (scale <= eps) {
    rep.verdict = Definiteness::zero;
    rep.boundary_eigenvalue = rep.lambda_max;
  } else if (rep.lambda_max < -eps) {
    rep.verdict = Definiteness::negative_definite;
  } else if (rep.lambda_min > eps) {
    rep.verdict = Definiteness::positive_definite;
  } else if (rep.lambda_max <= eps) {
    rep.verdict = Definiteness::negative_semidefinite;
    rep.boundary_eigenvalue = rep.lambda_max;
  } else if (rep.lambda_min >= -eps) {
    rep.verdict = Definiteness::positive_semidefinite;
    rep.boundary_eigenvalue = rep.lambda_min;
  } else {
    rep.verdict = Definiteness::indefinite;
  }
  return rep;
}

std::vector<Rat> mean_curvature(const MetricLieAlgebra& ml) {
  return ml.gram.solve(trace_vector(ml.algebra));
}

RatMatrix moment_map(const MetricLieAlgebra& ml) {
  const auto& L = ml.algebra;
  const auto& G = ml.gram;
  int n = L.dim();
  RatMatrix T1(n, n), T2(n, n);
  if (is_diagonal(G)) {
    // T1_{ab} = sum_{i,j} c_{ai}^j c_{bi}^j G_jj / G_ii
    Grouped g = group_by_arg_out(L.bracket);
    for (const auto& [ij, lst] : g) {
      Rat w = G(ij.second, ij.second) / G(ij.first, ij.first);
      for (const auto& [a, ca] : lst)
        for (const auto& [b, cb] : lst) T1(a, b) += ca * cb * w;
    }
    // T2_{ab} = G_aa G_bb sum_{i,j} c_{ij}^a c_{ij}^b / (G_ii G_jj), ordered pairs
    std::map<std::pair<int, int>, std::vector<std::pair<int, Rat>>> by_pair;
    for (const auto& e : L.bracket.entries()) by_pair[{e.i, e.j}].push_back({e.k, e.c});
    for (const auto& [ij, lst] : by_pair) {
      Rat w = 2 / (G(ij.first, ij.first) * G(ij.second, ij.second));  // both orders
      for (const auto& [a, ca] : lst)
        for (const auto& [b, cb] : lst) T2(a, b) += ca * cb * w * G(a, a) * G(b, b);
    }
  } else {
    RatMatrix Ginv = G.inverse();
    // T1_{ab} = tr((ad e_a)^T G (ad e_b) G^{-1})
    std::vector<RatMatrix> ad(n);
    for (int a = 0; a < n; ++a) ad[a] = ad_matrix(L, basis_vector(n, a));
    for (int b = 0; b < n; ++b) {
      RatMatrix F = G * ad[b] * Ginv;
      for (int a = 0; a < n; ++a) {
        Rat acc(0);
        for (int r = 0; r < n; ++r)
          for (int c = 0; c < n; ++c)
            if (ad[a](r, c) != 0) acc += ad[a](r, c) * F(r, c);
        T1(a, b) = acc;
      }
    }
    // T2_{ab} = sum over ordered pairs (i,j): w^a_{ij} w^b_{i'j'} Ginv_{ii'} Ginv_{jj'}
    // with w^a_{ij} = (G mu_{ij})_a.  Assemble W_a = G-weighted bracket tables.
    std::vector<RatMatrix> W(n, RatMatrix(n, n));
    for (const auto& e : L.bracket.entries())
      for (int a = 0; a < n; ++a) {
        if (G(a, e.k) == 0) continue;
        W[a](e.i, e.j) += G(a, e.k) * e.c;
        W[a](e.j, e.i) -= G(a, e.k) * e.c;
      }
    for (int b = 0; b < n; ++b) {
      RatMatrix U = Ginv * W[b] * Ginv;  // U_{ij} = sum Ginv_{ii'} W^b_{i'j'} Ginv_{j'j}
      for (int a = 0; a < n; ++a) {
        Rat acc(0);
        for (int r = 0; r < n; ++r)
          for (int c = 0; c < n; ++c)
            if (W[a](r, c) != 0) acc += W[a](r, c) * U(r, c);
        T2(a, b) = acc;
      }
    }
  }
  RatMatrix form = T1 * Rat(-1, 2) + T2 * Rat(1, 4);
  return ml.gram.inverse() * form;
}

RatMatrix metric_symmetrize(const RatMatrix& a, const RatMatrix& gram) {
  RatMatrix astar = gram.inverse() * a.transpose() * gram;
  return (a + astar) * Rat(1, 2);
}

RicciReport ricci(const MetricLieAlgebra& ml) {
  const auto& L = ml.algebra;
  const auto& G = ml.gram;
  RicciReport rep;
  rep.moment = moment_map(ml);
  rep.killing_op = G.inverse() * killing_form(L);
  rep.mean_curvature = mean_curvature(ml);
  RatMatrix adH = ad_matrix(L, rep.mean_curvature);
  RatMatrix S = metric_symmetrize(adH, G);
  rep.ricci = rep.moment - rep.killing_op * Rat(1, 2) - S;
  RatMatrix form = G * rep.ricci;
  if (!form.is_symmetric())
    throw std::runtime_error("internal error: Ricci operator is not gram-self-adjoint");
  rep.definiteness = definiteness(form, G);
  rep.eigenvalues = selfadjoint_eigenvalues(form, G);
  return rep;
}

namespace {

// Restriction helpers on index sets.
RatMatrix submatrix(const RatMatrix& m, const std::vector<int>& rows,
                    const std::vector<int>& cols) {
  RatMatrix r(int(rows.size()), int(cols.size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) r(int(i), int(j)) = m(rows[i], cols[j]);
  return r;
}

// ad of basis element `a` restricted as a map span(idx) -> span(idx);
// throws if the image leaves the span.
RatMatrix ad_restricted(const LieAlgebra& L, int a, const std::vector<int>& idx) {
  int m = int(idx.size());
  std::vector<int> pos(L.dim(), -1);
  for (int p = 0; p < m; ++p) pos[idx[p]] = p;
  RatMatrix r(m, m);
  for (int p = 0; p < m; ++p) {
    std::vector<Rat> img = L.bracket.bracket_basis(a, idx[p]);
    for (int k = 0; k < L.dim(); ++k) {
      if (img[k] == 0) continue;
      if (pos[k] < 0) throw std::runtime_error("ad does not preserve the subspace");
      r(pos[k], p) = img[k];
    }
  }
  return r;
}

Rat trace_product(const RatMatrix& a, const RatMatrix& b) {
  Rat acc(0);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0) acc += a(i, j) * b(j, i);
  return acc;
}

void check_orthogonal(const RatMatrix& G, const std::vector<int>& A, const std::vector<int>& B,
                      const char* what) {
  for (int i : A)
    for (int j : B)
      if (G(i, j) != 0) throw std::invalid_argument(std::string("decomposition not gram-orthogonal: ") + what);
}

}  // namespace

RatMatrix ricci_solvable(const MetricLieAlgebra& ml, const std::vector<int>& a_idx,
                         const std::vector<int>& n_idx) {
  const auto& L = ml.algebra;
  const auto& G = ml.gram;
  int n = L.dim();
  if (int(a_idx.size() + n_idx.size()) != n)
    throw std::invalid_argument("a and n indices must cover the basis");
  check_orthogonal(G, a_idx, n_idx, "a vs n");
  // a must be abelian
  for (int i : a_idx)
    for (int j : a_idx) {
      if (i >= j) continue;
      std::vector<Rat> br = L.bracket.bracket_basis(i, j);
      for (const auto& c : br)
        if (c != 0) throw std::invalid_argument("a is not abelian");
    }
  // n must be a nilpotent ideal
  if (!indices_form_ideal(L, n_idx)) throw std::invalid_argument("n is not an ideal");
  LieAlgebra nsub = subalgebra_on_indices(L, n_idx);
  if (!is_nilpotent(nsub)) throw std::invalid_argument("n is not nilpotent");

  RatMatrix Gn = submatrix(G, n_idx, n_idx);
  RatMatrix Gn_inv = Gn.inverse();
  RatMatrix Ga = submatrix(G, a_idx, a_idx);
  RatMatrix Ga_inv = Ga.inverse();

  auto star_n = [&](const RatMatrix& P) { return Gn_inv * P.transpose() * Gn; };

  std::vector<RatMatrix> adA;
  for (int a : a_idx) adA.push_back(ad_restricted(L, a, n_idx));
  int da = int(a_idx.size()), dn = int(n_idx.size());

  // a-a block (bilinear form in the algebra basis): -tr S(adA_i) S(adA_j)
  RatMatrix form(n, n);
  std::vector<RatMatrix> S_adA;
  for (const auto& P : adA) S_adA.push_back((P + star_n(P)) * Rat(1, 2));
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j)
      form(a_idx[i], a_idx[j]) = -trace_product(S_adA[i], S_adA[j]);

  // a-n block: -1/2 tr((adA)* ad_n X)
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < dn; ++j) {
      RatMatrix adX = ad_restricted(L, n_idx[j], n_idx);
      Rat v = trace_product(star_n(adA[i]), adX) * Rat(-1, 2);
      form(a_idx[i], n_idx[j]) = v;
      form(n_idx[j], a_idx[i]) = v;
    }

  // n-n block: M_n + 1/2 sum [adA, adA*] - S(ad H|n), via the a-gram inverse
  // in place of an orthonormal a-frame.
  MetricLieAlgebra mn{nsub, Gn};
  RatMatrix Mn_form = Gn * moment_map(mn);
  RatMatrix comm_sum(dn, dn);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j) {
      if (Ga_inv(i, j) == 0) continue;
      RatMatrix c = adA[i] * star_n(adA[j]) - star_n(adA[j]) * adA[i];
      comm_sum = comm_sum + c * Ga_inv(i, j);
    }
  std::vector<Rat> H = mean_curvature(ml);
  // H lies in a; its ad preserves n.
  RatMatrix adH_n(dn, dn);
  for (int i = 0; i < da; ++i)
    if (H[a_idx[i]] != 0) adH_n = adH_n + adA[i] * H[a_idx[i]];
  for (int j : n_idx)
    if (H[j] != 0) throw std::runtime_error("mean curvature vector is not in a");
  RatMatrix SH = (adH_n + star_n(adH_n)) * Rat(1, 2);
  RatMatrix n_op = Gn_inv * Mn_form + comm_sum * Rat(1, 2) - SH;
  RatMatrix n_form = Gn * n_op;
  for (int i = 0; i < dn; ++i)
    for (int j = 0; j < dn; ++j) form(n_idx[i], n_idx[j]) = n_form(i, j);

  return G.inverse() * form;
}

RatMatrix ricci_triple(const MetricLieAlgebra& ml, const std::vector<int>& a_idx,
                       const std::vector<int>& r_idx, const std::vector<int>& n_idx) {
  const auto& L = ml.algebra;
  const auto& G = ml.gram;
  int n = L.dim();
  if (int(a_idx.size() + r_idx.size() + n_idx.size()) != n)
    throw std::invalid_argument("a, r, n indices must cover the basis");
  check_orthogonal(G, a_idx, r_idx, "a vs r");
  check_orthogonal(G, a_idx, n_idx, "a vs n");
  check_orthogonal(G, r_idx, n_idx, "r vs n");
  // structure: a abelian, [a, r] = 0, r subalgebra, n nilpotent ideal
  for (int i : a_idx) {
    for (int j : a_idx)
      if (i < j) {
        for (const auto& c : L.bracket.bracket_basis(i, j))
          if (c != 0) throw std::invalid_argument("a is not abelian");
      }
    for (int j : r_idx)
      for (const auto& c : L.bracket.bracket_basis(i, j))
        if (c != 0) throw std::invalid_argument("[a, r] != 0");
  }
  if (!indices_form_ideal(L, n_idx)) throw std::invalid_argument("n is not an ideal");
  LieAlgebra nsub = subalgebra_on_indices(L, n_idx);
  if (!is_nilpotent(nsub)) throw std::invalid_argument("n is not nilpotent");
  LieAlgebra rsub = subalgebra_on_indices(L, r_idx);  // throws if not closed

  RatMatrix Gn = submatrix(G, n_idx, n_idx);
  RatMatrix Gn_inv = Gn.inverse();
  RatMatrix Ga = submatrix(G, a_idx, a_idx);
  RatMatrix Ga_inv = Ga.inverse();
  RatMatrix Gr = submatrix(G, r_idx, r_idx);
  RatMatrix Gr_inv = Gr.inverse();
  auto star_n = [&](const RatMatrix& P) { return Gn_inv * P.transpose() * Gn; };

  int da = int(a_idx.size()), dr = int(r_idx.size()), dn = int(n_idx.size());
  std::vector<RatMatrix> adA, adY;
  for (int a : a_idx) adA.push_back(ad_restricted(L, a, n_idx));
  for (int y : r_idx) adY.push_back(ad_restricted(L, y, n_idx));

  RatMatrix form(n, n);

  // r-r block: Ric_r (subalgebra with restricted metric) - tr S(adY_i) S(adY_j)
  MetricLieAlgebra mr{rsub, Gr};
  RicciReport ric_r = ricci(mr);
  RatMatrix r_form = Gr * ric_r.ricci;
  std::vector<RatMatrix> S_adY;
  for (const auto& P : adY) S_adY.push_back((P + star_n(P)) * Rat(1, 2));
  for (int i = 0; i < dr; ++i)
    for (int j = 0; j < dr; ++j)
      form(r_idx[i], r_idx[j]) = r_form(i, j) - trace_product(S_adY[i], S_adY[j]);

  // a-a block
  std::vector<RatMatrix> S_adA;
  for (const auto& P : adA) S_adA.push_back((P + star_n(P)) * Rat(1, 2));
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j)
      form(a_idx[i], a_idx[j]) = -trace_product(S_adA[i], S_adA[j]);

  // r-a block: -tr S(adY) S(adA)
  for (int i = 0; i < dr; ++i)
    for (int j = 0; j < da; ++j) {
      Rat v = -trace_product(S_adY[i], S_adA[j]);
      form(r_idx[i], a_idx[j]) = v;
      form(a_idx[j], r_idx[i]) = v;
    }

  // cross blocks into n: -1/2 tr((adW)* ad_n X + adW ad_n X) = -tr(S(adW)* ...)
  for (int j = 0; j < dn; ++j) {
    RatMatrix adX = ad_restricted(L, n_idx[j], n_idx);
    for (int i = 0; i < dr; ++i) {
      Rat v = (trace_product(star_n(adY[i]), adX) + trace_product(adY[i], adX)) * Rat(-1, 2);
      form(r_idx[i], n_idx[j]) = v;
      form(n_idx[j], r_idx[i]) = v;
    }
    for (int i = 0; i < da; ++i) {
      Rat v = (trace_product(star_n(adA[i]), adX) + trace_product(adA[i], adX)) * Rat(-1, 2);
      form(a_idx[i], n_idx[j]) = v;
      form(n_idx[j], a_idx[i]) = v;
    }
  }

  // n block: M_n - S(ad H|n) + 1/2 sum_r [adY, adY*] + 1/2 sum_a [adA, adA*]
  MetricLieAlgebra mn{nsub, Gn};
  RatMatrix Mn_form = Gn * moment_map(mn);
  RatMatrix comm_sum(dn, dn);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j) {
      if (Ga_inv(i, j) == 0) continue;
      comm_sum = comm_sum + (adA[i] * star_n(adA[j]) - star_n(adA[j]) * adA[i]) * Ga_inv(i, j);
    }
  for (int i = 0; i < dr; ++i)
    for (int j = 0; j < dr; ++j) {
      if (Gr_inv(i, j) == 0) continue;
      comm_sum = comm_sum + (adY[i] * star_n(adY[j]) - star_n(adY[j]) * adY[i]) * Gr_inv(i, j);
    }
  std::vector<Rat> H = mean_curvature(ml);
  RatMatrix adH_n(dn, dn);
  for (int i = 0; i < da; ++i)
    if (H[a_idx[i]] != 0) adH_n = adH_n + adA[i] * H[a_idx[i]];
  for (int i = 0; i < dr; ++i)
    if (H[r_idx[i]] != 0) adH_n = adH_n + adY[i] * H[r_idx[i]];
  RatMatrix SH = (adH_n + star_n(adH_n)) * Rat(1, 2);
  RatMatrix n_op = Gn_inv * Mn_form + comm_sum * Rat(1, 2) - SH;
  RatMatrix n_form = Gn * n_op;
  for (int i = 0; i < dn; ++i)
    for (int j = 0; j < dn; ++j) form(n_idx[i], n_idx[j]) = n_form(i, j);

  return G.inverse() * form;
}

NiceBasisReport is_nice_basis(const LieAlgebra& L) {
  NiceBasisReport rep;
  // condition 1: for each (i, j) at most one k with c_{ij}^k != 0
  std::map<std::pair<int, int>, int> first_k;
  for (const auto& e : L.bracket.entries()) {
    auto it = first_k.find({e.i, e.j});
    if (it != first_k.end()) {
      rep.nice = false;
      rep.condition = 1;
      rep.i = e.i;
      rep.j = e.j;
      rep.k1 = it->second;
      rep.k2 = e.k;
      return rep;
    }
    first_k[{e.i, e.j}] = e.k;
  }
  // condition 2: for each (i, k) at most one j with c_{ij}^k != 0
  std::map<std::pair<int, int>, int> first_j;
  for (const auto& e : L.bracket.entries()) {
    // both orientations (i, j) and (j, i) count
    for (auto [i, j] : {std::pair{e.i, e.j}, std::pair{e.j, e.i}}) {
      auto key = std::pair{i, e.k};
      auto it = first_j.find(key);
      if (it != first_j.end() && it->second != j) {
        rep.nice = false;
        rep.condition = 2;
        rep.i = i;
        rep.k1 = e.k;
        rep.j = it->second;
        rep.k2 = j;
        return rep;
      }
      first_j[key] = j;
    }
  }
  return rep;
}

}  // namespace ricciforge
