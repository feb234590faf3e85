#include "ricciforge/certify.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <random>
#include <sstream>

namespace ricciforge {

namespace {

Eigen::MatrixXd to_eigen(const RatMatrix& m) {
  Eigen::MatrixXd e(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) e(i, j) = m(i, j).get_d();
  return e;
}

// pi(x) restricted as a map V1 -> V, dense, in the (v1, v2) index lists.
RatMatrix restrict_cols(const SparseRatMatrix& op, const std::vector<int>& cols,
                        const std::vector<int>& rows) {
  std::vector<int> rowpos(op.rows(), -1);
  for (size_t p = 0; p < rows.size(); ++p) rowpos[rows[p]] = int(p);
  RatMatrix r(int(rows.size()), int(cols.size()));
  for (size_t c = 0; c < cols.size(); ++c)
    for (const auto& [row, v] : op.column(cols[c]))
      if (rowpos[row] >= 0) r(rowpos[row], int(c)) = v;
  return r;
}

bool column_in_subspace(const SparseRatMatrix& op, int col, const std::vector<bool>& allowed) {
  for (const auto& [row, v] : op.column(col))
    if (!allowed[row]) return false;
  return true;
}

std::vector<int> root_vector_indices(const LieAlgebra& u) {
  std::vector<int> out;
  for (int i = 0; i < u.dim(); ++i)
    if (u.labels[i].kind == LabelKind::RootX || u.labels[i].kind == LabelKind::RootY)
      out.push_back(i);
  return out;
}

std::vector<int> cartan_indices(const LieAlgebra& u) {
  std::vector<int> out;
  for (int i = 0; i < u.dim(); ++i)
    if (u.labels[i].kind == LabelKind::CartanH) out.push_back(i);
  return out;
}

}  // namespace

CheckReport check_lemma0(const Representation& rep, const SubspaceSplit& split) {
  CheckReport out;
  out.theorem = "lemma0";
  std::vector<bool> in_v1(rep.dim_v, false), in_v2(rep.dim_v, false);
  for (int v : split.v1) in_v1[v] = true;
  for (int v : split.v2) in_v2[v] = true;

  ConditionResult inv{"H-invariance of V1 and V2", true, ""};
  for (int h : cartan_indices(rep.source)) {
    for (int c : split.v1)
      if (!column_in_subspace(rep.operators[h], c, in_v1)) {
        inv.pass = false;
        inv.witness = rep.source.labels[h].text + " moves V1 vector " + std::to_string(c);
      }
    for (int c : split.v2)
      if (!column_in_subspace(rep.operators[h], c, in_v2)) {
        inv.pass = false;
        inv.witness = rep.source.labels[h].text + " moves V2 vector " + std::to_string(c);
      }
  }
  out.conditions.push_back(inv);

  ConditionResult maps{"pi(X) V1 and pi(Y) V1 inside V2", true, ""};
  for (int x : root_vector_indices(rep.source)) {
    for (int c : split.v1)
      if (!column_in_subspace(rep.operators[x], c, in_v2)) {
        maps.pass = false;
        maps.witness = rep.source.labels[x].text + " maps V1 vector " + std::to_string(c) +
                       " outside V2";
      }
  }
  out.conditions.push_back(maps);
  return out;
}

CheckReport check_main_theorem(const Representation& rep, const SubspaceSplit& split,
                               const RatMatrix& gram_v) {
  CheckReport out;
  out.theorem = "main";
  for (int i : split.v1)
    for (int j : split.v2)
      if (gram_v(i, j) != 0) throw std::invalid_argument("V1 is not gram-orthogonal to V2");

  RatMatrix ginv = gram_v.inverse();
  ConditionResult skew{"(i) pi(H) skew-symmetric for every simple root", true, ""};
  for (int h : cartan_indices(rep.source)) {
    RatMatrix P = rep.operators[h].dense();
    RatMatrix Pstar = ginv * P.transpose() * gram_v;
    if (!(P + Pstar).is_zero()) {
      skew.pass = false;
      skew.witness = rep.source.labels[h].text + " is not skew-symmetric";
    }
  }
  out.conditions.push_back(skew);

  ConditionResult nontrivial{"(ii) pi(X)|V1 nontrivial for every root vector", true, ""};
  for (int x : root_vector_indices(rep.source)) {
    bool nz = false;
    for (int c : split.v1) nz = nz || !rep.operators[x].column(c).empty();
    if (!nz) {
      nontrivial.pass = false;
      nontrivial.witness = rep.source.labels[x].text + " vanishes on V1";
    }
  }
  out.conditions.push_back(nontrivial);

  // (iii) tr(pi(Y)|V1^T pi(X)|V1) with the gram-adjoint on the restrictions:
  // V1 -> V maps, adjoint w.r.t. gram_v restricted to V1 and V.
  ConditionResult orth{"(iii) pairwise trace orthogonality on V1", true, ""};
  std::vector<int> all(rep.dim_v);
  for (int i = 0; i < rep.dim_v; ++i) all[i] = i;
  RatMatrix g1(int(split.v1.size()), int(split.v1.size()));
  for (size_t i = 0; i < split.v1.size(); ++i)
    for (size_t j = 0; j < split.v1.size(); ++j) g1(int(i), int(j)) = gram_v(split.v1[i], split.v1[j]);
  RatMatrix g1inv = g1.inverse();
  std::vector<int> roots = root_vector_indices(rep.source);
  std::vector<RatMatrix> restr;
  for (int x : roots) restr.push_back(restrict_cols(rep.operators[x], split.v1, all));
  for (size_t a = 0; a < roots.size(); ++a)
    for (size_t b = 0; b < roots.size(); ++b) {
      if (a == b) continue;
      // tr over V1 of (pi_b)* pi_a with (pi_b)* = g1^{-1} pi_b^T gram_v
      RatMatrix prod = g1inv * restr[b].transpose() * gram_v * restr[a];
      if (prod.trace() != 0) {
        orth.pass = false;
        orth.witness = "nonzero pairing between " + rep.source.labels[roots[a]].text + " and " +
                       rep.source.labels[roots[b]].text;
      }
    }
  out.conditions.push_back(orth);
  return out;
}

Rat choose_rho(const Representation& rep, const SubspaceSplit& split) {
  int m = rep.dim_v;
  std::vector<int> all(m);
  for (int i = 0; i < m; ++i) all[i] = i;
  std::vector<int> roots = root_vector_indices(rep.source);
  if (split.v2.empty()) throw std::runtime_error("degenerate operator sums: V2 is empty");
  RatMatrix sum_tt(int(split.v1.size()), int(split.v1.size()));
  RatMatrix sum_tt_rev(int(split.v2.size()), int(split.v2.size()));
  for (int x : roots) {
    RatMatrix P = restrict_cols(rep.operators[x], split.v1, split.v2);  // V1 -> V2
    sum_tt = sum_tt + P.transpose() * P;
    sum_tt_rev = sum_tt_rev + P * P.transpose();
  }
  if (sum_tt.is_zero() || sum_tt_rev.is_zero())
    throw std::runtime_error("degenerate operator sums: action vanishes on V1");
  auto lmax = [](const RatMatrix& s) {
    std::vector<double> ev = selfadjoint_eigenvalues(s, RatMatrix::identity(s.rows()));
    return ev.back();
  };
  double b1 = 2.0 * m / lmax(sum_tt);
  double b2 = 4.0 * m / lmax(sum_tt_rev);
  double bound = std::min(b1, b2) / 2;  // margin factor
  Rat rho(1);
  while (rho.get_d() * rho.get_d() >= bound) rho /= 2;
  return rho;
}

namespace {

// Deterministic grid of diagonal gram factors on the V1 vectors: each
// phase pair (z_k^n, i z_k^n) gets factors (1, g) with g walking the grid,
// then k-cycled mixtures.
std::vector<std::pair<std::string, std::vector<Rat>>> perturbation_patterns(int v1_size) {
  std::vector<std::pair<std::string, std::vector<Rat>>> pats;
  std::vector<Rat> ones(v1_size, Rat(1));
  pats.push_back({"identity", ones});
  std::vector<Rat> grid = {rat(7, 8), rat(9, 8), rat(3, 4), rat(5, 4)};
  for (const auto& g : grid) {
    std::vector<Rat> f(v1_size, Rat(1));
    for (int i = 1; i < v1_size; i += 2) f[i] = g;
    pats.push_back({"pairs (1, " + rat_to_string(g) + ")", f});
  }
  {
    std::vector<Rat> f(v1_size, Rat(1));
    for (int i = 1; i < v1_size; i += 2) f[i] = grid[(i / 2) % grid.size()];
    pats.push_back({"pairs (1, cycled)", f});
  }
  return pats;
}

}  // namespace

PipelineResult certify_compact_pipeline(ClassicalFamily family, int m, int n,
                                        std::optional<Rat> rho_override) {
  if (m < 2 || n < 2) throw std::invalid_argument("pipeline requires m, n >= 2");
  PipelineResult out;
  CompactBuild cb = build_compact(family, m);
  PolyRep pr = build_poly_rep(family, m, n);
  out.split = pr.split;
  out.lemma0 = check_lemma0(pr.rep, pr.split);
  out.main_theorem = check_main_theorem(pr.rep, pr.split, RatMatrix::identity(pr.rep.dim_v));
  if (!out.lemma0.all_pass() || !out.main_theorem.all_pass())
    throw std::runtime_error("theorem hypotheses fail; pipeline not applicable");

  LieAlgebra full = central_semidirect(cb.algebra, pr.rep);
  Rat rho = rho_override ? *rho_override : choose_rho(pr.rep, pr.split);
  if (rho == 0) throw std::invalid_argument("rho must be nonzero");
  ScalingFamily fam = lemma0_family(full, pr.split, rho);
  LieAlgebra limit = take_limit(scale_bracket(full, fam), full.labels);
  out.limit = limit;

  RicciCertificate cert;
  cert.rho = rho;
  cert.pipeline.push_back("build " + family_to_string(family) + "(" + std::to_string(m) + ")");
  cert.pipeline.push_back("polynomial representation of degree " + std::to_string(n));
  cert.pipeline.push_back("central semidirect product and diagonal degeneration, rho = " +
                          rat_to_string(rho));

  int du = cb.algebra.dim();
  int dv = pr.rep.dim_v;
  for (const auto& [name, factors] : perturbation_patterns(int(pr.split.v1.size()))) {
    std::vector<Rat> diag(limit.dim(), Rat(1));
    for (size_t p = 0; p < pr.split.v1.size(); ++p) diag[1 + du + pr.split.v1[p]] = factors[p];
    RatMatrix gram = RatMatrix::diagonal(diag);
    MetricLieAlgebra ml = make_metric(limit, gram);
    RicciReport rr = ricci(ml);
    // the a-n cross blocks must stay exactly zero under the V1 rescaling
    bool cross_zero = true;
    std::vector<int> a_indices = {0};
    for (int i = 0; i < du; ++i)
      if (limit.labels[1 + i].kind == LabelKind::CartanH) a_indices.push_back(1 + i);
    RatMatrix form = gram * rr.ricci;
    for (int a : a_indices)
      for (int x = 0; x < limit.dim(); ++x) {
        bool x_in_a = false;
        for (int aa : a_indices) x_in_a = x_in_a || aa == x;
        if (!x_in_a && form(a, x) != 0) cross_zero = false;
      }
    if (!cross_zero) continue;
    if (rr.eigenvalues.back() < -1e-6) {
      cert.gram = gram;
      cert.eigenvalues = rr.eigenvalues;
      cert.lambda_max = rr.eigenvalues.back();
      cert.perturbation = name;
      cert.perturbation_factors = factors;
      cert.pipeline.push_back("V1 rescaling: " + name);
      out.certificate = cert;
      return out;
    }
  }
  throw std::runtime_error("certificate not found within grid");
}

MetricLieAlgebra build_gl2_w2_limit() {
  NoncompactBuild nb = build_noncompact_sl(2, true);  // {Z, H, X, Y}
  PolyRep pr = build_poly_rep(ClassicalFamily::sl, 2, 2);
  // extend to gl(2,R): Z acts as the identity, matching the central product
  LieAlgebra full = central_semidirect(
      [&] {
        // drop the built-in Z; central_semidirect adds its own
        std::vector<int> idx = {1, 2, 3};
        return subalgebra_on_indices(nb.algebra, idx);
      }(),
      pr.rep);
  ScalingFamily fam = lemma0_family(full, pr.split, Rat(1));
  LieAlgebra limit = take_limit(scale_bracket(full, fam), full.labels);
  // metric: {Z, H, X, Y, v1/2, v2/2, v3, v4, v5/2, v6/2} orthonormal
  std::vector<Rat> diag(10, Rat(1));
  int du = 3;
  for (int v : pr.split.v1) diag[1 + du + v] = 4;
  return make_metric(limit, RatMatrix::diagonal(diag));
}

MetricLieAlgebra build_sl2_c2_limit() {
  NoncompactBuild nb = build_noncompact_sl(2, true);
  PolyRep pr = build_poly_rep(ClassicalFamily::sl, 2, 1);
  LieAlgebra full = central_semidirect(
      [&] {
        std::vector<int> idx = {1, 2, 3};
        return subalgebra_on_indices(nb.algebra, idx);
      }(),
      pr.rep);
  // Variable-based split for degree one: V1 = {z1, i z1}, V2 = {z2, i z2};
  // the Y direction is stretched with a negative constant so that the limit
  // action of Y on V1 flips sign relative to X.
  ScalingFamily f;
  f.exponents = {0, 0, 1, 1, 0, 0, 1, 1};
  f.constants.assign(8, Rat(1));
  f.constants[3] = Rat(-1);
  LieAlgebra limit = take_limit(scale_bracket(full, f), full.labels);
  return make_metric(limit, RatMatrix::identity(8));
}

CheckReport check_ssnc(const SsncInput& in) {
  CheckReport out;
  out.theorem = "ssnc";
  const LieAlgebra& L = in.algebra;
  int dn = int(in.n_idx.size());
  RatMatrix gn_inv = in.gram_n.inverse();
  auto star_n = [&](const RatMatrix& P) { return gn_inv * P.transpose() * in.gram_n; };

  // restrictions of ad A to n
  std::vector<RatMatrix> adA;
  for (int a : in.a_idx) {
    std::vector<int> pos(L.dim(), -1);
    for (int p = 0; p < dn; ++p) pos[in.n_idx[p]] = p;
    RatMatrix r(dn, dn);
    for (int p = 0; p < dn; ++p) {
      std::vector<Rat> img = L.bracket.bracket_basis(a, in.n_idx[p]);
      for (int k = 0; k < L.dim(); ++k)
        if (img[k] != 0) {
          if (pos[k] < 0) throw std::invalid_argument("ad a does not preserve n");
          r(pos[k], p) = img[k];
        }
    }
    adA.push_back(r);
  }

  ConditionResult normal{"(1) every ad A|n is gram-normal", true, ""};
  for (size_t i = 0; i < adA.size(); ++i) {
    RatMatrix s = star_n(adA[i]);
    if (!(adA[i] * s - s * adA[i]).is_zero()) {
      normal.pass = false;
      normal.witness = "a-basis element " + std::to_string(i) + " is not normal";
    }
  }
  out.conditions.push_back(normal);

  const double tau = 1e-8;
  auto eigen_real_parts = [&](const RatMatrix& P) {
    Eigen::EigenSolver<Eigen::MatrixXd> es(to_eigen(P));
    std::vector<double> re;
    for (int i = 0; i < P.rows(); ++i) re.push_back(es.eigenvalues()[i].real());
    return re;
  };

  ConditionResult offaxis{"(2) no ad A|n purely imaginary", true, ""};
  for (size_t i = 0; i < adA.size(); ++i) {
    bool some_off = false;
    for (double r : eigen_real_parts(adA[i])) some_off = some_off || std::abs(r) > tau;
    if (!some_off) {
      offaxis.pass = false;
      offaxis.witness = "a-basis element " + std::to_string(i) + " has purely imaginary spectrum";
    }
  }
  out.conditions.push_back(offaxis);

  ConditionResult positive{"(3) some A0 with positive real parts (heuristic search)", false, ""};
  std::vector<std::pair<std::string, RatMatrix>> candidates;
  if (in.a0_candidate) {
    RatMatrix c(dn, dn);
    for (size_t i = 0; i < adA.size(); ++i) c = c + adA[i] * (*in.a0_candidate)[i];
    candidates.push_back({"supplied candidate", c});
  }
  for (size_t i = 0; i < adA.size(); ++i)
    candidates.push_back({"a-basis element " + std::to_string(i), adA[i]});
  for (size_t i = 0; i < adA.size(); ++i)
    for (size_t j = i + 1; j < adA.size(); ++j)
      candidates.push_back({"sum of a-basis elements " + std::to_string(i) + "+" + std::to_string(j),
                            adA[i] + adA[j]});
  for (const auto& [name, c] : candidates) {
    bool all_pos = true;
    for (double r : eigen_real_parts(c)) all_pos = all_pos && r > tau;
    if (all_pos) {
      positive.pass = true;
      positive.witness = name;
      break;
    }
  }
  out.conditions.push_back(positive);

  ConditionResult ric_r{"(4) Ric(gram_r) < 0 with orthogonal Cartan decomposition", false, ""};
  {
    if (in.cartan_k.empty()) {
      ric_r.witness = "missing Cartan decomposition metadata for r";
      out.conditions.push_back(ric_r);
      return out;
    }
    // k vs p orthogonality inside r
    std::vector<bool> in_k(in.r_idx.size(), false);
    for (int i : in.cartan_k) in_k[i] = true;
    bool orth = true;
    for (size_t i = 0; i < in.r_idx.size(); ++i)
      for (size_t j = 0; j < in.r_idx.size(); ++j)
        if (in_k[i] != in_k[j] && in.gram_r(int(i), int(j)) != 0) orth = false;
    if (!orth) {
      ric_r.witness = "Cartan factors are not gram_r-orthogonal";
      out.conditions.push_back(ric_r);
      return out;
    }
    LieAlgebra rsub = subalgebra_on_indices(L, in.r_idx);
    RicciReport rr = ricci(make_metric(rsub, in.gram_r));
    if (rr.definiteness.verdict == Definiteness::negative_definite) {
      ric_r.pass = true;
    } else {
      ric_r.witness = "verdict " + definiteness_name(rr.definiteness.verdict) +
                      ", lambda_max = " + std::to_string(rr.definiteness.lambda_max);
    }
  }
  out.conditions.push_back(ric_r);
  return out;
}

namespace {

struct FloatRicci {
  // float structure constants and objective evaluation for the search
  int n;
  std::vector<std::array<double, 4>> entries;  // (i, j, k, c) with i < j

  explicit FloatRicci(const LieAlgebra& L) : n(L.dim()) {
    for (const auto& e : L.bracket.entries())
      entries.push_back({double(e.i), double(e.j), double(e.k), e.c.get_d()});
  }

  double lambda_max(const Eigen::MatrixXd& G) const {
    Eigen::MatrixXd Ginv = G.inverse();
    Eigen::MatrixXd T1 = Eigen::MatrixXd::Zero(n, n), T2 = Eigen::MatrixXd::Zero(n, n);
    std::vector<Eigen::MatrixXd> ad(n, Eigen::MatrixXd::Zero(n, n));
    Eigen::VectorXd tr = Eigen::VectorXd::Zero(n);
    for (const auto& e : entries) {
      int i = int(e[0]), j = int(e[1]), k = int(e[2]);
      double c = e[3];
      ad[i](k, j) += c;
      ad[j](k, i) -= c;
      if (k == j) tr[i] += c;
      if (k == i) tr[j] -= c;
    }
    for (int b = 0; b < n; ++b) {
      Eigen::MatrixXd F = G * ad[b] * Ginv;
      for (int a = 0; a <= b; ++a) {
        double acc = (ad[a].array() * F.array()).sum();
        T1(a, b) = acc;
        T1(b, a) = acc;
      }
    }
    std::vector<Eigen::MatrixXd> W(n, Eigen::MatrixXd::Zero(n, n));
    for (const auto& e : entries) {
      int i = int(e[0]), j = int(e[1]), k = int(e[2]);
      double c = e[3];
      for (int a = 0; a < n; ++a) {
        if (G(a, k) == 0) continue;
        W[a](i, j) += G(a, k) * c;
        W[a](j, i) -= G(a, k) * c;
      }
    }
    for (int b = 0; b < n; ++b) {
      Eigen::MatrixXd U = Ginv * W[b] * Ginv;
      for (int a = 0; a <= b; ++a) {
        double acc = (W[a].array() * U.array()).sum();
        T2(a, b) = acc;
        T2(b, a) = acc;
      }
    }
    // Killing form: tr(ad_a ad_b)
    Eigen::MatrixXd K = Eigen::MatrixXd::Zero(n, n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b <= a; ++b) {
        double acc = (ad[a].array() * ad[b].transpose().array()).sum();
        K(a, b) = acc;
        K(b, a) = acc;
      }
    Eigen::VectorXd H = G.ldlt().solve(tr);
    Eigen::MatrixXd adH = Eigen::MatrixXd::Zero(n, n);
    for (int a = 0; a < n; ++a)
      if (H[a] != 0) adH += H[a] * ad[a];
    Eigen::MatrixXd S = (adH + Ginv * adH.transpose() * G) / 2;
    Eigen::MatrixXd Ric = Ginv * (-0.5 * T1 + 0.25 * T2) - 0.5 * Ginv * K - S;
    Eigen::MatrixXd form = G * Ric;
    form = (form + form.transpose()) / 2;
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(form, G);
    return es.eigenvalues().maxCoeff();
  }
};

}  // namespace

SearchResult search_negative_ricci_metric(const LieAlgebra& L, long budget, unsigned seed) {
  SearchResult res;
  int n = L.dim();
  FloatRicci fr(L);
  const double target = -1e-6;

  // parameters: lower-triangular L with log-diagonal
  int np = n * (n + 1) / 2;
  auto build_gram = [&](const std::vector<double>& p) {
    Eigen::MatrixXd Lm = Eigen::MatrixXd::Zero(n, n);
    int q = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j <= i; ++j) {
        Lm(i, j) = (i == j) ? std::exp(p[q]) : p[q];
        ++q;
      }
    return Eigen::MatrixXd(Lm.transpose() * Lm);
  };
  auto objective = [&](const std::vector<double>& p) {
    ++res.evaluations;
    return fr.lambda_max(build_gram(p));
  };

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);

  std::vector<double> best_p(np, 0.0);
  double best_v = objective(best_p);
  // deterministic starting points: diagonal scalings graded by basis position
  std::vector<std::vector<double>> starts;
  starts.push_back(std::vector<double>(np, 0.0));
  for (double s : {0.5, 1.0, 2.0}) {
    std::vector<double> p(np, 0.0);
    int q = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j <= i; ++j) {
        if (i == j) p[q] = s * (double(i) / n - 0.5);
        ++q;
      }
    starts.push_back(p);
  }
  for (auto& start : starts) {
    double v = objective(start);
    if (v < best_v) {
      best_v = v;
      best_p = start;
    }
  }

  std::vector<double> cur_p = best_p;
  double cur_v = best_v;
  while (res.evaluations < budget && best_v >= target) {
    // coordinate pattern sweep
    double step = 0.5;
    bool improved_since_restart = true;
    while (res.evaluations < budget && best_v >= target && step > 1e-4) {
      bool any = false;
      for (int q = 0; q < np && res.evaluations < budget; ++q) {
        for (double sgn : {1.0, -1.0}) {
          std::vector<double> trial = cur_p;
          trial[q] += sgn * step;
          double v = objective(trial);
          if (v < cur_v - 1e-12) {
            cur_v = v;
            cur_p = trial;
            any = true;
            break;
          }
        }
        if (best_v > cur_v) {
          best_v = cur_v;
          best_p = cur_p;
        }
        if (best_v < target) break;
      }
      if (!any) step /= 2;
      improved_since_restart = improved_since_restart || any;
    }
    if (best_v >= target) {
      // seeded random restart around the best point
      cur_p = best_p;
      for (auto& x : cur_p) x += 0.5 * unif(rng);
      cur_v = objective(cur_p);
    }
  }

  res.lambda_max = best_v;
  if (best_v < target) {
    res.found = true;
    // freeze the float gram into exact rationals (dyadic approximation)
    Eigen::MatrixXd G = build_gram(best_p);
    RatMatrix gram(n, n);
    const long denom = 1L << 24;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        long num = std::lround(G(i, j) * denom);
        gram(i, j) = rat(num, denom);
      }
    // symmetrize exactly
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        Rat avg = (gram(i, j) + gram(j, i)) / 2;
        gram(i, j) = avg;
        gram(j, i) = avg;
      }
    if (!gram.is_positive_definite()) {
      res.found = false;
      return res;
    }
    // re-verify with the exact path
    RicciReport rr = ricci(make_metric(L, gram));
    if (rr.eigenvalues.back() < target) {
      res.gram = gram;
      res.lambda_max = rr.eigenvalues.back();
    } else {
      res.found = false;
      res.lambda_max = rr.eigenvalues.back();
    }
  }
  return res;
}

Su2TheoremReport check_su2_theorem(const LieAlgebra& L, const std::vector<int>& su2_idx,
                                   const std::vector<int>& n_idx, long search_budget,
                                   unsigned seed) {
  Su2TheoremReport out;
  out.report.theorem = "su2_nilpotent";
  if (su2_idx.size() != 3) throw std::invalid_argument("su2 factor must be 3-dimensional");
  // locate Z: the index not in su2_idx or n_idx
  std::vector<bool> used(L.dim(), false);
  for (int i : su2_idx) used[i] = true;
  for (int i : n_idx) used[i] = true;
  int z = -1;
  for (int i = 0; i < L.dim(); ++i)
    if (!used[i]) z = i;
  if (z < 0) throw std::invalid_argument("no central Z direction found");

  ConditionResult central{"[Z, su(2)] = 0", true, ""};
  for (int i : su2_idx)
    for (const auto& c : L.bracket.bracket_basis(z, i))
      if (c != 0) {
        central.pass = false;
        central.witness = "Z brackets with " + L.labels[i].text;
      }
  out.report.conditions.push_back(central);

  // build the su(2)-representation on n by restriction of ad
  Representation rep;
  rep.source = subalgebra_on_indices(L, su2_idx);
  rep.dim_v = int(n_idx.size());
  std::vector<int> pos(L.dim(), -1);
  for (size_t p = 0; p < n_idx.size(); ++p) pos[n_idx[p]] = int(p);
  for (int i : su2_idx) {
    SparseRatMatrix op(rep.dim_v, rep.dim_v);
    for (size_t p = 0; p < n_idx.size(); ++p) {
      std::vector<Rat> img = L.bracket.bracket_basis(i, n_idx[p]);
      for (int k = 0; k < L.dim(); ++k)
        if (img[k] != 0) {
          if (pos[k] < 0) throw std::invalid_argument("su(2) action does not preserve n");
          op.add(pos[k], int(p), img[k]);
        }
    }
    rep.operators.push_back(op);
  }

  ConditionResult nontrivial{"[su(2), n] != 0", false, ""};
  for (const auto& op : rep.operators) nontrivial.pass = nontrivial.pass || !op.is_zero();
  out.report.conditions.push_back(nontrivial);

  ConditionResult blocks{"ad Z positive multiple of the identity on each component", true, ""};
  try {
    std::vector<CasimirBlock> cb = casimir_decompose_su2(rep);
    // ad Z restricted to n, in the Casimir eigenvector coordinates
    RatMatrix adZ(rep.dim_v, rep.dim_v);
    for (size_t p = 0; p < n_idx.size(); ++p) {
      std::vector<Rat> img = L.bracket.bracket_basis(z, n_idx[p]);
      for (int k = 0; k < L.dim(); ++k)
        if (img[k] != 0) adZ(pos[k], int(p)) = img[k];
    }
    // Z is scalar on each block iff adZ commutes with the block projectors;
    // with rational data check: for each block, adZ restricted (numerically).
    Eigen::MatrixXd adZe = to_eigen(adZ);
    // recompute eigenvectors as in casimir_decompose_su2
    Eigen::MatrixXd cas = Eigen::MatrixXd::Zero(rep.dim_v, rep.dim_v);
    for (const auto& op : rep.operators) {
      Eigen::MatrixXd e = to_eigen(op.dense());
      cas += e * e;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es((cas + cas.transpose()) / 2);
    const double tau = 1e-8;
    for (const auto& b : cb) {
      Eigen::MatrixXd P(rep.dim_v, int(b.indices.size()));
      for (size_t c = 0; c < b.indices.size(); ++c) P.col(int(c)) = es.eigenvectors().col(b.indices[c]);
      Eigen::MatrixXd r = P.transpose() * adZe * P;
      double scalar = r.trace() / double(b.indices.size());
      Eigen::MatrixXd dev = r - scalar * Eigen::MatrixXd::Identity(r.rows(), r.cols());
      Eigen::MatrixXd off = adZe * P - P * r;
      if (dev.cwiseAbs().maxCoeff() > tau || off.cwiseAbs().maxCoeff() > tau) {
        blocks.pass = false;
        blocks.witness = "ad Z is not scalar on a component";
      } else if (scalar <= tau) {
        blocks.pass = false;
        blocks.witness = "ad Z has non-positive scalar " + std::to_string(scalar) +
                         " on a component";
      }
    }
  } catch (const std::exception& ex) {
    blocks.pass = false;
    blocks.witness = ex.what();
  }
  out.report.conditions.push_back(blocks);

  if (!out.report.all_pass()) return out;

  // psi_t abelianization of n, then numeric certification of the limit
  ScalingFamily psi = abelianization_family(L.dim(), n_idx);
  out.limit = take_limit(scale_bracket(L, psi), L.labels);
  out.limit_certificate = search_negative_ricci_metric(*out.limit, search_budget, seed);
  return out;
}

LieAlgebra make_heisenberg(int k) {
  int n = 2 * k + 1;
  StructureTensor t(n);
  for (int i = 0; i < k; ++i) t.add(2 * i, 2 * i + 1, n - 1, Rat(1));
  std::vector<BasisLabel> labels;
  for (int i = 0; i < n; ++i) labels.push_back(BasisLabel::generic("e" + std::to_string(i + 1)));
  return make_lie_algebra(std::move(labels), std::move(t));
}

LieAlgebra make_su2_h5_example() {
  CompactBuild su2 = build_compact(ClassicalFamily::su, 2);
  // left factor: R Z + su(2), abelian extension
  StructureTensor tl(4);
  for (const auto& e : su2.algebra.bracket.entries()) tl.add(e.i + 1, e.j + 1, e.k + 1, e.c);
  std::vector<BasisLabel> ll;
  ll.push_back(BasisLabel::z());
  for (const auto& l : su2.algebra.labels) ll.push_back(l);
  LieAlgebra left = make_lie_algebra(std::move(ll), std::move(tl));

  // right factor: h5 with pairing [e1, e4] = W, [e2, e3] = W so that the
  // realified defining su(2)-action acts by derivations
  StructureTensor tr(5);
  tr.add(0, 3, 4, Rat(1));
  tr.add(1, 2, 4, Rat(1));
  std::vector<BasisLabel> rl;
  for (int i = 0; i < 4; ++i) rl.push_back(BasisLabel::generic("n" + std::to_string(i + 1)));
  rl.push_back(BasisLabel::generic("w"));
  LieAlgebra right = make_lie_algebra(std::move(rl), std::move(tr));

  // realified action of su(2) on C^2 = R^4 with coordinates
  // (Re z1, Im z1, Re z2, Im z2)
  auto realify = [&](const CMat& a) {
    RatMatrix m(5, 5);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        m(2 * i, 2 * j) = a.re(i, j);
        m(2 * i, 2 * j + 1) = -a.im(i, j);
        m(2 * i + 1, 2 * j) = a.im(i, j);
        m(2 * i + 1, 2 * j + 1) = a.re(i, j);
      }
    return m;
  };
  SemidirectSpec spec;
  spec.left = left;
  spec.right = right;
  RatMatrix zact(5, 5);
  for (int i = 0; i < 4; ++i) zact(i, i) = 1;
  zact(4, 4) = 2;
  spec.action.push_back(zact);
  for (const auto& m : su2.realization.matrices) spec.action.push_back(realify(m));
  return general_semidirect(spec);
}

}  // namespace ricciforge
