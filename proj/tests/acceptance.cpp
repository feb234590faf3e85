// Acceptance suite: runs every top-level criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion.  Exit code = number of hard
// failures (the expected-success search reports EXPECTED-FAIL, not an error).

#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>

#include "ricciforge/parallel.hpp"
#include "test_helpers.hpp"

using namespace ricciforge;
using namespace rftest;
using Clock = std::chrono::steady_clock;

namespace {

int hard_failures = 0;

void report(int idx, bool pass, const std::string& name, const std::string& detail = "",
            bool expected_fail_ok = false) {
  const char* tag = pass ? "PASS" : (expected_fail_ok ? "EXPECTED-FAIL" : "FAIL");
  std::cout << "CRITERION " << idx << ": " << tag << " - " << name;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << std::endl;
  if (!pass && !expected_fail_ok) ++hard_failures;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct GridPoint {
  ClassicalFamily fam;
  int m, n;
};

std::vector<GridPoint> acceptance_grid() {
  std::vector<GridPoint> g;
  for (int m : {2, 3, 4})
    for (int n : {2, 3}) g.push_back({ClassicalFamily::su, m, n});
  for (int m : {4, 5})
    for (int n : {2, 3}) g.push_back({ClassicalFamily::so, m, n});
  for (int m : {2, 3}) g.push_back({ClassicalFamily::sp, m, 2});
  return g;
}

std::string point_name(const GridPoint& p) {
  std::ostringstream os;
  os << family_to_string(p.fam) << "(" << p.m << "), n=" << p.n;
  return os.str();
}

// Pipeline results are shared across the certification, mean-curvature and
// structural criteria; built once, in parallel up to RICCIFORGE_THREADS.
std::vector<PipelineResult> grid_pipelines;
std::vector<std::string> grid_errors;

void build_grid_pipelines() {
  auto grid = acceptance_grid();
  grid_pipelines.resize(grid.size());
  grid_errors.resize(grid.size());
  parallel_for(int(grid.size()), thread_cap(), [&](int i) {
    try {
      grid_pipelines[i] = certify_compact_pipeline(grid[i].fam, grid[i].m, grid[i].n);
    } catch (const std::exception& ex) {
      grid_errors[i] = ex.what();
    }
  });
}

void criterion1() {
  auto t0 = Clock::now();
  MetricLieAlgebra ml = build_gl2_w2_limit();
  RicciReport rr = ricci(ml);
  long expected[10] = {-6, -24, -2, -2, -7, -7, -4, -4, -7, -7};
  bool ok = true;
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j) ok = ok && rr.ricci(i, j) == (i == j ? Rat(expected[i]) : Rat(0));
  double dt = seconds_since(t0);
  ok = ok && dt < 1.0;
  std::ostringstream os;
  os << "runtime " << dt << " s";
  report(1, ok, "exact Ricci diagonal of the degenerated gl(2,R) x W2", os.str());
}

void criterion2() {
  auto t0 = Clock::now();
  MetricLieAlgebra ml = build_sl2_c2_limit();
  RicciReport rr = ricci(ml);
  bool first = rr.ricci(2, 2) == Rat(-1) && rr.ricci(3, 3) == Rat(-1) &&
               rr.ricci(2, 3) == Rat(1) && rr.ricci(3, 2) == Rat(1) && rr.ricci(0, 0) == Rat(-4) &&
               rr.ricci(1, 1) == Rat(-12) && rr.ricci(4, 4) == Rat(-5) && rr.ricci(5, 5) == Rat(-5) &&
               rr.ricci(6, 6) == Rat(-3) && rr.ricci(7, 7) == Rat(-3);

  // after the basis change to (X+Y, X-Y): declare the new frame orthonormal
  RatMatrix change = RatMatrix::identity(8);
  change(2, 2) = 1;
  change(2, 3) = 1;
  change(3, 2) = 1;
  change(3, 3) = -1;
  LieAlgebra rotated = gl_action(change.inverse(), ml.algebra);
  RicciReport rr2 = ricci(make_metric(rotated, RatMatrix::identity(8)));
  long expected2[8] = {-4, -12, -8, -12, -2, -2, -6, -6};
  bool second = true;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      second = second && rr2.ricci(i, j) == (i == j ? Rat(expected2[i]) : Rat(0));
  double dt = seconds_since(t0);

  std::ostringstream os;
  os << "block and first diagonal " << (first ? "exact" : "MISMATCH") << "; rescaled-basis diagonal ";
  if (second) {
    os << "exact";
  } else {
    os << "computed Diag(";
    for (int i = 0; i < 8; ++i) os << rat_to_string(rr2.ricci(i, i)) << (i < 7 ? ", " : ")");
    os << " vs stated Diag(-4, -12, -8, -12, -2, -2, -6, -6)";
  }
  os << "; runtime " << dt << " s";
  report(2, first && second && dt < 1.0, "sl(2,R) x C^2 limit Ricci matrices", os.str());
}

void criterion3() {
  auto t0 = Clock::now();
  bool ok = true;
  std::string detail;
  for (const auto& p : acceptance_grid()) {
    PolyRep pr = build_poly_rep(p.fam, p.m, p.n);
    bool l0 = check_lemma0(pr.rep, pr.split).all_pass();
    bool mt = check_main_theorem(pr.rep, pr.split, RatMatrix::identity(pr.rep.dim_v)).all_pass();
    if (!(l0 && mt)) {
      ok = false;
      detail += point_name(p) + " failed; ";
    }
  }
  double dt = seconds_since(t0);
  std::ostringstream os;
  os << detail << "12 grid points, runtime " << dt << " s";
  report(3, ok && dt < 30.0, "hypothesis checks across the family grid", os.str());
}

void criterion4() {
  auto t0 = Clock::now();
  bool ok = true;
  std::string detail;
  auto grid = acceptance_grid();
  std::vector<std::string> point_detail(grid.size());
  parallel_for(int(grid.size()), thread_cap(), [&](int i) {
    if (!grid_errors[i].empty()) {
      point_detail[i] = point_name(grid[i]) + ": " + grid_errors[i] + "; ";
      return;
    }
    const PipelineResult& pr = grid_pipelines[i];
    bool neg = pr.certificate.lambda_max < -1e-6;
    RicciReport rr = ricci(make_metric(pr.limit, pr.certificate.gram));
    bool reverify = std::abs(rr.eigenvalues.back() - pr.certificate.lambda_max) <=
                    1e-9 * std::max(1.0, std::abs(pr.certificate.lambda_max));
    if (!(neg && reverify)) point_detail[i] = point_name(grid[i]) + " not certified; ";
  });
  for (const auto& d : point_detail)
    if (!d.empty()) {
      ok = false;
      detail += d;
    }
  double dt = seconds_since(t0);
  std::ostringstream os;
  os << detail << "runtime " << dt << " s";
  report(4, ok, "negative-Ricci certificates across the family grid", os.str());
}

void criterion5() {
  bool ok = true;
  std::string detail;
  auto grid = acceptance_grid();
  for (size_t i = 0; i < grid.size(); ++i) {
    if (!grid_errors[i].empty()) {
      ok = false;
      detail += point_name(grid[i]) + " unavailable; ";
      continue;
    }
    const PipelineResult& pr = grid_pipelines[i];
    int dv = int(pr.split.v1.size() + pr.split.v2.size());
    for (const RatMatrix& gram :
         {RatMatrix::identity(pr.limit.dim()), pr.certificate.gram}) {
      std::vector<Rat> h = mean_curvature(make_metric(pr.limit, gram));
      bool point_ok = h[0] == Rat(dv);
      for (int j = 1; j < pr.limit.dim(); ++j) point_ok = point_ok && h[j] == 0;
      if (!point_ok) {
        ok = false;
        detail += point_name(grid[i]) + "; ";
      }
    }
  }
  report(5, ok, "mean curvature equals (dim V) Z on every degeneration limit", detail);
}

void criterion6() {
  bool ok = true;
  std::string detail;
  // solvable shape
  for (unsigned seed = 0; seed < 20; ++seed) {
    SolvableInstance inst = random_solvable(seed, seed % 2 == 0);
    RatMatrix block = ricci_solvable(inst.ml, inst.a_idx, inst.n_idx);
    RatMatrix general = ricci(inst.ml).ricci;
    if (max_abs_diff(block, general) > 1e-10) {
      ok = false;
      detail += "solvable seed " + std::to_string(seed) + "; ";
    }
  }
  // triple shape: su(2) |x h5 and its abelianization under seeded grams
  LieAlgebra L = make_su2_h5_example();
  std::vector<int> a_idx = {0}, r_idx = {1, 2, 3}, n_idx = {4, 5, 6, 7, 8};
  ScalingFamily psi = abelianization_family(9, n_idx);
  LieAlgebra lim = take_limit(scale_bracket(L, psi), L.labels);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> gd(1, 4);
  for (unsigned seed = 0; seed < 20; ++seed) {
    const LieAlgebra& alg = (seed % 2 == 0) ? L : lim;
    std::vector<Rat> diag;
    for (int i = 0; i < 9; ++i) diag.push_back(rat(gd(rng), gd(rng)));
    MetricLieAlgebra ml = make_metric(alg, RatMatrix::diagonal(diag));
    RatMatrix block = ricci_triple(ml, a_idx, r_idx, n_idx);
    RatMatrix general = ricci(ml).ricci;
    if (max_abs_diff(block, general) > 1e-10) {
      ok = false;
      detail += "triple seed " + std::to_string(seed) + "; ";
    }
  }
  report(6, ok, "solvable and triple Ricci forms agree with the general formula", detail);
}

void criterion7() {
  bool ok = true;
  std::string detail;
  // lemma-0 limit of su(2), n = 2 equals the expected bracket list exactly
  {
    CompactBuild su2 = build_compact(ClassicalFamily::su, 2);
    PolyRep pr = build_poly_rep(ClassicalFamily::su, 2, 2);
    LieAlgebra full = central_semidirect(su2.algebra, pr.rep);
    Rat rho = rat(1, 2);
    LieAlgebra lim =
        take_limit(scale_bracket(full, lemma0_family(full, pr.split, rho)), full.labels);
    StructureTensor expected(10);
    expected.add(1, 2, 3, full.bracket.coeff(1, 2, 3));
    expected.add(1, 3, 2, full.bracket.coeff(1, 3, 2));
    for (int v = 0; v < 6; ++v) expected.add(0, 4 + v, 4 + v, Rat(1));
    RatMatrix piH = pr.rep.operators[0].dense(), piX = pr.rep.operators[1].dense(),
              piY = pr.rep.operators[2].dense();
    for (int col = 0; col < 6; ++col)
      for (int row = 0; row < 6; ++row)
        if (piH(row, col) != 0) expected.add(1, 4 + col, 4 + row, piH(row, col));
    for (int col : pr.split.v1)
      for (int row = 0; row < 6; ++row) {
        if (piX(row, col) != 0) expected.add(2, 4 + col, 4 + row, rho * piX(row, col));
        if (piY(row, col) != 0) expected.add(3, 4 + col, 4 + row, rho * piY(row, col));
      }
    if (!(lim.bracket == expected)) {
      ok = false;
      detail += "lemma-0 bracket list mismatch; ";
    }
    if (!check_jacobi(lim).ok) {
      ok = false;
      detail += "lemma-0 limit violates Jacobi; ";
    }
  }
  // psi abelianization
  {
    LieAlgebra L = make_su2_h5_example();
    std::vector<int> n_idx = {4, 5, 6, 7, 8};
    LieAlgebra lim = take_limit(scale_bracket(L, abelianization_family(9, n_idx)), L.labels);
    for (size_t a = 0; a < n_idx.size() && ok; ++a)
      for (size_t b = a + 1; b < n_idx.size() && ok; ++b)
        if (!all_zero(lim.bracket.bracket_basis(n_idx[a], n_idx[b]))) {
          ok = false;
          detail += "abelianization left an internal bracket; ";
        }
    for (const auto& e : L.bracket.entries())
      if (e.i < 4 && lim.bracket.coeff(e.i, e.j, e.k) != e.c) {
        ok = false;
        detail += "abelianization changed a cross bracket; ";
        break;
      }
    if (!check_jacobi(lim).ok) {
      ok = false;
      detail += "abelianized limit violates Jacobi; ";
    }
  }
  report(7, ok, "degeneration limits are bracket-exact and Jacobi-exact", detail);
}

void criterion8() {
  bool ok = true;
  std::string detail;
  auto grid = acceptance_grid();
  std::vector<std::string> point_detail(grid.size());
  parallel_for(int(grid.size()), thread_cap(), [&](int gi) {
    const GridPoint& p = grid[gi];
    PolyRep pr = build_poly_rep(p.fam, p.m, p.n);
    CompactBuild cb = build_compact(p.fam, p.m);
    LieAlgebra full = central_semidirect(cb.algebra, pr.rep);
    if (!check_jacobi(full).ok) point_detail[gi] += point_name(p) + " product Jacobi; ";
    if (p.fam == ClassicalFamily::su) {
      long binom = 1;
      for (int i = 0; i < p.m - 1; ++i) binom = binom * (p.n + p.m - 1 - i) / (i + 1);
      if (pr.rep.dim_v != 2 * binom) point_detail[gi] += point_name(p) + " dim W mismatch; ";
    }
    // nilradical of the limit is two-step nilpotent
    LieAlgebra lim = take_limit(
        scale_bracket(full, lemma0_family(full, pr.split, choose_rho(pr.rep, pr.split))),
        full.labels);
    std::vector<int> n_idx;
    for (int i = 0; i < lim.dim(); ++i)
      if (lim.labels[i].kind == LabelKind::RootX || lim.labels[i].kind == LabelKind::RootY ||
          lim.labels[i].kind == LabelKind::Monomial)
        n_idx.push_back(i);
    if (!indices_form_ideal(lim, n_idx)) {
      point_detail[gi] += point_name(p) + " n not an ideal; ";
      return;
    }
    LieAlgebra nsub = subalgebra_on_indices(lim, n_idx);
    auto series = lower_central_series(nsub);
    if (!(series.size() == 3 && series.back().empty() && !series[1].empty()))
      point_detail[gi] += point_name(p) + " nilradical not two-step; ";
  });
  for (const auto& d : point_detail)
    if (!d.empty()) {
      ok = false;
      detail += d;
    }
  // fixtures
  for (const LieAlgebra& L : {heisenberg3(), make_heisenberg(2),
                              build_noncompact_sl(2, false).algebra, make_su2_h5_example()}) {
    if (!check_jacobi(L).ok) {
      ok = false;
      detail += "fixture Jacobi; ";
    }
  }
  report(8, ok, "structural invariants across the grid and fixtures", detail);
}

void criterion9() {
  bool ok = true;
  std::string detail;
  // h3 nice with diagonal moment map
  if (!is_nice_basis(heisenberg3()).nice) {
    ok = false;
    detail += "h3 not reported nice; ";
  }
  RatMatrix M = moment_map(make_metric(heisenberg3(), RatMatrix::identity(3)));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j && M(i, j) != 0) {
        ok = false;
        detail += "h3 moment map not diagonal; ";
      }
  // gl(3,R) x W2 basis not nice
  {
    NoncompactBuild gl3 = build_noncompact_sl(3, true);
    PolyRep pr = build_poly_rep(ClassicalFamily::sl, 3, 2);
    std::vector<int> sl_idx;
    for (int i = 1; i < gl3.algebra.dim(); ++i) sl_idx.push_back(i);
    LieAlgebra L = central_semidirect(subalgebra_on_indices(gl3.algebra, sl_idx), pr.rep);
    if (is_nice_basis(L).nice) {
      ok = false;
      detail += "gl(3,R) x W2 reported nice; ";
    }
  }
  // verdict invariant under positive diagonal rescaling
  {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> d(1, 5);
    for (const LieAlgebra& L : {heisenberg3(), make_su2_h5_example()}) {
      std::vector<Rat> diag;
      for (int i = 0; i < L.dim(); ++i) diag.push_back(rat(d(rng), d(rng)));
      LieAlgebra scaled = gl_action(RatMatrix::diagonal(diag), L);
      if (is_nice_basis(scaled).nice != is_nice_basis(L).nice) {
        ok = false;
        detail += "rescaling changed a niceness verdict; ";
      }
    }
  }
  report(9, ok, "nice-basis behavior", detail);
}

void criterion10() {
  bool ok = true;
  std::string detail;
  // isometry invariance over 50 seeded basis changes
  {
    std::vector<LieAlgebra> fixtures = {heisenberg3(), build_sl2_c2_limit().algebra,
                                        build_gl2_w2_limit().algebra};
    std::mt19937_64 rng(97);
    for (int trial = 0; trial < 50; ++trial) {
      const LieAlgebra& L = fixtures[trial % fixtures.size()];
      int n = L.dim();
      RatMatrix g = random_invertible(n, rng);
      RicciReport a = ricci(make_metric(gl_action(g, L), RatMatrix::identity(n)));
      RicciReport b = ricci(make_metric(L, g.transpose() * g));
      for (size_t i = 0; i < a.eigenvalues.size(); ++i) {
        double scale = std::max(1.0, std::abs(b.eigenvalues[i]));
        if (std::abs(a.eigenvalues[i] - b.eigenvalues[i]) > 1e-9 * scale) {
          ok = false;
          detail += "isometry trial " + std::to_string(trial) + "; ";
          break;
        }
      }
    }
  }
  // gl_action functoriality (exact)
  {
    std::mt19937_64 rng(5);
    LieAlgebra L = build_compact(ClassicalFamily::sp, 2).algebra;
    for (int trial = 0; trial < 5; ++trial) {
      RatMatrix g = random_invertible(L.dim(), rng), h = random_invertible(L.dim(), rng);
      if (!(gl_action(g * h, L).bracket == gl_action(g, gl_action(h, L)).bracket)) {
        ok = false;
        detail += "functoriality; ";
      }
    }
  }
  // gram-scale invariance of the hypothesis checks
  {
    PolyRep pr = build_poly_rep(ClassicalFamily::so, 4, 2);
    CheckReport a = check_main_theorem(pr.rep, pr.split, RatMatrix::identity(pr.rep.dim_v));
    CheckReport b =
        check_main_theorem(pr.rep, pr.split, RatMatrix::identity(pr.rep.dim_v) * rat(7, 3));
    for (size_t i = 0; i < a.conditions.size(); ++i)
      if (a.conditions[i].pass != b.conditions[i].pass) {
        ok = false;
        detail += "gram-scale variance; ";
      }
  }
  report(10, ok, "property-based invariants", detail);
}

void criterion11() {
  auto t0 = Clock::now();
  NoncompactBuild sl3 = build_noncompact_sl(3, false);
  SearchResult res = search_negative_ricci_metric(sl3.algebra, 100000, 0);
  double dt = seconds_since(t0);
  std::ostringstream os;
  os << "lambda_max = " << res.lambda_max << ", " << res.evaluations << " evaluations, runtime "
     << dt << " s";
  if (res.found && dt < 300.0) {
    report(11, true, "metric search on sl(3,R)", os.str());
  } else {
    report(11, false, "metric search on sl(3,R)", os.str(), /*expected_fail_ok=*/true);
  }
}

}  // namespace

int main() {
  build_grid_pipelines();
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  criterion11();
  std::cout << (hard_failures == 0 ? "ALL CRITERIA PASS" : "FAILURES PRESENT") << " ("
            << hard_failures << " hard failures)" << std::endl;
  return hard_failures;
}
