#ifndef RICCIFORGE_CERTIFY_HPP
#define RICCIFORGE_CERTIFY_HPP

#include <optional>
#include <string>

#include "ricciforge/curvature.hpp"
#include "ricciforge/degeneration.hpp"
#include "ricciforge/semidirect.hpp"

namespace ricciforge {

struct ConditionResult {
  std::string name;
  bool pass = false;
  std::string witness;  // violating pair / offending eigenvalue / note
};

struct CheckReport {
  std::string theorem;  // "lemma0", "main", "ssnc", "su2_nilpotent"
  std::vector<ConditionResult> conditions;
  bool all_pass() const {
    for (const auto& c : conditions)
      if (!c.pass) return false;
    return true;
  }
};

/// H-invariance of V1, V2 and pi(X)V1, pi(Y)V1 in V2 for every positive
/// root vector; all exact.
CheckReport check_lemma0(const Representation& rep, const SubspaceSplit& split);

/// Conditions on (V, pi, gram_V): (i) every simple pi(H) skew-symmetric,
/// (ii) pi(X)|V1 nontrivial for every root vector, (iii) pairwise traces
/// tr(pi(Y)|V1^T pi(X)|V1) vanish for X != Y.  Requires V1 gram-orthogonal
/// to V2.  All exact.
CheckReport check_main_theorem(const Representation& rep, const SubspaceSplit& split,
                               const RatMatrix& gram_v);

/// rho with rho^2 below half of
/// min(2m / lmax(sum pi(X)|V1^T pi(X)|V1), 4m / lmax(sum pi(X)|V1 pi(X)|V1^T)),
/// chosen as the largest power of 1/2.  m = dim V.
Rat choose_rho(const Representation& rep, const SubspaceSplit& split);

struct RicciCertificate {
  RatMatrix gram;
  std::vector<double> eigenvalues;
  double lambda_max = 0;
  Rat rho;
  std::string perturbation;            // description of the diagonal V1 rescaling
  std::vector<Rat> perturbation_factors;  // per-V1-vector gram factors
  std::vector<std::string> pipeline;   // provenance
};

struct PipelineResult {
  LieAlgebra limit;           // the solvable degeneration
  SubspaceSplit split;        // indices into the representation space
  RicciCertificate certificate;
  CheckReport lemma0;
  CheckReport main_theorem;
};

/// End-to-end negative-Ricci certification for the compact families:
/// build u and its polynomial representation, form (RZ + u) |x V, degenerate
/// along the lemma0 family with rho from choose_rho (or the override), then
/// walk a fixed grid of diagonal V1 rescalings until the exact Ricci has
/// lambda_max < -1e-6.  Throws "certificate not found within grid" when the
/// walk fails.
PipelineResult certify_compact_pipeline(ClassicalFamily family, int m, int n,
                                        std::optional<Rat> rho_override = std::nullopt);

/// The 10-dimensional solvable limit of gl(2,R) |x P_2(C^2) in the basis
/// {Z, H, X, Y, v1..v6}, together with the rescaled metric making
/// {Z,H,X,Y, v1/2, v2/2, v3, v4, v5/2, v6/2} orthonormal.
MetricLieAlgebra build_gl2_w2_limit();

/// The 8-dimensional solvable limit of gl(2,R) |x C^2 in the basis
/// {Z, H, X, Y, z1, i z1, z2, i z2} with the orthonormal-basis metric.
MetricLieAlgebra build_sl2_c2_limit();

struct SsncInput {
  LieAlgebra algebra;                // the full (a + r) |x n product
  std::vector<int> a_idx, r_idx, n_idx;
  RatMatrix gram_r, gram_n;
  std::vector<int> cartan_k;         // indices (into r_idx) spanning k of r = k + p
  std::optional<std::vector<Rat>> a0_candidate;  // coordinates in the a-basis
};

/// Conditions for the non-compact semidirect construction:
/// (1) gram_n-normality of every ad A|n, (2) some eigenvalue of each ad A|n
/// off the imaginary axis, (3) an element with all eigenvalue real parts
/// positive (searched over the candidate, the a-basis and pairwise sums;
/// heuristic), (4) Ric(gram_r) < 0 with gram_r-orthogonal Cartan factors.
CheckReport check_ssnc(const SsncInput& in);

struct SearchResult {
  bool found = false;
  RatMatrix gram;
  double lambda_max = 0;
  long evaluations = 0;
};

/// Derivative-free minimization of lambda_max(Ric) over gram = L^T L with
/// L lower-triangular, positive diagonal.  Deterministic for a fixed seed.
SearchResult search_negative_ricci_metric(const LieAlgebra& L, long budget, unsigned seed);

struct Su2TheoremReport {
  CheckReport report;
  std::optional<LieAlgebra> limit;
  std::optional<SearchResult> limit_certificate;
};

/// Hypotheses of the su(2) semidirect theorem on a built (RZ + su(2)) |x n:
/// [Z, su(2)] = 0, nontrivial action on n, ad Z a positive multiple of the
/// identity on each Casimir block; then abelianizes n along psi_t and
/// certifies the limit numerically.
Su2TheoremReport check_su2_theorem(const LieAlgebra& L, const std::vector<int>& su2_idx,
                                   const std::vector<int>& n_idx, long search_budget = 20000,
                                   unsigned seed = 0);

/// (RZ + su(2)) |x h5 with su(2) acting through the realified defining
/// representation on R^4 and Z with weights (1,1,1,1,2).
LieAlgebra make_su2_h5_example();

LieAlgebra make_heisenberg(int k);  // dim 2k+1, [e_{2i-1}, e_{2i}] = e_{2k+1}

}  // namespace ricciforge

#endif
