#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <iostream>

#include "ricciforge/io.hpp"

using namespace ricciforge;

namespace {

// Outputs written during the current invocation, for the manifest.
std::vector<std::string> written_outputs;

void save_output(const std::string& path, const json& j) {
  save_json_file(path, j);
  written_outputs.push_back(path);
}

void print_diag(const RatMatrix& m) {
  std::cout << "Diag(";
  for (int i = 0; i < m.rows(); ++i) {
    if (i) std::cout << ", ";
    std::cout << rat_to_string(m(i, i));
  }
  std::cout << ")\n";
}

bool matrix_is_diagonal(const RatMatrix& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (i != j && m(i, j) != 0) return false;
  return true;
}

int cmd_build(const std::string& family, int m, const std::string& out, bool emit_json) {
  ClassicalFamily f = family_from_string(family);
  json algebra_json, roots_json;
  if (f == ClassicalFamily::sl) {
    NoncompactBuild nb = build_noncompact_sl(m, true);
    algebra_json = algebra_to_json(nb.algebra);
    roots_json = root_datum_to_json(nb.roots);
  } else {
    CompactBuild cb = build_compact(f, m);
    algebra_json = algebra_to_json(cb.algebra);
    roots_json = root_datum_to_json(cb.roots);
    for (const auto& note : cb.algebra.notes) std::cerr << "note: " << note << "\n";
  }
  if (!out.empty()) {
    save_output(out, algebra_json);
    std::string roots_path = out;
    auto dot = roots_path.rfind(".json");
    roots_path = (dot == std::string::npos ? roots_path : roots_path.substr(0, dot)) + ".roots.json";
    save_output(roots_path, roots_json);
    std::cout << "wrote " << out << " and " << roots_path << "\n";
  }
  if (emit_json || out.empty()) {
    json j;
    j["algebra"] = algebra_json;
    j["roots"] = roots_json;
    std::cout << j.dump(2) << "\n";
  }
  return 0;
}

int cmd_rep(const std::string& family, int m, int n, bool emit_matrices, const std::string& out) {
  PolyRep pr = build_poly_rep(family_from_string(family), m, n);
  json j = representation_to_json(pr.rep, pr.split);
  if (!out.empty()) {
    save_output(out, j);
    std::cout << "wrote " << out << "\n";
  }
  if (emit_matrices) {
    for (int i = 0; i < pr.rep.source.dim(); ++i) {
      std::cout << "pi(" << pr.rep.source.labels[i].text << ") =\n";
      RatMatrix d = pr.rep.operators[i].dense();
      for (int r = 0; r < d.rows(); ++r) {
        for (int c = 0; c < d.cols(); ++c) std::cout << rat_to_string(d(r, c)) << (c + 1 < d.cols() ? " " : "");
        std::cout << "\n";
      }
    }
  } else if (out.empty()) {
    std::cout << j.dump(2) << "\n";
  }
  return 0;
}

int cmd_assemble(const std::string& left_path, const std::string& rep_path, bool central_z,
                 const std::string& out) {
  LieAlgebra left = algebra_from_json(load_json_file(left_path));
  auto [rep, split] = representation_from_json(load_json_file(rep_path));
  if (rep.source.dim() != left.dim())
    throw MalformedInput("representation source dimension does not match the left algebra");
  rep.source = left;  // act through the supplied algebra's labels
  if (!central_z) throw MalformedInput("only --central-z assembly is supported from files");
  LieAlgebra prod = central_semidirect(left, rep);
  json j = algebra_to_json(prod);
  if (!out.empty()) {
    save_output(out, j);
    std::cout << "wrote " << out << "\n";
  } else {
    std::cout << j.dump(2) << "\n";
  }
  return 0;
}

int cmd_ricci(const std::string& algebra_path, const std::string& gram_path, bool as_json,
              const std::string& out) {
  LieAlgebra L = algebra_from_json(load_json_file(algebra_path));
  RatMatrix gram = gram_path.empty() ? RatMatrix::identity(L.dim())
                                     : rat_matrix_from_json(load_json_file(gram_path));
  RicciReport rr = ricci(make_metric(L, gram));
  json j = ricci_report_to_json(rr);
  if (!out.empty()) save_output(out, j);
  if (as_json || !out.empty()) {
    if (out.empty()) std::cout << j.dump(2) << "\n";
  } else {
    if (matrix_is_diagonal(rr.ricci)) {
      std::cout << "Ric = ";
      print_diag(rr.ricci);
    } else {
      std::cout << "Ric =\n";
      for (int r = 0; r < rr.ricci.rows(); ++r) {
        for (int c = 0; c < rr.ricci.cols(); ++c)
          std::cout << rat_to_string(rr.ricci(r, c)) << (c + 1 < rr.ricci.cols() ? " " : "");
        std::cout << "\n";
      }
    }
    std::cout << "verdict: " << definiteness_name(rr.definiteness.verdict)
              << ", lambda_max = " << rr.definiteness.lambda_max << "\n";
  }
  return rr.definiteness.verdict == Definiteness::negative_definite ? 0 : 1;
}

int cmd_degenerate(const std::string& algebra_path, const std::string& family_path, bool limit,
                   const std::string& out) {
  LieAlgebra L = algebra_from_json(load_json_file(algebra_path));
  ScalingFamily f = scaling_family_from_json(load_json_file(family_path));
  LaurentBracket lb = scale_bracket(L, f);
  if (!limit) {
    std::cout << "scaled bracket has " << lb.entries.size() << " coefficient slots\n";
    return 0;
  }
  std::vector<std::string> dropped;
  LieAlgebra lim = take_limit(lb, L.labels, &dropped);
  json j = algebra_to_json(lim);
  if (!out.empty()) {
    save_output(out, j);
    std::cout << "wrote " << out << "\n";
  } else {
    std::cout << j.dump(2) << "\n";
  }
  for (const auto& d : dropped) std::cerr << d << "\n";
  return 0;
}

int cmd_check(const std::string& family, int m, int n) {
  PolyRep pr = build_poly_rep(family_from_string(family), m, n);
  CheckReport l0 = check_lemma0(pr.rep, pr.split);
  CheckReport mt = check_main_theorem(pr.rep, pr.split, RatMatrix::identity(pr.rep.dim_v));
  json j;
  j["lemma0"] = check_report_to_json(l0);
  j["main"] = check_report_to_json(mt);
  std::cout << j.dump(2) << "\n";
  return l0.all_pass() && mt.all_pass() ? 0 : 1;
}

int cmd_certify(const std::string& family, int m, int n, const std::string& out,
                const std::string& algebra_path, long budget, unsigned seed,
                const std::string& rho_str) {
  if (!algebra_path.empty()) {
    LieAlgebra L = algebra_from_json(load_json_file(algebra_path));
    SearchResult sr = search_negative_ricci_metric(L, budget, seed);
    if (!sr.found) {
      std::cout << "no negative-Ricci metric found within budget (best lambda_max = "
                << sr.lambda_max << ")\n";
      return 1;
    }
    RicciCertificate cert;
    cert.gram = sr.gram;
    RicciReport rr = ricci(make_metric(L, sr.gram));
    cert.eigenvalues = rr.eigenvalues;
    cert.lambda_max = rr.eigenvalues.back();
    cert.rho = Rat(0);
    cert.perturbation = "metric search, seed " + std::to_string(seed);
    cert.pipeline = {"derivative-free search over gram = L^T L"};
    if (!out.empty()) save_output(out, certificate_to_json(cert));
    std::cout << "lambda_max = " << cert.lambda_max << "\n";
    return 0;
  }
  std::optional<Rat> rho_override;
  if (!rho_str.empty()) rho_override = rat_from_string(rho_str);
  PipelineResult pr = certify_compact_pipeline(family_from_string(family), m, n, rho_override);
  if (!out.empty()) {
    save_output(out, certificate_to_json(pr.certificate));
    std::string limit_path = out;
    auto dot = limit_path.rfind(".json");
    limit_path = (dot == std::string::npos ? limit_path : limit_path.substr(0, dot)) + ".algebra.json";
    save_output(limit_path, algebra_to_json(pr.limit));
    std::cout << "wrote " << out << " and " << limit_path << "\n";
  }
  std::cout << "lambda_max = " << pr.certificate.lambda_max << " (rho = "
            << rat_to_string(pr.certificate.rho) << ", " << pr.certificate.perturbation << ")\n";
  return pr.certificate.lambda_max < 0 ? 0 : 1;
}

int cmd_verify(const std::string& cert_path, const std::string& algebra_path) {
  RicciCertificate cert = certificate_from_json(load_json_file(cert_path));
  LieAlgebra L = algebra_from_json(load_json_file(algebra_path));
  RicciReport rr = ricci(make_metric(L, cert.gram));
  double lmax = rr.eigenvalues.back();
  bool ok = rr.definiteness.verdict == Definiteness::negative_definite &&
            std::abs(lmax - cert.lambda_max) <= 1e-9 * std::max(1.0, std::abs(cert.lambda_max));
  bool spectra_ok = rr.eigenvalues.size() == cert.eigenvalues.size();
  for (size_t i = 0; spectra_ok && i < rr.eigenvalues.size(); ++i)
    spectra_ok = std::abs(rr.eigenvalues[i] - cert.eigenvalues[i]) <= 1e-9;
  std::cout << (ok && spectra_ok ? "VERIFIED" : "MISMATCH") << ": lambda_max = " << lmax
            << " (certificate " << cert.lambda_max << ")\n";
  return ok && spectra_ok ? 0 : 1;
}

int cmd_reproduce(const std::string& what) {
  if (what != "paper-examples") throw MalformedInput("unknown reproduction target: " + what);
  int failures = 0;

  {
    MetricLieAlgebra ml = build_gl2_w2_limit();
    RicciReport rr = ricci(ml);
    std::vector<long> expected = {-6, -24, -2, -2, -7, -7, -4, -4, -7, -7};
    bool ok = matrix_is_diagonal(rr.ricci);
    for (int i = 0; i < 10 && ok; ++i) ok = rr.ricci(i, i) == Rat(expected[i]);
    std::cout << "[gl(2,R) x W2 limit] Ric = ";
    print_diag(rr.ricci);
    std::cout << "  expected Diag(-6, -24, -2, -2, -7, -7, -4, -4, -7, -7): "
              << (ok ? "PASS" : "FAIL") << "\n";
    failures += ok ? 0 : 1;
  }
  {
    MetricLieAlgebra ml = build_sl2_c2_limit();
    RicciReport rr = ricci(ml);
    bool ok = rr.ricci(2, 2) == Rat(-1) && rr.ricci(3, 3) == Rat(-1) && rr.ricci(2, 3) == Rat(1) &&
              rr.ricci(3, 2) == Rat(1);
    std::vector<long> diag = {-4, -12, 0, 0, -5, -5, -3, -3};
    for (int i : {0, 1, 4, 5, 6, 7}) ok = ok && rr.ricci(i, i) == Rat(diag[i]);
    std::cout << "[sl(2,R) x C^2 limit] Ric diagonal = (";
    for (int i = 0; i < 8; ++i) std::cout << rat_to_string(rr.ricci(i, i)) << (i < 7 ? ", " : ")\n");
    std::cout << "  (X,Y) block [[-1, 1], [1, -1]] and diagonal (-4, -12, ., ., -5, -5, -3, -3): "
              << (ok ? "PASS" : "FAIL") << "\n";
    failures += ok ? 0 : 1;

    // the same bracket with {Z, H, X+Y, X-Y, z1, i z1, z2, i z2} orthonormal
    RatMatrix g(8, 8);
    for (int i = 0; i < 8; ++i) g(i, i) = 1;
    g(2, 2) = rat(1, 2);
    g(3, 3) = rat(1, 2);
    RatMatrix change = RatMatrix::identity(8);
    change(2, 2) = 1;
    change(2, 3) = 1;
    change(3, 2) = 1;
    change(3, 3) = -1;  // columns: X+Y, X-Y
    LieAlgebra rotated = gl_action(change.inverse(), ml.algebra);
    RicciReport rr2 = ricci(make_metric(rotated, RatMatrix::identity(8)));
    std::vector<long> expected2 = {-4, -12, -8, -12, -2, -2, -6, -6};
    bool ok2 = matrix_is_diagonal(rr2.ricci);
    for (int i = 0; i < 8 && ok2; ++i) ok2 = rr2.ricci(i, i) == Rat(expected2[i]);
    std::cout << "[sl(2,R) x C^2 limit, basis X+Y, X-Y] Ric = ";
    if (matrix_is_diagonal(rr2.ricci))
      print_diag(rr2.ricci);
    else
      std::cout << "(non-diagonal)\n";
    std::cout << "  expected Diag(-4, -12, -8, -12, -2, -2, -6, -6): " << (ok2 ? "PASS" : "FAIL")
              << "\n";
    failures += ok2 ? 0 : 1;
  }
  std::cout << (failures == 0 ? "PASS" : "FAIL") << " (" << failures << " mismatching)\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ricciforge: exact Lie-algebra curvature workbench"};
  app.require_subcommand(1);

  std::string family = "su", out, algebra_path, gram_path, rep_path, family_path, cert_path, what;
  int m = 2, n = 2;
  bool emit_json = false, emit_matrices = false, central_z = false, limit = false, as_json = false;
  long budget = 100000;
  unsigned seed = 0;
  std::string rho_str, manifest_path;

  auto* b = app.add_subcommand("build", "construct a classical algebra");
  b->add_option("--family", family)->required();
  b->add_option("--m", m)->required();
  b->add_option("--out", out);
  b->add_flag("--json", emit_json);

  auto* r = app.add_subcommand("rep", "polynomial representation");
  r->add_option("--family", family)->required();
  r->add_option("--m", m)->required();
  r->add_option("--n", n)->required();
  r->add_flag("--emit-matrices", emit_matrices);
  r->add_option("--out", out);

  auto* a = app.add_subcommand("assemble", "central semidirect product from files");
  a->add_option("--left", algebra_path)->required();
  a->add_option("--rep", rep_path)->required();
  a->add_flag("--central-z", central_z);
  a->add_option("--out", out);

  auto* rc = app.add_subcommand("ricci", "Ricci operator of a metric Lie algebra");
  rc->add_option("--algebra", algebra_path)->required();
  rc->add_option("--gram", gram_path);
  rc->add_flag("--json", as_json);
  rc->add_option("--out", out);

  auto* d = app.add_subcommand("degenerate", "scale a bracket and take the limit");
  d->add_option("--algebra", algebra_path)->required();
  d->add_option("--family", family_path)->required();
  d->add_flag("--limit", limit);
  d->add_option("--out", out);

  auto* c = app.add_subcommand("check", "theorem hypothesis checks");
  c->add_option("--family", family)->required();
  c->add_option("--m", m)->required();
  c->add_option("--n", n)->required();

  auto* ce = app.add_subcommand("certify", "negative-Ricci certification");
  ce->add_option("--family", family);
  ce->add_option("--m", m);
  ce->add_option("--n", n);
  ce->add_option("--algebra", algebra_path);
  ce->add_option("--budget", budget);
  ce->add_option("--seed", seed);
  ce->add_option("--rho", rho_str);
  ce->add_option("--out", out);

  auto* v = app.add_subcommand("verify", "re-check a certificate");
  v->add_option("certificate", cert_path)->required();
  v->add_option("algebra", algebra_path)->required();

  auto* rp = app.add_subcommand("reproduce", "golden-value reproduction driver");
  rp->add_option("target", what)->required();

  for (auto* sub : {b, r, a, rc, d, ce}) sub->add_option("--manifest", manifest_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  auto t0 = std::chrono::steady_clock::now();
  auto finish = [&](int code) {
    if (!manifest_path.empty()) {
      RunManifest man;
      for (int i = 0; i < argc; ++i) man.command += std::string(i ? " " : "") + argv[i];
      man.tool_version = kToolVersion;
      json params;
      params["family"] = family;
      params["m"] = m;
      params["n"] = n;
      params["seed"] = seed;
      params["budget"] = budget;
      man.parameters = params;
      json inputs;
      for (const std::string& p : {algebra_path, gram_path, rep_path, family_path, cert_path})
        if (!p.empty() && std::filesystem::exists(p)) inputs[p] = file_hash(p);
      man.input_hashes = inputs;
      json outputs;
      for (const auto& o : written_outputs) outputs[o] = file_hash(o);
      man.outputs = outputs;
      man.wall_time_ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      save_json_file(manifest_path, man.to_json());
    }
    return code;
  };

  try {
    if (b->parsed()) return finish(cmd_build(family, m, out, emit_json));
    if (r->parsed()) return finish(cmd_rep(family, m, n, emit_matrices, out));
    if (a->parsed()) return finish(cmd_assemble(algebra_path, rep_path, central_z, out));
    if (rc->parsed()) return finish(cmd_ricci(algebra_path, gram_path, as_json, out));
    if (d->parsed()) return finish(cmd_degenerate(algebra_path, family_path, limit, out));
    if (c->parsed()) return cmd_check(family, m, n);
    if (ce->parsed())
      return finish(cmd_certify(family, m, n, out, algebra_path, budget, seed, rho_str));
    if (v->parsed()) return cmd_verify(cert_path, algebra_path);
    if (rp->parsed()) return cmd_reproduce(what);
  } catch (const MalformedInput& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 2;
}
