#include "ricciforge/io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

namespace ricciforge {

namespace {

// Integers are emitted as json numbers when they fit, strings otherwise.
json int_field(const mpz_class& z) {
  if (z.fits_slong_p()) return json(z.get_si());
  return json(z.get_str());
}

}  // namespace

json rat_to_json(const Rat& r) {
  json j;
  j["num"] = int_field(r.get_num());
  j["den"] = int_field(r.get_den());
  return j;
}

Rat rat_from_json(const json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw MalformedInput("rational must be an object with num and den");
  auto field = [&](const char* k) -> std::string {
    const json& v = j.at(k);
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw MalformedInput("rational fields must be integers or integer strings");
  };
  Rat r;
  try {
    r = Rat(field("num") + "/" + field("den"));
  } catch (...) {
    throw MalformedInput("cannot parse rational");
  }
  if (r.get_den() == 0) throw MalformedInput("rational with zero denominator");
  r.canonicalize();
  return r;
}

json rat_matrix_to_json(const RatMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(rat_to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

RatMatrix rat_matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw MalformedInput("matrix must be a nonempty array of rows");
  int rows = int(j.size());
  int cols = int(j[0].size());
  RatMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (!j[i].is_array() || int(j[i].size()) != cols) throw MalformedInput("ragged matrix rows");
    for (int c = 0; c < cols; ++c) m(i, c) = rat_from_json(j[i][c]);
  }
  return m;
}

json algebra_to_json(const LieAlgebra& L) {
  json j;
  j["dim"] = L.dim();
  json labels = json::array();
  for (const auto& l : L.labels) labels.push_back(l.text);
  j["labels"] = labels;
  json brackets = json::array();
  for (const auto& e : L.bracket.entries()) {
    json b;
    b["i"] = e.i;
    b["j"] = e.j;
    b["k"] = e.k;
    b["num"] = int_field(e.c.get_num());
    b["den"] = int_field(e.c.get_den());
    brackets.push_back(b);
  }
  j["brackets"] = brackets;
  if (!L.notes.empty()) j["notes"] = L.notes;
  return j;
}

LieAlgebra algebra_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("brackets"))
    throw MalformedInput("algebra json must contain dim and brackets");
  int dim = j.at("dim").get<int>();
  if (dim <= 0) throw MalformedInput("dim must be positive");
  std::vector<BasisLabel> labels;
  if (j.contains("labels")) {
    for (const auto& t : j.at("labels")) labels.push_back(BasisLabel::parse(t.get<std::string>()));
  } else {
    for (int i = 0; i < dim; ++i) labels.push_back(BasisLabel::generic("e" + std::to_string(i + 1)));
  }
  if (int(labels.size()) != dim) throw MalformedInput("label count must equal dim");
  StructureTensor t(dim);
  for (const auto& b : j.at("brackets")) {
    int i = b.at("i").get<int>(), jj = b.at("j").get<int>(), k = b.at("k").get<int>();
    if (i >= jj) throw MalformedInput("bracket entries require i < j");
    if (i < 0 || jj >= dim || k < 0 || k >= dim) throw MalformedInput("bracket index out of range");
    Rat c = rat_from_json(json{{"num", b.at("num")}, {"den", b.at("den")}});
    if (c == 0) throw MalformedInput("bracket coefficients must be nonzero");
    if (t.coeff(i, jj, k) != 0) throw MalformedInput("duplicate bracket entry");
    t.add(i, jj, k, c);
  }
  LieAlgebra L = make_lie_algebra(std::move(labels), std::move(t));
  JacobiReport rep = check_jacobi(L);
  if (!rep.ok) {
    std::ostringstream os;
    os << "brackets violate the Jacobi identity at triple (" << rep.i << ", " << rep.j << ", "
       << rep.k << ")";
    throw MalformedInput(os.str());
  }
  return L;
}

json root_datum_to_json(const RootDatum& rd) {
  json j;
  j["family"] = std::string(1, family_letter(rd.family));
  j["rank"] = rd.rank;
  j["positive_roots"] = rd.positive_roots;
  j["simple_indices"] = rd.simple_indices;
  return j;
}

RootDatum root_datum_from_json(const json& j) {
  RootDatum rd;
  rd.family = family_from_letter(j.at("family").get<std::string>().at(0));
  rd.rank = j.at("rank").get<int>();
  rd.positive_roots = j.at("positive_roots").get<std::vector<std::vector<int>>>();
  rd.simple_indices = j.at("simple_indices").get<std::vector<int>>();
  rd.validate();
  return rd;
}

json representation_to_json(const Representation& rep, const SubspaceSplit& split) {
  json j;
  j["dim_V"] = rep.dim_v;
  j["source"] = algebra_to_json(rep.source);
  json ops;
  for (int i = 0; i < rep.source.dim(); ++i)
    ops[rep.source.labels[i].text] = rat_matrix_to_json(rep.operators[i].dense());
  j["operators"] = ops;
  j["V1"] = split.v1;
  if (rep.monomials) {
    j["num_vars"] = rep.monomials->num_vars;
    j["degree"] = rep.monomials->degree;
  }
  return j;
}

std::pair<Representation, SubspaceSplit> representation_from_json(const json& j) {
  Representation rep;
  rep.source = algebra_from_json(j.at("source"));
  rep.dim_v = j.at("dim_V").get<int>();
  for (int i = 0; i < rep.source.dim(); ++i) {
    const std::string& key = rep.source.labels[i].text;
    if (!j.at("operators").contains(key)) throw MalformedInput("missing operator for " + key);
    rep.operators.push_back(SparseRatMatrix::from_dense(rat_matrix_from_json(j.at("operators").at(key))));
  }
  if (j.contains("num_vars")) {
    rep.monomials = MonomialBasis::build(j.at("num_vars").get<int>(), j.at("degree").get<int>());
  }
  SubspaceSplit split;
  split.v1 = j.at("V1").get<std::vector<int>>();
  std::vector<bool> in1(rep.dim_v, false);
  for (int v : split.v1) {
    if (v < 0 || v >= rep.dim_v) throw MalformedInput("V1 index out of range");
    in1[v] = true;
  }
  for (int v = 0; v < rep.dim_v; ++v)
    if (!in1[v]) split.v2.push_back(v);
  if (!rep.homomorphism_holds()) throw MalformedInput("operators are not a Lie homomorphism");
  return {std::move(rep), std::move(split)};
}

json scaling_family_to_json(const ScalingFamily& f) {
  json entries = json::array();
  for (int i = 0; i < f.dim(); ++i) {
    json e;
    e["exp"] = f.exponents[i];
    e["num"] = int_field(f.constants[i].get_num());
    e["den"] = int_field(f.constants[i].get_den());
    entries.push_back(e);
  }
  return json{{"entries", entries}};
}

ScalingFamily scaling_family_from_json(const json& j) {
  ScalingFamily f;
  for (const auto& e : j.at("entries")) {
    f.exponents.push_back(e.at("exp").get<int>());
    f.constants.push_back(rat_from_json(json{{"num", e.at("num")}, {"den", e.at("den")}}));
  }
  f.validate();
  return f;
}

json certificate_to_json(const RicciCertificate& c) {
  json j;
  j["gram"] = rat_matrix_to_json(c.gram);
  j["eigenvalues"] = c.eigenvalues;
  j["lambda_max"] = c.lambda_max;
  j["rho"] = rat_to_json(c.rho);
  json pert;
  pert["description"] = c.perturbation;
  json factors = json::array();
  for (const auto& f : c.perturbation_factors) factors.push_back(rat_to_json(f));
  pert["factors"] = factors;
  j["perturbation"] = pert;
  j["pipeline"] = c.pipeline;
  return j;
}

RicciCertificate certificate_from_json(const json& j) {
  RicciCertificate c;
  c.gram = rat_matrix_from_json(j.at("gram"));
  c.eigenvalues = j.at("eigenvalues").get<std::vector<double>>();
  c.lambda_max = j.at("lambda_max").get<double>();
  c.rho = rat_from_json(j.at("rho"));
  c.perturbation = j.at("perturbation").at("description").get<std::string>();
  for (const auto& f : j.at("perturbation").at("factors")) c.perturbation_factors.push_back(rat_from_json(f));
  c.pipeline = j.at("pipeline").get<std::vector<std::string>>();
  return c;
}

json ricci_report_to_json(const RicciReport& r) {
  json j;
  j["ricci"] = rat_matrix_to_json(r.ricci);
  j["moment_map"] = rat_matrix_to_json(r.moment);
  j["killing_operator"] = rat_matrix_to_json(r.killing_op);
  json h = json::array();
  for (const auto& v : r.mean_curvature) h.push_back(rat_to_json(v));
  j["mean_curvature"] = h;
  j["eigenvalues"] = r.eigenvalues;
  j["verdict"] = definiteness_name(r.definiteness.verdict);
  j["lambda_max"] = r.definiteness.lambda_max;
  return j;
}

json check_report_to_json(const CheckReport& r) {
  json j;
  j["theorem"] = r.theorem;
  json conds = json::array();
  for (const auto& c : r.conditions) {
    json cc;
    cc["name"] = c.name;
    cc["pass"] = c.pass;
    if (!c.witness.empty()) cc["witness"] = c.witness;
    conds.push_back(cc);
  }
  j["conditions"] = conds;
  j["all_pass"] = r.all_pass();
  return j;
}

json load_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw MalformedInput("cannot open " + path);
  json j;
  try {
    f >> j;
  } catch (const std::exception& ex) {
    throw MalformedInput("invalid json in " + path + ": " + ex.what());
  }
  return j;
}

void save_json_file(const std::string& path, const json& j) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << j.dump(2) << "\n";
}

std::string file_hash(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path);
  uint64_t h = 1469598103934665603ull;
  char c;
  while (f.get(c)) {
    h ^= uint8_t(c);
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

json RunManifest::to_json() const {
  json j;
  j["command"] = command;
  j["parameters"] = parameters;
  j["input_hashes"] = input_hashes;
  j["tool_version"] = tool_version;
  j["outputs"] = outputs;
  j["wall_time_ms"] = wall_time_ms;
  return j;
}

int thread_cap() {
  const char* env = std::getenv("RICCIFORGE_THREADS");
  if (!env) return 1;
  int v = std::atoi(env);
  if (v < 1) return 1;
  int hw = int(std::thread::hardware_concurrency());
  if (hw > 0 && v > hw) v = hw;
  return v;
}

}  // namespace ricciforge
