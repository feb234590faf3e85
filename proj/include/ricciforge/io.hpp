#ifndef RICCIFORGE_IO_HPP
#define RICCIFORGE_IO_HPP

#include <json.hpp>
#include <optional>
#include <string>

#include "ricciforge/certify.hpp"
#include "ricciforge/curvature.hpp"
#include "ricciforge/degeneration.hpp"
#include "ricciforge/poly_reps.hpp"

namespace ricciforge {

using nlohmann::json;

json rat_to_json(const Rat& r);            // {"num": .., "den": ..}
Rat rat_from_json(const json& j);
json rat_matrix_to_json(const RatMatrix& m);
RatMatrix rat_matrix_from_json(const json& j);

json algebra_to_json(const LieAlgebra& L);
LieAlgebra algebra_from_json(const json& j);

json root_datum_to_json(const RootDatum& rd);
RootDatum root_datum_from_json(const json& j);

json representation_to_json(const Representation& rep, const SubspaceSplit& split);
std::pair<Representation, SubspaceSplit> representation_from_json(const json& j);

json scaling_family_to_json(const ScalingFamily& f);
ScalingFamily scaling_family_from_json(const json& j);

json certificate_to_json(const RicciCertificate& c);
RicciCertificate certificate_from_json(const json& j);

json ricci_report_to_json(const RicciReport& r);

json check_report_to_json(const CheckReport& r);

/// Parse errors carry this type so the CLI can map them to exit code 2.
struct MalformedInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

/// FNV-1a 64-bit hash of a file's bytes, hex-encoded.
std::string file_hash(const std::string& path);

struct RunManifest {
  std::string command;
  json parameters;
  json input_hashes;   // path -> hash
  std::string tool_version;
  json outputs;        // path -> hash
  double wall_time_ms = 0;
  json to_json() const;
};

constexpr const char* kToolVersion = "0.1.0";

/// Thread cap from RICCIFORGE_THREADS (>= 1); defaults to 1.
int thread_cap();

}  // namespace ricciforge

#endif
