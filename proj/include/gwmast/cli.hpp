#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gwmast/core_trees.hpp"
#include "gwmast/gw_sim.hpp"
#include "gwmast/rational.hpp"

namespace gwmast::cli {

using Json = nlohmann::json;

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kManifestKey = "manifest";

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2, kIo = 3 };

struct ExperimentManifest {
  std::string command;
  Json distribution = Json::object();  // {"name": ..., "p": {"0": "1/2", ...}}
  Json parameters = Json::object();
  std::string version = kVersion;

  Json to_json() const;
  static ExperimentManifest from_json(const Json& j);
  bool operator==(const ExperimentManifest&) const = default;
};

std::vector<std::string> builtin_distribution_names();
// Throws DomainError for an unknown name.
OffspringDistribution named_distribution(const std::string& name);

// Degree -> probability map from JSON ({"0": "1/2", ...}) or a flat TOML
// table (0 = "1/2"). JSON is recognised by a leading '{'.
std::map<Degree, Rational> parse_distribution_config(std::string_view text);

Json distribution_json(const std::string& name, const OffspringDistribution& dist);

// "num/den", always with a denominator.
Json rational_json(const Rational& q);
// {"exact": "num/den", "decimal": <12 significant digits>}
Json exact_json(const Rational& q);
// {"estimate", "stderr", "trials", "seed"}
Json report_json(const McReport& r);

struct CsvRow {
  unsigned n = 0;
  std::optional<unsigned> a;
  std::string value;
  std::optional<double> std_error;
};

// Deterministic renderings; the manifest sits under kManifestKey in JSON and
// on a leading "# manifest: " comment line in CSV.
std::string render_json(const ExperimentManifest& manifest, const Json& results);
std::string render_csv(const ExperimentManifest& manifest, const std::vector<CsvRow>& rows);

// Reads the manifest back out of a rendered JSON or CSV document.
ExperimentManifest manifest_from_output(std::string_view text);

// Throws Error(IoError).
void write_file(const std::string& path, const std::string& contents);
std::string read_file(const std::string& path);

// args excludes the program name. Exit codes: 0 success, 1 verification
// mismatch, 2 usage or input error, 3 I/O failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gwmast::cli
