#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "schurflow/report.hpp"
#include "schurflow/space.hpp"

namespace schurflow {

/// Batch run configuration. Parsed from JSON (see runconfig_from_json) with
/// CLI flags layered on top; validation failures name the offending field.
struct RunConfig {
  SpacePtr space;
  std::optional<Embedding> embedding;
  std::vector<std::string> suites = {"all"};

  struct {
    int samples = 20000;
    std::uint64_t root_seed = 42;
  } mc;

  struct {
    double step = 1.0 / 64.0;
    double horizon = 8.0;
    std::vector<double> t_values = {0.25, 0.5, 1.0, 2.0};
  } grid;

  struct {
    double exact = 1e-12;
    double sigma_gate = 4.0;
    double pass_fraction = 0.99;
  } tolerances;

  struct {
    std::string format = "json";
    std::string path;  // empty = stdout
  } output;

  bool parallel = false;
};

RunConfig runconfig_from_json(const nlohmann::json& j);
void validate(const RunConfig& cfg);

/// All suite names accepted by `verify` (excluding "all").
const std::vector<std::string>& suite_names();

struct RunResult {
  std::vector<CheckRecord> records;
  bool all_pass = true;
};

/// Executes the selected suites and writes the report per cfg.output.
/// Deterministic: identical configs (seeds included) produce byte-identical
/// reports in sequential mode.
RunResult run(const RunConfig& cfg);

/// Reproducible space/embedding descriptor. Styles: "random" (iid standard
/// normal points), "grid" (lattice points), "clustered" (two Gaussian
/// blobs). Weights are 1.
nlohmann::json gen(int n, int d, std::uint64_t seed, const std::string& style);

}  // namespace schurflow
