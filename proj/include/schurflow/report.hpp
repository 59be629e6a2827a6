#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace schurflow {

/// One flat verification record. CSV and JSON carry the same five fields;
/// params holds everything needed to re-run the check in isolation.
struct CheckRecord {
  std::string suite;
  nlohmann::json params;
  double metric = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

nlohmann::json records_to_json(const std::vector<CheckRecord>& records);
// Columns: suite,param_json,metric,threshold,pass
std::string records_to_csv(const std::vector<CheckRecord>& records);

}  // namespace schurflow
