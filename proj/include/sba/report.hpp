#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"

namespace sba {

// Shared serialization rules for every machine-readable report: a
// versioned schema field, insertion-ordered keys, and no timestamps, so
// identical inputs give byte-identical output.
inline constexpr const char* kSchemaVersion = "1";

std::string dump_json(const nlohmann::ordered_json& j);

// Echo of the exact inputs a CLI invocation ran with; embedded in every
// CLI JSON report.
struct RunConfig {
  std::string command;
  int n = 0;
  bool has_label = false;
  int label = 0;
  std::string param;  // parametrization kind name
  std::uint64_t seed = 1;
  std::string format;
  std::string cache_dir;

  nlohmann::ordered_json to_json() const;
};

}  // namespace sba
