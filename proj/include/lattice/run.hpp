#ifndef LATTICE_RUN_HPP
#define LATTICE_RUN_HPP

#include <string>

#include "lattice/config.hpp"

namespace tl {

struct RunResult {
  int status = 0;              // 0 = success
  std::string manifest_json;   // manifest content (also written to disk)
  std::string error;           // set when status != 0
};

// Executes the configured command, writing manifest.json, CSV tables and
// plot scripts into the output directory. Artifacts are deterministic for a
// fixed config and seed; wall-clock timestamps go to run.log only. On
// failure the partial artifacts stay on disk and the manifest carries a
// failure marker.
RunResult run(const RunConfig& config);

std::string version_string();

}  // namespace tl

#endif
