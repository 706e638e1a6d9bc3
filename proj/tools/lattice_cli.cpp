// Batch driver for the thin-lattice toolkit. Talks to the core library
// through its C interface only.
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "thinlattice.h"

namespace {

int run_command(const std::string& command, const std::string& config_path,
                const std::string& output, long long seed, bool seed_set,
                const std::vector<std::string>& overrides, bool print_manifest) {
  tl_config* cfg = nullptr;
  if (tl_config_create(&cfg) != TL_OK) {
    std::fprintf(stderr, "error: %s\n", tl_last_error());
    return 1;
  }
  int rc = 0;
  tl_result* res = nullptr;
  do {
    if (!config_path.empty() && tl_config_load(cfg, config_path.c_str()) != TL_OK) {
      std::fprintf(stderr, "error: %s: %s\n", config_path.c_str(), tl_last_error());
      rc = 2;
      break;
    }
    if (!command.empty() && tl_config_set(cfg, ("run.command=" + command).c_str()) != TL_OK) {
      std::fprintf(stderr, "error: %s\n", tl_last_error());
      rc = 2;
      break;
    }
    if (!output.empty() && tl_config_set(cfg, ("run.output=" + output).c_str()) != TL_OK) {
      std::fprintf(stderr, "error: %s\n", tl_last_error());
      rc = 2;
      break;
    }
    if (seed_set &&
        tl_config_set(cfg, ("run.seed=" + std::to_string(seed)).c_str()) != TL_OK) {
      std::fprintf(stderr, "error: %s\n", tl_last_error());
      rc = 2;
      break;
    }
    for (const auto& ov : overrides) {
      if (tl_config_set(cfg, ov.c_str()) != TL_OK) {
        std::fprintf(stderr, "error: --override %s: %s\n", ov.c_str(), tl_last_error());
        rc = 2;
        break;
      }
    }
    if (rc != 0) break;

    tl_status st = tl_run(cfg, &res);
    if (st != TL_OK) {
      std::fprintf(stderr, "error: %s\n", tl_last_error());
      rc = (st == TL_ERR_PARSE || st == TL_ERR_INVALID_ARGUMENT) ? 2 : 3;
      if (!res) break;  // no manifest to show
    }
    if (print_manifest && res) std::fputs(tl_result_manifest_json(res), stdout);
  } while (false);
  tl_result_free(res);
  tl_config_free(cfg);
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string(tl_version()) +
               " - spectral computations on the thin cubic lattice"};
  app.require_subcommand(0, 1);

  std::string config_path, output;
  long long seed = 0;
  std::vector<std::string> overrides;
  bool print_manifest = false;
  app.add_option("--config", config_path, "config file path");
  app.add_option("--output", output, "output directory (overrides config)");
  auto* seed_opt = app.add_option("--seed", seed, "RNG seed (overrides config)");
  app.add_option("--override", overrides, "section.key=value override (repeatable)");
  app.add_flag("--print-manifest", print_manifest, "echo manifest.json to stdout");

  const char* names[] = {"nearfield", "mixed",   "scattering", "bands",
                         "friedrichs", "floquet", "all"};
  const char* descs[] = {"trapped mode below the threshold",
                         "spectrum with Neumann cut faces",
                         "threshold scattering and polarization matrices",
                         "limit-model band sweep",
                         "sharp 1D Friedrichs constants",
                         "quasi-periodic cell eigensolves",
                         "full pipeline"};
  for (int i = 0; i < 7; ++i) app.add_subcommand(names[i], descs[i])->fallthrough();

  CLI11_PARSE(app, argc, argv);

  std::string command;
  for (auto* sub : app.get_subcommands()) command = sub->get_name();
  if (command.empty() && config_path.empty()) {
    std::fprintf(stderr, "error: give a subcommand or --config\n");
    return 2;
  }
  return run_command(command, config_path, output, seed, !seed_opt->empty(), overrides,
                     print_manifest);
}
