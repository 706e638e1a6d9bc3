#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstring>
#include <filesystem>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "thinlattice.h"

namespace fs = std::filesystem;

namespace {
std::string temp_out(const char* tag) {
  return (fs::temp_directory_path() / (std::string("tl_capi_") + tag)).string();
}

std::string friedrichs_cfg(const std::string& out) {
  return "[run]\ncommand = friedrichs\noutput = " + out +
         "\n[friedrichs]\nsamples = 500\n";
}
}  // namespace

TEST_CASE("version and initial error state") {
  REQUIRE(tl_version() != nullptr);
  CHECK(std::string(tl_version()).find("thinlattice") != std::string::npos);
  REQUIRE(tl_last_error() != nullptr);
}

TEST_CASE("config lifecycle: create, load text, set, serialize") {
  tl_config* cfg = nullptr;
  REQUIRE(tl_config_create(&cfg) == TL_OK);
  REQUIRE(cfg != nullptr);
  CHECK(tl_config_load_string(cfg, "[run]\ncommand = bands\n") == TL_OK);
  CHECK(tl_config_set(cfg, "bands.eta_per_axis=21") == TL_OK);
  const char* text = tl_config_serialize(cfg);
  REQUIRE(text != nullptr);
  std::string s(text);
  CHECK(s.find("command = bands") != std::string::npos);
  CHECK(s.find("eta_per_axis = 21") != std::string::npos);
  tl_config_free(cfg);
}

TEST_CASE("status codes: nulls, parse failures, unknown keys, missing file") {
  CHECK(tl_config_create(nullptr) == TL_ERR_INVALID_ARGUMENT);

  tl_config* cfg = nullptr;
  REQUIRE(tl_config_create(&cfg) == TL_OK);
  CHECK(tl_config_load_string(cfg, nullptr) == TL_ERR_INVALID_ARGUMENT);
  CHECK(tl_config_load_string(cfg, "[run]\ncommand nearfield\n") == TL_ERR_PARSE);
  CHECK(std::strlen(tl_last_error()) > 0);
  CHECK(tl_config_set(cfg, "geometry.bogus=1") == TL_ERR_PARSE);
  CHECK(tl_config_load(cfg, "/definitely/not/a/file.cfg") != TL_OK);

  tl_result* res = nullptr;
  CHECK(tl_run(nullptr, &res) == TL_ERR_INVALID_ARGUMENT);
  CHECK(tl_run(cfg, nullptr) == TL_ERR_INVALID_ARGUMENT);
  tl_config_free(cfg);
}

TEST_CASE("a full run produces a parseable manifest and artifacts") {
  const std::string out = temp_out("run");
  fs::remove_all(out);
  tl_config* cfg = nullptr;
  REQUIRE(tl_config_create(&cfg) == TL_OK);
  REQUIRE(tl_config_load_string(cfg, friedrichs_cfg(out).c_str()) == TL_OK);

  tl_result* res = nullptr;
  REQUIRE(tl_run(cfg, &res) == TL_OK);
  REQUIRE(res != nullptr);
  CHECK(tl_result_status(res) == 0);

  auto manifest = nlohmann::json::parse(tl_result_manifest_json(res));
  CHECK(manifest["command"] == "friedrichs");
  CHECK(manifest.contains("version"));
  CHECK(manifest.contains("config_hash"));
  CHECK(manifest["friedrichs"]["kappa"].get<double>() > 0.0);

  CHECK(fs::exists(fs::path(out) / "manifest.json"));
  tl_result_free(res);
  tl_config_free(cfg);
  fs::remove_all(out);
}

TEST_CASE("identical configs give byte-identical manifests") {
  const std::string out = temp_out("det");
  fs::remove_all(out);
  std::string m[2];
  for (int i = 0; i < 2; ++i) {
    tl_config* cfg = nullptr;
    REQUIRE(tl_config_create(&cfg) == TL_OK);
    REQUIRE(tl_config_load_string(cfg, friedrichs_cfg(out).c_str()) == TL_OK);
    tl_result* res = nullptr;
    REQUIRE(tl_run(cfg, &res) == TL_OK);
    m[i] = tl_result_manifest_json(res);
    tl_result_free(res);
    tl_config_free(cfg);
  }
  CHECK(m[0] == m[1]);
  fs::remove_all(out);
}
