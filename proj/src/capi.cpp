#include "thinlattice.h"

#include <exception>
#include <string>

#include "lattice/config.hpp"
#include "lattice/io.hpp"
#include "lattice/run.hpp"

struct tl_config {
  tl::RunConfig cfg;
  std::string serialized;  // backing store for tl_config_serialize
};

struct tl_result {
  tl::RunResult res;
};

namespace {

thread_local std::string g_last_error;

tl_status fail(tl_status code, const std::string& msg) {
  g_last_error = msg;
  return code;
}

// Runs `fn`, mapping exceptions to status codes.
template <typename F>
tl_status guarded(F&& fn) {
  try {
    tl_status s = fn();
    if (s == TL_OK) g_last_error.clear();
    return s;
  } catch (const tl::ConfigError& e) {
    return fail(TL_ERR_PARSE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(TL_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(TL_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(TL_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(TL_ERR_INTERNAL, "unknown error");
  }
}

}  // namespace

extern "C" {

const char* tl_version(void) {
  static const std::string v = tl::version_string();
  return v.c_str();
}

const char* tl_last_error(void) { return g_last_error.c_str(); }

tl_status tl_config_create(tl_config** out) {
  if (!out) return fail(TL_ERR_INVALID_ARGUMENT, "out is null");
  return guarded([&] {
    *out = new tl_config();
    return TL_OK;
  });
}

tl_status tl_config_load(tl_config* cfg, const char* path) {
  if (!cfg || !path) return fail(TL_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    std::string text;
    try {
      text = tl::read_text_file(path);
    } catch (const std::exception& e) {
      return fail(TL_ERR_IO, e.what());
    }
    cfg->cfg = tl::parse_config(text);
    return TL_OK;
  });
}

tl_status tl_config_load_string(tl_config* cfg, const char* text) {
  if (!cfg || !text) return fail(TL_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    cfg->cfg = tl::parse_config(text);
    return TL_OK;
  });
}

tl_status tl_config_set(tl_config* cfg, const char* key_value) {
  if (!cfg || !key_value) return fail(TL_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    tl::apply_override(cfg->cfg, key_value);
    return TL_OK;
  });
}

const char* tl_config_serialize(tl_config* cfg) {
  if (!cfg) return "";
  try {
    cfg->serialized = tl::serialize_config(cfg->cfg);
  } catch (...) {
    cfg->serialized.clear();
  }
  return cfg->serialized.c_str();
}

void tl_config_free(tl_config* cfg) { delete cfg; }

tl_status tl_run(const tl_config* cfg, tl_result** out) {
  if (!cfg || !out) return fail(TL_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&]() -> tl_status {
    if (cfg->cfg.command.empty())
      return fail(TL_ERR_INVALID_ARGUMENT, "missing required field: run.command");
    tl::RunResult r;
    try {
      r = tl::run(cfg->cfg);
    } catch (const std::exception& e) {
      return fail(TL_ERR_IO, e.what());  // only artifact I/O escapes tl::run
    }
    *out = new tl_result{std::move(r)};
    if ((*out)->res.status != 0) return fail(TL_ERR_SOLVER, (*out)->res.error);
    return TL_OK;
  });
}

const char* tl_result_manifest_json(const tl_result* res) {
  return res ? res->res.manifest_json.c_str() : "";
}

int tl_result_status(const tl_result* res) { return res ? res->res.status : -1; }

void tl_result_free(tl_result* res) { delete res; }

}  // extern "C"
