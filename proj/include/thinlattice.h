/* C interface to the thin-lattice spectral toolkit.
 *
 * Usage: create a config (from a file or key-value settings), run it, read
 * the manifest JSON from the result, free both. All functions return a
 * tl_status; tl_last_error() describes the most recent failure on the
 * calling thread. */
#ifndef THINLATTICE_H
#define THINLATTICE_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tl_status {
  TL_OK = 0,
  TL_ERR_INVALID_ARGUMENT = 1,
  TL_ERR_PARSE = 2,
  TL_ERR_SOLVER = 3,
  TL_ERR_IO = 4,
  TL_ERR_INTERNAL = 5
} tl_status;

typedef struct tl_config tl_config;
typedef struct tl_result tl_result;

/* Library version, static string. */
const char* tl_version(void);

/* Description of the last error on this thread; empty string if none. */
const char* tl_last_error(void);

/* Config with built-in defaults (no command set). */
tl_status tl_config_create(tl_config** out);

/* Parse a config file; replaces *out's contents on success. */
tl_status tl_config_load(tl_config* cfg, const char* path);

/* Parse config text directly. */
tl_status tl_config_load_string(tl_config* cfg, const char* text);

/* Apply one "section.key=value" override. */
tl_status tl_config_set(tl_config* cfg, const char* key_value);

/* Canonical serialization of the config; caller must NOT free the returned
 * pointer, it stays valid until the next call on the same config. */
const char* tl_config_serialize(tl_config* cfg);

void tl_config_free(tl_config* cfg);

/* Execute the configured command. Artifacts are written to the configured
 * output directory; the manifest is also available from the result. A
 * solver/computation failure returns TL_ERR_SOLVER but still produces a
 * result whose manifest carries the failure marker. */
tl_status tl_run(const tl_config* cfg, tl_result** out);

/* Manifest JSON; valid until tl_result_free. */
const char* tl_result_manifest_json(const tl_result* res);

/* 0 when the run succeeded. */
int tl_result_status(const tl_result* res);

void tl_result_free(tl_result* res);

#ifdef __cplusplus
}
#endif

#endif
