/*
 * pqcbench C API.
 *
 * Every function returns a pqcb_status; on failure a thread-local diagnostic
 * is available from pqcb_last_error() until the next failing call on the same
 * thread. Handles are opaque and owned by the caller once returned; release
 * them with the matching *_free / *_close function. Buffers returned through
 * pqcb_buffer are released with pqcb_buffer_free().
 */
#ifndef PQCBENCH_PQCBENCH_H
#define PQCBENCH_PQCBENCH_H

#include <stddef.h>
#include <stdint.h>

#if defined(PQCB_BUILDING_LIBRARY)
#define PQCB_API __attribute__((visibility("default")))
#else
#define PQCB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pqcb_status {
  PQCB_OK = 0,
  PQCB_ERR_INVALID_ARGUMENT = 1,
  PQCB_ERR_USAGE = 2,
  PQCB_ERR_UNSUPPORTED_VARIANT = 3,
  PQCB_ERR_BACKEND_FAILURE = 4,
  PQCB_ERR_CORRECTNESS_VIOLATION = 5,
  PQCB_ERR_EMPTY_SAMPLES = 6,
  PQCB_ERR_UNKNOWN_MODEL = 7,
  PQCB_ERR_IO = 8,
  PQCB_ERR_CLOCK_UNAVAILABLE = 9,
  PQCB_ERR_EMPTY_SELECTION = 10,
  PQCB_ERR_DUPLICATE_ROW = 11,
  PQCB_ERR_PARSE = 12,
  PQCB_ERR_INTERNAL = 99
} pqcb_status;

PQCB_API const char* pqcb_version(void);
PQCB_API const char* pqcb_status_name(pqcb_status status);
PQCB_API const char* pqcb_last_error(void);

/* ---- variant catalog ---------------------------------------------------- */

/* Strings point into the library's catalog and live for the whole process. */
typedef struct pqcb_variant_info {
  const char* family;
  const char* variant;
  int level;
  int is_pqc;
  const char* provider_key;
} pqcb_variant_info;

PQCB_API size_t pqcb_catalog_size(void);
PQCB_API pqcb_status pqcb_catalog_get(size_t index, pqcb_variant_info* out);
PQCB_API pqcb_status pqcb_catalog_find(const char* variant, pqcb_variant_info* out);

/* ---- schemes -------------------------------------------------------------- */

typedef struct pqcb_buffer {
  uint8_t* data;
  size_t size;
} pqcb_buffer;

PQCB_API void pqcb_buffer_free(pqcb_buffer* buffer);

typedef struct pqcb_scheme pqcb_scheme;

/* Fails with PQCB_ERR_UNSUPPORTED_VARIANT when no provider serves the name.
 * The provider can be forced with the PQCINBLOCK_PROVIDER environment
 * variable, read on first use. */
PQCB_API pqcb_status pqcb_scheme_open(const char* variant, pqcb_scheme** out);
PQCB_API void pqcb_scheme_close(pqcb_scheme* scheme);
PQCB_API pqcb_status pqcb_scheme_info(const pqcb_scheme* scheme, pqcb_variant_info* out);

PQCB_API pqcb_status pqcb_scheme_keypair(const pqcb_scheme* scheme, pqcb_buffer* public_key,
                                         pqcb_buffer* secret_key);
PQCB_API pqcb_status pqcb_scheme_sign(const pqcb_scheme* scheme, const uint8_t* secret_key,
                                      size_t secret_key_len, const uint8_t* message,
                                      size_t message_len, pqcb_buffer* signature);
/* *valid is 1 for a good signature and 0 otherwise; an invalid signature is
 * not an error. */
PQCB_API pqcb_status pqcb_scheme_verify(const pqcb_scheme* scheme, const uint8_t* public_key,
                                        size_t public_key_len, const uint8_t* message,
                                        size_t message_len, const uint8_t* signature,
                                        size_t signature_len, int* valid);

/* ---- timing --------------------------------------------------------------- */

typedef struct pqcb_stat {
  double mean_ms;
  double std_ms;
  size_t n;
} pqcb_stat;

PQCB_API pqcb_status pqcb_summarize(const double* samples, size_t count, pqcb_stat* out);
PQCB_API pqcb_status pqcb_timer_resolution_ns(double* out);

typedef struct pqcb_run_plan {
  size_t warmup;
  size_t runs;
  size_t message_len;
  uint64_t seed;
} pqcb_run_plan;

typedef struct pqcb_benchmark_result {
  pqcb_stat keypair;
  pqcb_stat sign;
  pqcb_stat verify;
} pqcb_benchmark_result;

PQCB_API pqcb_status pqcb_benchmark(const pqcb_scheme* scheme, const pqcb_run_plan* plan,
                                    pqcb_benchmark_result* out);

/* ---- blockchain simulation -------------------------------------------------- */

enum { PQCB_MODEL_BITCOIN = 1, PQCB_MODEL_ETHEREUM = 2 };
enum { PQCB_SAMPLING_MEAN_ONLY = 0, PQCB_SAMPLING_NORMAL_PER_BLOCK = 1 };

typedef struct pqcb_sim_config {
  int model;
  double tx_per_block_mean;
  size_t blocks_per_run;
  double block_interval_s;
  size_t runs;
  uint64_t seed;
  int verify_sampling;
} pqcb_sim_config;

PQCB_API pqcb_status pqcb_sim_default_config(int model, pqcb_sim_config* out);

/* per_run_means may be NULL; otherwise it must hold config->runs doubles. */
PQCB_API pqcb_status pqcb_simulate_batch(const pqcb_sim_config* config, pqcb_stat verify_stat,
                                         pqcb_stat* batch, double* per_run_means);

/* ---- command line pipeline ---------------------------------------------------- */

typedef struct pqcb_cli pqcb_cli;

/* argv[0] is the program name. */
PQCB_API pqcb_status pqcb_cli_parse(int argc, const char* const* argv, pqcb_cli** out);
PQCB_API void pqcb_cli_free(pqcb_cli* cli);
PQCB_API int pqcb_cli_wants_help(const pqcb_cli* cli);
PQCB_API const char* pqcb_cli_usage(void);
/* Runs the full pipeline, logging to stdout and diagnostics to stderr.
 * Returns the process exit status: 0 ok, 1 fatal, 2 partial. */
PQCB_API int pqcb_cli_run(const pqcb_cli* cli);

#ifdef __cplusplus
}
#endif

#endif /* PQCBENCH_PQCBENCH_H */
