#ifndef ENTREL_H
#define ENTREL_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes. `ER_STATUS_OK` is zero.
 */
typedef enum ErStatus {
  ER_STATUS_OK = 0,
  ER_STATUS_NULL_POINTER = 1,
  ER_STATUS_INVALID_ARGUMENT = 2,
  ER_STATUS_IO = 3,
  ER_STATUS_PARSE = 4,
  ER_STATUS_INVALID_MODEL = 5,
  ER_STATUS_EMPTY_LOG = 6,
  ER_STATUS_PANIC = 7,
} ErStatus;

/**
 * An event log.
 */
typedef struct ErLog ErLog;

/**
 * A stochastic deterministic finite automaton.
 */
typedef struct ErSdfa ErSdfa;

/**
 * Relevance of a model to a log and its constituents, in bits per trace.
 */
typedef struct ErRelevance {
  double rho;
  double selector_bits;
  double background_bits;
  double model_bits;
  double relevance;
  uint64_t fitting_traces;
  uint64_t nonfitting_traces;
} ErRelevance;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or NULL. The
 * pointer stays valid until the next failing call on the same thread.
 */
const char *er_last_error_message(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *er_version(void);

/**
 * Reads a `.xes`, `.csv`, `.xes.gz` or `.csv.gz` file with default
 * settings (`concept:name`; CSV columns `case_id`, `activity`, `timestamp`).
 *
 * # Safety
 * `path` must be a NUL-terminated string; `out` must be writable.
 */
enum ErStatus er_log_open(const char *path, struct ErLog **out);

/**
 * Parses an uncompressed XES document.
 *
 * # Safety
 * `data` must point to `len` readable bytes; `out` must be writable.
 */
enum ErStatus er_log_from_xes(const uint8_t *data, size_t len, struct ErLog **out);

/**
 * Parses a CSV document with columns `case_id`, `activity`, `timestamp`.
 *
 * # Safety
 * `data` must point to `len` readable bytes; `out` must be writable.
 */
enum ErStatus er_log_from_csv(const uint8_t *data, size_t len, struct ErLog **out);

/**
 * # Safety
 * `log` must be NULL or a handle not yet freed.
 */
void er_log_free(struct ErLog *log);

/**
 * Number of traces, 0 for NULL.
 *
 * # Safety
 * `log` must be NULL or a live handle.
 */
uint64_t er_log_trace_count(const struct ErLog *log);

/**
 * Number of distinct traces, 0 for NULL.
 *
 * # Safety
 * `log` must be NULL or a live handle.
 */
size_t er_log_variant_count(const struct ErLog *log);

/**
 * Number of events, 0 for NULL.
 *
 * # Safety
 * `log` must be NULL or a live handle.
 */
uint64_t er_log_event_count(const struct ErLog *log);

/**
 * Loads an SDFA or FDAG JSON file; FDAGs are converted.
 *
 * # Safety
 * `path` must be a NUL-terminated string; `out` must be writable.
 */
enum ErStatus er_sdfa_open(const char *path, struct ErSdfa **out);

/**
 * Parses SDFA or FDAG JSON text.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum ErStatus er_sdfa_from_json(const char *json, struct ErSdfa **out);

/**
 * Directly-follows model of the most frequent variants covering
 * `threshold` of the log's traces, converted to an SDFA.
 *
 * # Safety
 * `log` must be a live handle; `out` must be writable.
 */
enum ErStatus er_sdfa_discover(const struct ErLog *log, double threshold, struct ErSdfa **out);

/**
 * Prefix tree acceptor of the log.
 *
 * # Safety
 * `log` must be a live handle; `out` must be writable.
 */
enum ErStatus er_sdfa_prefix_tree(const struct ErLog *log, struct ErSdfa **out);

/**
 * Writes state and transition counts; either pointer may be NULL.
 *
 * # Safety
 * `sdfa` must be a live handle; non-NULL outputs must be writable.
 */
enum ErStatus er_sdfa_size(const struct ErSdfa *sdfa, size_t *states, size_t *transitions);

/**
 * # Safety
 * `sdfa` must be NULL or a handle not yet freed.
 */
void er_sdfa_free(struct ErSdfa *sdfa);

/**
 * Entropic relevance of `sdfa` to `log`.
 *
 * # Safety
 * `log` and `sdfa` must be live handles; `out` must be writable.
 */
enum ErStatus er_relevance(const struct ErLog *log,
                           const struct ErSdfa *sdfa,
                           struct ErRelevance *out);

/**
 * Entropy of the log's variant distribution in bits.
 *
 * # Safety
 * `log` must be a live handle; `out` must be writable.
 */
enum ErStatus er_relevance_lower_bound(const struct ErLog *log, double *out);

/**
 * Binary entropy of `p` in bits.
 *
 * # Safety
 * `out` must be writable.
 */
enum ErStatus er_h0(double p, double *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ENTREL_H */
