#ifndef SCCORES_H
#define SCCORES_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by every fallible call.
typedef enum SccStatus {
  SCC_STATUS_OK = 0,
  SCC_STATUS_NULL_POINTER = 1,
  SCC_STATUS_INVALID_ARGUMENT = 2,
  SCC_STATUS_INFINITE_GAP_SET = 3,
  SCC_STATUS_OVERFLOW = 4,
  SCC_STATUS_BUFFER_TOO_SMALL = 5,
  SCC_STATUS_PANIC = 6,
} SccStatus;

// An exact non-negative integer.
typedef struct SccCount SccCount;

// The gap poset of a numerical semigroup.
typedef struct SccGapPoset SccGapPoset;

// A cursor over the self-conjugate `(s, s+1, s+2)`-cores.
typedef struct SccScCoreIter SccScCoreIter;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Returns the last error message on this thread, or NULL if none.
// Release the result with `scc_string_free`.
char *scc_last_error(void);

// # Safety
// `s` is NULL or a string returned by this library and not yet freed.
void scc_string_free(char *s);

// Number of self-conjugate `(s, s+1, s+2)`-cores.
//
// # Safety
// `out` must be valid for writes.
enum SccStatus scc_count_sc_cores(size_t s, struct SccCount **out);

// # Safety
// `out` must be valid for writes.
enum SccStatus scc_motzkin_number(size_t n, struct SccCount **out);

// # Safety
// `out` must be valid for writes.
enum SccStatus scc_symmetric_motzkin_count(size_t n, struct SccCount **out);

// # Safety
// `out` must be valid for writes.
enum SccStatus scc_symmetric_gen_dyck_count(size_t s, size_t k, struct SccCount **out);

// Decimal representation; release with `scc_string_free`. NULL if `count` is NULL.
//
// # Safety
// `count` is NULL or a live handle.
char *scc_count_to_string(const struct SccCount *count);

// # Safety
// `count` is NULL or a live handle; `out` must be valid for writes.
enum SccStatus scc_count_to_u64(const struct SccCount *count, uint64_t *out);

// # Safety
// `count` is NULL or a live handle, which becomes invalid.
void scc_count_free(struct SccCount *count);

// Builds the gap poset of the semigroup generated by `generators[0..len]`.
//
// # Safety
// `generators` points to `len` readable values; `out` must be valid for writes.
enum SccStatus scc_gap_poset_new(const size_t *generators, size_t len, struct SccGapPoset **out);

// Number of gaps; 0 if `poset` is NULL.
//
// # Safety
// `poset` is NULL or a live handle.
size_t scc_gap_poset_len(const struct SccGapPoset *poset);

// Copies the gaps in increasing order into `buf`. `*len` receives the number
// of gaps; if it exceeds `capacity` nothing is copied and `BufferTooSmall`
// is returned.
//
// # Safety
// `poset` is a live handle, `buf` has room for `capacity` values, `len` is writable.
enum SccStatus scc_gap_poset_ground(const struct SccGapPoset *poset,
                                    size_t *buf,
                                    size_t capacity,
                                    size_t *len);

// # Safety
// `poset` is a live handle; `out` must be valid for writes.
enum SccStatus scc_gap_poset_count_ideals(const struct SccGapPoset *poset, struct SccCount **out);

// JSON export; release with `scc_string_free`. NULL if `poset` is NULL.
//
// # Safety
// `poset` is NULL or a live handle.
char *scc_gap_poset_to_json(const struct SccGapPoset *poset);

// Graphviz export; release with `scc_string_free`. NULL if `poset` is NULL.
//
// # Safety
// `poset` is NULL or a live handle.
char *scc_gap_poset_to_dot(const struct SccGapPoset *poset);

// # Safety
// `poset` is NULL or a live handle, which becomes invalid.
void scc_gap_poset_free(struct SccGapPoset *poset);

// Starts enumerating self-conjugate `(s, s+1, s+2)`-cores.
//
// # Safety
// `out` must be valid for writes.
enum SccStatus scc_sc_cores_new(size_t s, struct SccScCoreIter **out);

// Advances the cursor. On success `*json` holds the next witness as
// `{"s":..,"md":[..],"partition":[..]}` (release with `scc_string_free`), or
// NULL once the enumeration is exhausted.
//
// # Safety
// `iter` is a live handle; `json` must be valid for writes.
enum SccStatus scc_sc_cores_next(struct SccScCoreIter *iter, char **json);

// # Safety
// `iter` is NULL or a live handle, which becomes invalid.
void scc_sc_cores_free(struct SccScCoreIter *iter);

// Tests whether the partition with weakly decreasing `parts[0..len]` is a
// simultaneous core for every value in `ts[0..ts_len]`.
//
// # Safety
// Both arrays are readable for their lengths; `out` must be valid for writes.
enum SccStatus scc_is_simultaneous_core(const size_t *parts,
                                        size_t len,
                                        const size_t *ts,
                                        size_t ts_len,
                                        bool *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SCCORES_H */
