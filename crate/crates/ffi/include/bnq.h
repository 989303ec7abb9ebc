#ifndef BNQ_H
#define BNQ_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result of a fallible call.
typedef enum BnqStatus {
  BNQ_STATUS_OK = 0,
  BNQ_STATUS_NULL_POINTER = 1,
  BNQ_STATUS_INVALID_ARGUMENT = 2,
  BNQ_STATUS_RANK_OUT_OF_RANGE = 3,
  BNQ_STATUS_FRAME_UNAVAILABLE = 4,
  BNQ_STATUS_BUDGET_EXCEEDED = 5,
  // An output buffer has the wrong length.
  BNQ_STATUS_BUFFER_SIZE = 6,
  BNQ_STATUS_NUMERIC = 7,
  // The invariant suite found a failing check.
  BNQ_STATUS_CHECK_FAILED = 8,
  BNQ_STATUS_PANIC = 9,
} BnqStatus;

typedef enum BnqFrame {
  BNQ_FRAME_COXETER = 0,
  BNQ_FRAME_FIVEFOLD = 1,
  BNQ_FRAME_H3 = 2,
  BNQ_FRAME_T_BASIS = 3,
} BnqFrame;

typedef enum BnqWindow {
  BNQ_WINDOW_HULL = 0,
  BNQ_WINDOW_DISC = 1,
} BnqWindow;

typedef enum BnqShift {
  BNQ_SHIFT_ZERO = 0,
  // `½(l_1 + … + l_n)`.
  BNQ_SHIFT_OMEGA = 1,
  // Read `rank` values from `BnqPatchConfig::shift`.
  BNQ_SHIFT_CUSTOM = 2,
} BnqShift;

// Weyl orbit with coordinates in the `l_i` basis.
typedef struct BnqOrbit BnqOrbit;

// Accepted points and edges of a cut-and-project patch.
typedef struct BnqPattern BnqPattern;

// Root datum of `B_n`.
typedef struct BnqRootDatum BnqRootDatum;

// Patch parameters. `shift` is read only when `shift_kind` is
// `BNQ_SHIFT_CUSTOM` and must then point to `rank` doubles.
typedef struct BnqPatchConfig {
  uint32_t rank;
  enum BnqFrame frame;
  enum BnqWindow window;
  enum BnqShift shift_kind;
  const double *shift;
  double par_radius;
  double budget;
} BnqPatchConfig;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent failure on this thread (empty if none). The
// pointer stays valid until the next failing call on the same thread.
const char *bnq_last_error(void);

// Library version, a static string.
const char *bnq_version(void);

// # Safety
// `s` must be null or a string returned by this library, not yet freed.
void bnq_string_free(char *s);

// # Safety
// `out` must be a valid pointer to writable storage for one handle.
enum BnqStatus bnq_root_datum_new(uint32_t rank, struct BnqRootDatum **out);

// # Safety
// `datum` must be null or a handle from [`bnq_root_datum_new`], not yet freed.
void bnq_root_datum_free(struct BnqRootDatum *datum);

// Rank of the datum, or 0 for a null handle.
//
// # Safety
// `datum` must be null or a live handle.
uint32_t bnq_root_datum_rank(const struct BnqRootDatum *datum);

// Copy the Cartan matrix, row-major, into `out` (`len` = rank²).
//
// # Safety
// `datum` must be a live handle and `out` must hold `len` values.
enum BnqStatus bnq_root_datum_cartan(const struct BnqRootDatum *datum, int64_t *out, size_t len);

// Orbit of the highest weight `Σ a_i ω_i` with `weight` = `a_1 … a_n`.
//
// # Safety
// `datum` must be a live handle, `weight` must hold `len` values and `out`
// must be writable.
enum BnqStatus bnq_orbit_new(const struct BnqRootDatum *datum,
                             const uint32_t *weight,
                             size_t len,
                             struct BnqOrbit **out);

// # Safety
// `orbit` must be null or a handle from [`bnq_orbit_new`], not yet freed.
void bnq_orbit_free(struct BnqOrbit *orbit);

// Number of orbit points, or 0 for a null handle.
//
// # Safety
// `orbit` must be null or a live handle.
size_t bnq_orbit_len(const struct BnqOrbit *orbit);

// Copy the points, row-major, into `out` (`len` = points × rank).
//
// # Safety
// `orbit` must be a live handle and `out` must hold `len` values.
enum BnqStatus bnq_orbit_coords(const struct BnqOrbit *orbit, double *out, size_t len);

// Default configuration: Coxeter frame, `ω_n` shift, disc window for rank
// 4 and hull window otherwise, default candidate budget.
struct BnqPatchConfig bnq_patch_config_default(uint32_t rank, double par_radius);

// Enumerate the patch described by `config`.
//
// # Safety
// `config` must point to a valid configuration (with a readable `shift`
// array when custom) and `out` must be writable.
enum BnqStatus bnq_pattern_generate(const struct BnqPatchConfig *config, struct BnqPattern **out);

// # Safety
// `pattern` must be null or a handle from [`bnq_pattern_generate`], not yet freed.
void bnq_pattern_free(struct BnqPattern *pattern);

// Number of accepted points, or 0 for a null handle.
//
// # Safety
// `pattern` must be null or a live handle.
size_t bnq_pattern_len(const struct BnqPattern *pattern);

// Dimension of the parallel space (2 or 3), or 0 for an empty or null pattern.
//
// # Safety
// `pattern` must be null or a live handle.
size_t bnq_pattern_par_dimension(const struct BnqPattern *pattern);

// Number of lattice-unit edges, or 0 for a null handle.
//
// # Safety
// `pattern` must be null or a live handle.
size_t bnq_pattern_edge_count(const struct BnqPattern *pattern);

// Copy parallel coordinates, row-major (`len` = points × par dimension).
//
// # Safety
// `pattern` must be a live handle and `out` must hold `len` values.
enum BnqStatus bnq_pattern_par(const struct BnqPattern *pattern, double *out, size_t len);

// Copy weight coefficients `a`, row-major (`len` = points × rank).
//
// # Safety
// `pattern` must be a live handle and `out` must hold `len` values.
enum BnqStatus bnq_pattern_weights(const struct BnqPattern *pattern, int64_t *out, size_t len);

// Copy edges as point-index pairs (`len` = 2 × edges).
//
// # Safety
// `pattern` must be a live handle and `out` must hold `len` values.
enum BnqStatus bnq_pattern_edges(const struct BnqPattern *pattern, size_t *out, size_t len);

// Largest nearest-neighbour mismatch after rotating the planar pattern by
// `2π/k` about its centroid.
//
// # Safety
// `pattern` must be a live handle and `out` writable.
enum BnqStatus bnq_pattern_symmetry_deviation(const struct BnqPattern *pattern,
                                              uint32_t k,
                                              double *out);

// Pattern as CSV; null on failure. Free with [`bnq_string_free`].
//
// # Safety
// `pattern` must be a live handle.
char *bnq_pattern_csv(const struct BnqPattern *pattern);

// Planar pattern as SVG; null on failure. Free with [`bnq_string_free`].
//
// # Safety
// `pattern` must be a live handle.
char *bnq_pattern_svg(const struct BnqPattern *pattern);

// Run the invariant suite. When `report` is non-null it receives the JSON
// report, to be freed with [`bnq_string_free`]. Returns
// `BNQ_STATUS_CHECK_FAILED` naming the failures if any check fails.
//
// # Safety
// `report` must be null or writable.
enum BnqStatus bnq_check_run(char **report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BNQ_H */
