#ifndef FLATFOLD_H
#define FLATFOLD_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result status for every fallible call.
 */
typedef enum FfStatus {
  Ok = 0,
  InvalidArgument = 1,
  NotLocallyFlatFoldable = 2,
  Overflow = 3,
  ReducibleChain = 4,
  IoError = 5,
  InternalError = 6,
} FfStatus;

/**
 * Opaque mountain-valley assignment.
 */
typedef struct FfAssignment FfAssignment;

/**
 * Opaque crease pattern.
 */
typedef struct FfPattern FfPattern;

/**
 * Message for the most recent error on this thread, or null. The pointer is
 * valid until the next failing call on the same thread.
 */
const char *ff_last_error_message(void);

/**
 * Generate a pattern. `family` is one of "square_grid", "square_twist",
 * "miura", "triangle", "kite", "single_vertex"; `theta` is in radians and
 * ignored by families without an angle parameter; `uniform_mode` selects the
 * sheared square-twist tiling. For "single_vertex", `rows` is the
 * half-degree n and `cols` is ignored.
 *
 * # Safety
 * `family` must be a valid NUL-terminated string and `out` a valid pointer.
 */
enum FfStatus ff_pattern_generate(const char *family,
                                  uintptr_t rows,
                                  uintptr_t cols,
                                  double theta,
                                  bool uniform_mode,
                                  struct FfPattern **out);

/**
 * Parse the JSON pattern format. On success `out` receives the pattern and,
 * when the file carries M/V entries, `out_assignment` (if non-null)
 * receives the attached assignment, else null.
 *
 * # Safety
 * `json` must be a valid NUL-terminated string; `out` must be valid.
 */
enum FfStatus ff_pattern_from_json(const char *json,
                                   struct FfPattern **out,
                                   struct FfAssignment **out_assignment);

/**
 * Serialize a pattern (and optional assignment) to the JSON format. The
 * returned string is owned by the caller; free with `ff_string_free`.
 *
 * # Safety
 * `pattern` must be a live handle from this library.
 */
char *ff_pattern_to_json(const struct FfPattern *pattern, const struct FfAssignment *assignment);

/**
 * # Safety
 * `pattern` must be a live handle (or null, which is a no-op).
 */
void ff_pattern_free(struct FfPattern *pattern);

/**
 * # Safety
 * `assignment` must be a live handle (or null).
 */
void ff_assignment_free(struct FfAssignment *assignment);

/**
 * # Safety
 * `s` must have been returned by this library and not yet freed.
 */
void ff_string_free(char *s);

/**
 * # Safety
 * `pattern` must be a live handle.
 */
uintptr_t ff_pattern_face_count(const struct FfPattern *pattern);

/**
 * # Safety
 * `pattern` must be a live handle.
 */
uintptr_t ff_pattern_crease_count(const struct FfPattern *pattern);

/**
 * The family's locally flat-foldable reference assignment.
 *
 * # Safety
 * `pattern` and `out` must be valid.
 */
enum FfStatus ff_reference_assignment(const struct FfPattern *pattern, struct FfAssignment **out);

/**
 * Parse an "MV..." string into an assignment handle.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string; `out` must be valid.
 */
enum FfStatus ff_assignment_from_string(const char *text, struct FfAssignment **out);

/**
 * Render the assignment as an "MV..." string; free with `ff_string_free`.
 *
 * # Safety
 * `assignment` must be a live handle.
 */
char *ff_assignment_to_string(const struct FfAssignment *assignment);

/**
 * # Safety
 * `pattern`, `assignment`, and `out` must be valid.
 */
enum FfStatus ff_is_locally_flat_foldable(const struct FfPattern *pattern,
                                          const struct FfAssignment *assignment,
                                          bool *out);

/**
 * Negate the creases bordering `face`, in place.
 *
 * # Safety
 * `pattern` and `assignment` must be valid; `assignment` must be uniquely
 * held by the caller.
 */
enum FfStatus ff_flip_face(const struct FfPattern *pattern,
                           struct FfAssignment *assignment,
                           uintptr_t face);

/**
 * Whether flipping `face` keeps the assignment locally flat-foldable.
 *
 * # Safety
 * All pointers must be valid.
 */
enum FfStatus ff_is_flippable(const struct FfPattern *pattern,
                              const struct FfAssignment *assignment,
                              uintptr_t face,
                              bool *out);

/**
 * Run the face-flip chain for `steps` steps from `assignment`, updating it
 * in place; `out_accepted` (if non-null) receives the accepted-flip count.
 * Deterministic for a fixed `(seed, stream)`.
 *
 * # Safety
 * All pointers must be valid; `assignment` must be uniquely held.
 */
enum FfStatus ff_run_chain(const struct FfPattern *pattern,
                           struct FfAssignment *assignment,
                           uint64_t steps,
                           uint64_t seed,
                           uint64_t stream,
                           uint64_t *out_accepted);

/**
 * Exact uniform sample of the equal-angle single vertex C_{2n} as an
 * "MV..." string; free with `ff_string_free`.
 */
char *ff_vertex_sample(uintptr_t n, uint64_t seed);

/**
 * Number of locally flat-foldable assignments of C_{2n}, as a decimal
 * string; free with `ff_string_free`.
 */
char *ff_vertex_count(uintptr_t n);

/**
 * Spectral gap of the face-flip chain on an enumerable pattern.
 *
 * # Safety
 * `pattern` and `out` must be valid.
 */
enum FfStatus ff_spectral_gap(const struct FfPattern *pattern, double *out);

/**
 * Exact mixing time to total variation `eps_num / eps_den`.
 *
 * # Safety
 * `pattern` and `out` must be valid.
 */
enum FfStatus ff_exact_mixing_time(const struct FfPattern *pattern,
                                   uint64_t eps_num,
                                   uint64_t eps_den,
                                   uint64_t *out);

/**
 * Global flat-foldability of a square-grid assignment: `out` receives 1 when
 * a valid layer order exists, 0 otherwise.
 *
 * # Safety
 * All pointers must be valid.
 */
enum FfStatus ff_is_globally_flat_foldable(const struct FfPattern *pattern,
                                           const struct FfAssignment *assignment,
                                           int32_t *out);

/**
 * Deterministic SVG rendering; free with `ff_string_free`.
 *
 * # Safety
 * `pattern` must be a live handle; `assignment` may be null.
 */
char *ff_render_svg(const struct FfPattern *pattern,
                    const struct FfAssignment *assignment,
                    bool shade_parity);

#endif  /* FLATFOLD_H */
