#ifndef SELFSIM_H
#define SELFSIM_H

/* Generated by cbindgen. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes.
 */
typedef enum SsgStatus {
  SSG_STATUS_OK = 0,
  SSG_STATUS_NULL_POINTER = 1,
  SSG_STATUS_INVALID_UTF8 = 2,
  /**
   * Malformed word, string, selector or automaton text.
   */
  SSG_STATUS_INVALID_INPUT = 3,
  SSG_STATUS_NOT_FINITE_STATE = 4,
  SSG_STATUS_ORACLE = 5,
  SSG_STATUS_UNSUPPORTED = 6,
  SSG_STATUS_PANIC = 7,
} SsgStatus;

/**
 * Opaque machine handle.
 */
typedef struct SsgMachine SsgMachine;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Opens `builtin:NAME`, `data:SELECTOR` or an automaton file path.
 *
 * # Safety
 * `source` must be a NUL-terminated string and `out` a valid pointer.
 */
enum SsgStatus ssg_machine_from_source(const char *source, struct SsgMachine **out);

/**
 * Builds the representation of a data selector such as `lamplighter:B=2`.
 *
 * # Safety
 * `selector` must be a NUL-terminated string and `out` a valid pointer.
 */
enum SsgStatus ssg_machine_from_data(const char *selector, struct SsgMachine **out);

/**
 * Parses automaton file text.
 *
 * # Safety
 * `automaton` must be a NUL-terminated string and `out` a valid pointer.
 */
enum SsgStatus ssg_machine_from_text(const char *automaton, struct SsgMachine **out);

/**
 * # Safety
 * `m` must come from one of the constructors, or be null.
 */
void ssg_machine_free(struct SsgMachine *m);

/**
 * # Safety
 * `m` must be a live handle and `out` a valid pointer.
 */
enum SsgStatus ssg_degree(const struct SsgMachine *m, size_t *out);

/**
 * Applies `word` to the string `s[0..len]`, writing `len` letters to `out`.
 * `s` and `out` may alias.
 *
 * # Safety
 * `s` and `out` must point to `len` elements; they may be null when
 * `len == 0`.
 */
enum SsgStatus ssg_apply(const struct SsgMachine *m,
                         const char *word,
                         const size_t *s,
                         size_t len,
                         size_t *out);

/**
 * Orbit sizes on the first level, as `(m_1,..,m_s)`.
 *
 * # Safety
 * `m` must be a live handle and `out` a valid pointer.
 */
enum SsgStatus ssg_orbit_type(const struct SsgMachine *m, char **out);

/**
 * Whether `word` acts trivially on all strings of length at most `depth`.
 *
 * # Safety
 * `m` must be a live handle, `word` NUL-terminated and `out` valid.
 */
enum SsgStatus ssg_is_trivial(const struct SsgMachine *m,
                              const char *word,
                              size_t depth,
                              bool *out);

/**
 * Generator recursions, one per line.
 *
 * # Safety
 * `m` must be a live handle and `out` a valid pointer.
 */
enum SsgStatus ssg_recursions(const struct SsgMachine *m, char **out);

/**
 * # Safety
 * `s` must come from this library, or be null.
 */
void ssg_string_free(char *s);

/**
 * Message of the last failed call on this thread; empty after a success.
 * Valid until the next call on the same thread.
 */
const char *ssg_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SELFSIM_H */
