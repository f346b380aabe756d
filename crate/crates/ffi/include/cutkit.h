#ifndef CUTKIT_H
#define CUTKIT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible function.
 */
typedef enum CutkitStatus {
  /**
   * Success.
   */
  CutkitStatus_Ok = 0,
  /**
   * A pointer argument was null.
   */
  CutkitStatus_NullArgument = 1,
  /**
   * A string argument was not valid UTF-8.
   */
  CutkitStatus_InvalidUtf8 = 2,
  /**
   * The input could not be parsed.
   */
  CutkitStatus_ParseError = 3,
  /**
   * The group is too large for the requested computation.
   */
  CutkitStatus_ResourceLimit = 4,
  /**
   * Any other computation error.
   */
  CutkitStatus_ComputeError = 5,
} CutkitStatus;

/**
 * Opaque group handle.
 */
typedef struct CutkitGroup CutkitGroup;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Create a group from permutation generators in cycle notation,
 * separated by semicolons (e.g. `"(1,2);(1,2,3)"`), acting on
 * `degree` points.
 *
 * # Safety
 * `generators` must be a valid NUL-terminated string and `out` a
 * valid pointer.
 */
enum CutkitStatus cutkit_group_from_generators(const char *generators,
                                               uintptr_t degree,
                                               struct CutkitGroup **out);

/**
 * Create a group from a presentation in the
 * `gens: a b; rels: a^2, ...` grammar via coset enumeration.
 *
 * # Safety
 * `presentation` must be a valid NUL-terminated string and `out` a
 * valid pointer.
 */
enum CutkitStatus cutkit_group_from_presentation(const char *presentation,
                                                 struct CutkitGroup **out);

/**
 * Create a group from a constructor expression such as
 * `DP(C(4),S(3))`.
 *
 * # Safety
 * `expression` must be a valid NUL-terminated string and `out` a
 * valid pointer.
 */
enum CutkitStatus cutkit_group_from_expression(const char *expression, struct CutkitGroup **out);

/**
 * Free a group handle. Null is ignored.
 *
 * # Safety
 * `group` must be null or a handle produced by this library and not
 * yet freed.
 */
void cutkit_group_free(struct CutkitGroup *group);

/**
 * The order of the group.
 *
 * # Safety
 * `group` must be a live handle and `out` a valid pointer.
 */
enum CutkitStatus cutkit_group_order(const struct CutkitGroup *group, uint64_t *out);

/**
 * Whether the group is cut (1) or not (0), by the conjugacy-class
 * criterion.
 *
 * # Safety
 * `group` must be a live handle and `out` a valid pointer.
 */
enum CutkitStatus cutkit_group_is_cut(const struct CutkitGroup *group, int32_t *out);

/**
 * Full classification report as a JSON string, including both cut
 * criteria. Free with [`cutkit_string_free`].
 *
 * # Safety
 * `group` must be a live handle and `out` a valid pointer.
 */
enum CutkitStatus cutkit_group_classify_json(const struct CutkitGroup *group, char **out);

/**
 * Free a string produced by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string produced by this library and not yet
 * freed.
 */
void cutkit_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CUTKIT_H */
