#ifndef PERMCHECK_H
#define PERMCHECK_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum PcStatus {
  PC_STATUS_OK = 0,
  PC_STATUS_INPUT_ERROR = 1,
  PC_STATUS_CAP_EXCEEDED = 2,
  PC_STATUS_NULL_POINTER = 3,
  PC_STATUS_INTERNAL = 4,
} PcStatus;

/**
 * Opaque group handle.
 */
typedef struct PcGroup PcGroup;

/**
 * Verdict for a pair of subgroups `H`, `K`.
 */
typedef struct PcCheckVerdict {
  bool perm4;
  bool permutes;
  size_t h_order;
  size_t k_order;
  size_t join_order;
  /**
   * `|HKHK|`.
   */
  size_t product_order;
  /**
   * `|HK|`.
   */
  size_t hk_order;
} PcCheckVerdict;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds a builtin group by name (`S3`, `D12`, `C2xC2`, `file:path`, ...).
 * Zero for `max_order` or `lattice_cap` selects the default.
 *
 * # Safety
 * `name` must be a valid C string and `out` a valid pointer.
 */
enum PcStatus pc_group_from_name(const char *name,
                                 size_t max_order,
                                 size_t lattice_cap,
                                 struct PcGroup **out);

/**
 * Builds a group from the text of a group file (`degree d` then `gen`
 * lines). Generators are named `g1`, `g2`, ... for `pc_check`.
 *
 * # Safety
 * `text` must be a valid C string and `out` a valid pointer.
 */
enum PcStatus pc_group_from_file_text(const char *text,
                                      size_t max_order,
                                      size_t lattice_cap,
                                      struct PcGroup **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `group` must come from a `pc_group_from_*` call and not be freed twice.
 */
void pc_group_free(struct PcGroup *group);

/**
 * Group order, or 0 for a null handle.
 *
 * # Safety
 * `group` must be null or a live handle.
 */
size_t pc_group_order(const struct PcGroup *group);

/**
 * Number of subgroups, or 0 for a null handle.
 *
 * # Safety
 * `group` must be null or a live handle.
 */
size_t pc_group_num_subgroups(const struct PcGroup *group);

/**
 * Classification report as JSON.
 *
 * # Safety
 * `group` must be a live handle and `out` a valid pointer.
 */
enum PcStatus pc_classify_json(const struct PcGroup *group, char **out);

/**
 * Subgroup lattice as JSON.
 *
 * # Safety
 * `group` must be a live handle and `out` a valid pointer.
 */
enum PcStatus pc_lattice_json(const struct PcGroup *group, char **out);

/**
 * Compares the subgroups generated by `h` and `k`, each a `;`-separated
 * list of elements in cycle notation or words over named generators.
 *
 * # Safety
 * `group` must be a live handle, `h` and `k` valid C strings and `out` a
 * valid pointer.
 */
enum PcStatus pc_check(const struct PcGroup *group,
                       const char *h,
                       const char *k,
                       struct PcCheckVerdict *out);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void pc_string_free(char *s);

/**
 * Message for the last failed call on this thread, or null. The pointer is
 * valid until the next call into this library on the same thread.
 */
const char *pc_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PERMCHECK_H */
