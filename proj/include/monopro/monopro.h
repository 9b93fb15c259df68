/* C interface to the monopro demo operations: monocle folds over small
 * homogeneous tuples, and the logged, stoppable quicksort.
 *
 * Strings returned through char** are heap-allocated; release them with
 * monopro_string_free. Quicksort results are opaque handles released with
 * monopro_qsort_free.
 */
#ifndef MONOPRO_H
#define MONOPRO_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum monopro_status {
  MONOPRO_OK = 0,
  MONOPRO_ERR_USAGE = 1,   /* bad arity, count mismatch, unknown map name */
  MONOPRO_ERR_INTERNAL = 2 /* unexpected failure */
} monopro_status;

/* Concatenate the values of an arity-sized tuple (arity 2..4, count must
 * equal arity). */
monopro_status monopro_monocle_fold(size_t arity, const char* const* values, size_t count,
                                    char** out);

/* Fold the values through a named mapping: "len" sums lengths (decimal
 * output), "upper" concatenates uppercased values. */
monopro_status monopro_monocle_foldmap(size_t arity, const char* map_name,
                                       const char* const* values, size_t count, char** out);

void monopro_string_free(char* s);

typedef struct monopro_qsort monopro_qsort;

/* Run the logged quicksort. Returns NULL only on allocation failure. */
monopro_qsort* monopro_qsort_run(const char* const* words, size_t count);

/* 1 when the sort produced a result, 0 when it stopped on an empty word. */
int monopro_qsort_succeeded(const monopro_qsort* q);

size_t monopro_qsort_log_count(const monopro_qsort* q);
const char* monopro_qsort_log_line(const monopro_qsort* q, size_t i);

size_t monopro_qsort_result_count(const monopro_qsort* q);
const char* monopro_qsort_result_word(const monopro_qsort* q, size_t i);

void monopro_qsort_free(monopro_qsort* q);

#ifdef __cplusplus
}
#endif

#endif /* MONOPRO_H */
