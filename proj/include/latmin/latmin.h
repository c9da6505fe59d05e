#ifndef LATMIN_H
#define LATMIN_H

/* C interface of liblatmin. Objects are opaque handles released with the
 * matching *_free function. Every call returns a status; on failure
 * latmin_last_error() describes it (per thread, valid until the next call). */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#pragma GCC visibility push(default)
#endif

typedef enum latmin_status {
  LATMIN_OK = 0,
  LATMIN_E_INVALID_ARGUMENT = 1,
  LATMIN_E_DIMENSION_MISMATCH = 2,
  LATMIN_E_NOT_POSITIVE_DEFINITE = 3,
  LATMIN_E_NOT_SYMMETRIC = 4,
  LATMIN_E_UNSUPPORTED_SIZE = 5,
  LATMIN_E_DEPENDENT_SUBSET = 6,
  LATMIN_E_NOT_WELL_ROUNDED = 7,
  LATMIN_E_NO_UNIT_COEFFICIENT = 8,
  LATMIN_E_INCONSISTENT_WORDS = 9,
  LATMIN_E_ITERATION_LIMIT = 10,
  LATMIN_E_PARSE = 11,
  LATMIN_E_IO = 12,
  LATMIN_E_GROUP_TOO_LARGE = 13,
  LATMIN_E_INTERNAL = 99
} latmin_status;

typedef struct latmin_gram latmin_gram;
typedef struct latmin_code latmin_code;
typedef struct latmin_report latmin_report;

const char* latmin_version(void);
const char* latmin_status_name(latmin_status s);
const char* latmin_last_error(void);

/* Gram files. Embedded names: "n9d5", "n10d5-barycenter", "n10d5-min48". */
latmin_status latmin_gram_load(const char* path, latmin_gram** out);
latmin_status latmin_gram_parse(const char* text, latmin_gram** out);
latmin_status latmin_gram_embedded(const char* name, latmin_gram** out);
size_t latmin_gram_dim(const latmin_gram* g);
/* File text; release with latmin_string_free. */
char* latmin_gram_render(const latmin_gram* g);
void latmin_gram_free(latmin_gram* g);

/* Code files. Embedded names: "n9d5", "n10d5". */
latmin_status latmin_code_load(const char* path, latmin_code** out);
latmin_status latmin_code_parse(const char* text, latmin_code** out);
latmin_status latmin_code_embedded(const char* name, latmin_code** out);
size_t latmin_code_dim(const latmin_code* c);
char* latmin_code_render(const latmin_code* c);
void latmin_code_free(latmin_code* c);

#define LATMIN_ANALYZE_CENSUS 1u

latmin_status latmin_analyze(const latmin_gram* g, unsigned flags, latmin_report** out);

#define LATMIN_REALIZE_VERTICES 1u
#define LATMIN_REALIZE_BARYCENTER 2u
#define LATMIN_REALIZE_FACES 4u

/* iteration_cap 0 means the default of 10000. On LATMIN_E_ITERATION_LIMIT
 * *out still receives a report with the partial state. */
latmin_status latmin_realize(const latmin_code* c, unsigned flags, size_t iteration_cap, latmin_report** out);

/* Targets "paper-9d5", "paper-10d5", "all". Failed checks are not an error:
 * see latmin_report_passed. */
latmin_status latmin_verify(const char* target, size_t iteration_cap, latmin_report** out);

/* limit 0 scans every case; workers 0 or 1 runs sequentially. */
latmin_status latmin_cases_d6(const char* classes_path, size_t limit, unsigned workers, size_t iteration_cap,
                              latmin_report** out);

const char* latmin_report_json(const latmin_report* r);
const char* latmin_report_text(const latmin_report* r);
/* 1 unless the report carries failed checks. */
int latmin_report_passed(const latmin_report* r);
void latmin_report_free(latmin_report* r);

/* Parse a JSON report and render it again. */
latmin_status latmin_report_rerender(const char* json, char** out);

void latmin_string_free(char* s);

#if defined(__GNUC__)
#pragma GCC visibility pop
#endif

#ifdef __cplusplus
}
#endif

#endif
