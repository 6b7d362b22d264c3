/* C interface to the maniplex library.
 *
 * Every fallible call returns an mpx_status. On failure the message of the
 * most recent error on the calling thread is available from mpx_last_error().
 * Strings returned through char** are owned by the caller and released with
 * mpx_string_free(); handles are released with their *_free function.
 */
#ifndef MANIPLEX_H
#define MANIPLEX_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define MPX_API __declspec(dllexport)
#else
#define MPX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mpx_status {
  MPX_OK = 0,
  MPX_E_NOT_INVOLUTION = 1,
  MPX_E_FIXED_POINT = 2,
  MPX_E_MULTI_EDGE = 3,
  MPX_E_OUT_OF_RANGE = 4,
  MPX_E_SIZE_MISMATCH = 5,
  MPX_E_DISCONNECTED = 6,
  MPX_E_BAD_TWO_FACTOR = 7,
  MPX_E_RANK_OUT_OF_RANGE = 8,
  MPX_E_PATH_USES_PIVOT_COLOUR = 9,
  MPX_E_NOT_A_CHAIN = 10,
  MPX_E_NOT_COMPARABLE = 11,
  MPX_E_NOT_A_POLYTOPE = 12,
  MPX_E_RANK_TOO_LARGE_FOR_EXHAUSTIVE = 13,
  MPX_E_INCONSISTENT_VERDICTS = 14,
  MPX_E_BAD_PARAM = 15,
  MPX_E_DEGENERATE_BASIS = 16,
  MPX_E_BUDGET_EXHAUSTED = 17,
  MPX_E_RANK_MISMATCH = 18,
  MPX_E_PARSE = 19,
  MPX_E_IO = 20,
  MPX_E_INTERNAL = 21,
  MPX_E_NOT_A_PRODUCT = 22,
  MPX_E_NULL_ARGUMENT = 100,
  MPX_E_UNKNOWN = 101
} mpx_status;

typedef enum mpx_format {
  MPX_FORMAT_MPX = 0,
  MPX_FORMAT_DOT = 1,
  MPX_FORMAT_JSON = 2,
  MPX_FORMAT_TEXT = 3
} mpx_format;

/* A validated maniplex plus optional name/provenance metadata. */
typedef struct mpx_graph mpx_graph;
/* Result of a full polytopality check. */
typedef struct mpx_report mpx_report;

MPX_API const char* mpx_status_name(mpx_status status);
MPX_API const char* mpx_last_error(void);
/* Line of the last parse error, or -1. */
MPX_API int64_t mpx_last_error_line(void);
/* For MPX_E_PARSE: the validation status behind it, else MPX_OK. */
MPX_API mpx_status mpx_last_error_cause(void);

MPX_API void mpx_string_free(char* s);
MPX_API void mpx_set_threads(unsigned threads);

/* adjacency is colour-major: adjacency[c * flags + v] = adj_c(v). */
MPX_API mpx_status mpx_graph_create(int rank, size_t flags, const uint32_t* adjacency, mpx_graph** out);
MPX_API void mpx_graph_free(mpx_graph* g);
MPX_API int mpx_graph_rank(const mpx_graph* g);
MPX_API size_t mpx_graph_flag_count(const mpx_graph* g);
/* Returns UINT32_MAX for out-of-range arguments. */
MPX_API uint32_t mpx_graph_adj(const mpx_graph* g, int colour, uint32_t flag);
MPX_API mpx_status mpx_graph_set_metadata(mpx_graph* g, const char* name, const char* provenance);

MPX_API mpx_status mpx_graph_parse(const char* mpx_text, mpx_graph** out);
MPX_API mpx_status mpx_graph_load(const char* path, mpx_graph** out);
MPX_API mpx_status mpx_graph_save(const mpx_graph* g, const char* path);
/* MPX, DOT or JSON. */
MPX_API mpx_status mpx_graph_write(const mpx_graph* g, mpx_format format, char** out);

MPX_API mpx_status mpx_gen_polygon(int p, mpx_graph** out);
MPX_API mpx_status mpx_gen_hypercube(int d, mpx_graph** out);
MPX_API mpx_status mpx_gen_torus44(int b, int c, mpx_graph** out);
MPX_API mpx_status mpx_gen_klein44(mpx_graph** out);
/* basis holds the rows v1, v2, v3; NULL selects (0,2,0), (1,0,0), (1,0,2). */
MPX_API mpx_status mpx_gen_rect3torus(const int64_t* basis, mpx_graph** out);
MPX_API mpx_status mpx_gen_random(int rank, uint64_t seed, size_t budget, mpx_graph** out);

MPX_API mpx_status mpx_check(const mpx_graph* g, mpx_report** out);
MPX_API void mpx_report_free(mpx_report* r);
MPX_API int mpx_report_polytopal(const mpx_report* r);
/* Returns 1 and fills the outputs when CIP fails; colours is a bit mask. */
MPX_API int mpx_report_cip_witness(const mpx_report* r, uint64_t* colours, uint32_t* u, uint32_t* v);
/* TEXT or JSON. */
MPX_API mpx_status mpx_report_write(const mpx_report* r, mpx_format format, char** out);

/* Induced poset as DOT, JSON or TEXT; is_polytope may be NULL. */
MPX_API mpx_status mpx_poset_write(const mpx_graph* g, mpx_format format, char** out, int* is_polytope);

/* map, when not NULL, receives flag_count(a) entries. */
MPX_API mpx_status mpx_isomorphic(const mpx_graph* a, const mpx_graph* b, int* result, uint32_t* map);
MPX_API mpx_status mpx_find_covering(const mpx_graph* a, const mpx_graph* b, int* found, uint32_t* map);
MPX_API mpx_status mpx_mix(const mpx_graph* a, const mpx_graph* b, uint32_t base_a, uint32_t base_b,
                           mpx_graph** out);

#ifdef __cplusplus
}
#endif

#endif /* MANIPLEX_H */
