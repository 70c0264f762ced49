/* C interface to the distance-2 connectivity library.
 *
 * Handles are opaque; every fallible call returns a d2g_status and reports
 * details through d2g_last_error() (thread-local). Strings returned through
 * char** parameters are heap-allocated; release them with d2g_string_free().
 */
#ifndef D2GRAPH_H
#define D2GRAPH_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum d2g_status {
  D2G_OK = 0,
  D2G_ERR_INVALID_ARGUMENT = 1,
  D2G_ERR_NOMEM = 2,
  D2G_ERR_INTERNAL = 3,
  D2G_ERR_INDEX_OUT_OF_RANGE = 10,
  D2G_ERR_SELF_LOOP = 11,
  D2G_ERR_EMPTY_SET = 12,
  D2G_ERR_EMPTY_GRAPH = 13,
  D2G_ERR_DISCONNECTED = 14,
  D2G_ERR_DIAMETER_TOO_SMALL = 15,
  D2G_ERR_TOO_LARGE = 16,
  D2G_ERR_BAD_HEADER = 17,
  D2G_ERR_BYTE_OUT_OF_RANGE = 18,
  D2G_ERR_TRUNCATED_BITSTREAM = 19,
  D2G_ERR_TRAILING_GARBAGE = 20,
  D2G_ERR_TOO_MANY_TOKENS = 21,
  D2G_ERR_PARTITION_MISMATCH = 22,
  D2G_ERR_IMPROPER_COLORING = 23,
  D2G_ERR_WRONG_DIAMETER = 24,
  D2G_ERR_INTERNAL_CONSISTENCY = 25,
  D2G_ERR_PARSE = 26,
} d2g_status;

typedef struct d2g_graph d2g_graph;
typedef struct d2g_analysis d2g_analysis;
typedef struct d2g_census d2g_census;

const char* d2g_status_name(d2g_status status);
/* Message for the most recent failure on this thread ("" when none). */
const char* d2g_last_error(void);

void d2g_string_free(char* s);
void d2g_graph_free(d2g_graph* g);
void d2g_analysis_free(d2g_analysis* a);
void d2g_census_free(d2g_census* c);

/* --- construction and serialization ------------------------------------ */

/* endpoints holds 2*edge_count vertex indices: u0,v0,u1,v1,... */
d2g_status d2g_graph_from_edges(int32_t n, const int32_t* endpoints,
                                size_t edge_count, d2g_graph** out);
d2g_status d2g_parse_graph6(const char* line, d2g_graph** out);
d2g_status d2g_parse_edge_list(const char* text, d2g_graph** out);
d2g_status d2g_write_graph6(const d2g_graph* g, char** out);
d2g_status d2g_write_edge_list(const d2g_graph* g, char** out);
/* cluster_by_fine_partition != 0 groups nodes by the maximal fine partition
 * (requires a connected graph of diameter >= 3). */
d2g_status d2g_write_dot(const d2g_graph* g, int cluster_by_fine_partition,
                         char** out);

/* --- accessors ---------------------------------------------------------- */

int32_t d2g_graph_order(const d2g_graph* g); /* -1 on bad handle */
int64_t d2g_graph_size(const d2g_graph* g);  /* -1 on bad handle */
int d2g_graph_has_edge(const d2g_graph* g, int32_t u, int32_t v); /* -1 err */
const char* d2g_graph_label(const d2g_graph* g, int32_t v); /* NULL on err */

/* --- transforms ---------------------------------------------------------- */

d2g_status d2g_distance2(const d2g_graph* g, d2g_graph** out);
/* Quotient by the maximal fine partition; vertex labels are the
 * brace-joined class members. */
d2g_status d2g_contract_fine(const d2g_graph* g, d2g_graph** out);
d2g_status d2g_fine_partition_json(const d2g_graph* g, char** out);

/* --- analysis ------------------------------------------------------------ */

d2g_status d2g_analyze(const d2g_graph* g, int with_oracle, d2g_analysis** out);
int d2g_analysis_d2_connected(const d2g_analysis* a);     /* 0/1, -1 err */
int d2g_analysis_connected(const d2g_analysis* a);        /* 0/1, -1 err */
int d2g_analysis_oracle_agreement(const d2g_analysis* a); /* -1 when absent */
const char* d2g_analysis_branch(const d2g_analysis* a);   /* NULL on err */
d2g_status d2g_analysis_json(const d2g_analysis* a, char** out);
d2g_status d2g_analysis_text(const d2g_analysis* a, int color, char** out);

/* --- verification -------------------------------------------------------- */

d2g_status d2g_verify_range(int32_t min_n, int32_t max_n, int32_t jobs,
                            d2g_census** out);
/* text holds one graph6 line per graph; blank lines are skipped and parse
 * failures report the offending line number. */
d2g_status d2g_verify_graph6_text(const char* text, int32_t jobs,
                                  d2g_census** out);
int64_t d2g_census_failures(const d2g_census* c); /* -1 on bad handle */
d2g_status d2g_census_json(const d2g_census* c, char** out);
d2g_status d2g_census_text(const d2g_census* c, char** out);

#ifdef __cplusplus
}
#endif

#endif /* D2GRAPH_H */
