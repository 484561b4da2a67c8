/* rtcount.h -- C interface to the lattice regular tetrahedron library.
 *
 * Conventions:
 *   - every fallible call returns rtc_status and writes results through out
 *     pointers, which are touched only on RTC_OK;
 *   - rtc_last_error() returns a thread-local message for the most recent
 *     failing call on the calling thread (valid until the next library call
 *     on that thread);
 *   - buffers handed out by the library are released with the matching
 *     rtc_free_* call, never with free().
 */

#ifndef RTCOUNT_H
#define RTCOUNT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rtc_status {
    RTC_OK = 0,
    RTC_ERR_INVALID = 1,  /* rejected input (bad d, n, flags, null pointer) */
    RTC_ERR_GUARD = 2,    /* a bounded brute-force guard was exceeded */
    RTC_ERR_IO = 3,       /* unusable cache file or failed write */
    RTC_ERR_INTERNAL = 4  /* invariant violation; a bug, never user error */
} rtc_status;

const char* rtc_status_name(rtc_status st);
const char* rtc_last_error(void);

/* ---- counting formulas ------------------------------------------------- */

/* (-3|p) for an odd prime p: 0 at p=3, else +1 / -1 by p mod 12. */
rtc_status rtc_legendre_minus3(int64_t p, int* out);

/* Primitive solution count of a^2+b^2+c^2 = 3d^2 (signs and orderings). */
rtc_status rtc_lambda_count(int64_t d, int64_t* out);

/* Total (non-primitive) solution count of a^2+b^2+c^2 = 3d^2. */
rtc_status rtc_hs_total_count(int64_t d, int64_t* out);

/* #{x,y >= 1, gcd(x,y)=1, d = 2x^2 + y^2}, odd d. */
rtc_status rtc_gamma2(int64_t d, int64_t* out);

/* #{x,y >= 1, gcd(x,y)=1, d = x^2 + 3y^2}; 0 for even d by convention. */
rtc_status rtc_gamma3(int64_t d, int64_t* out);

/* Number of positive ordered primitive solutions for odd d. */
rtc_status rtc_pi_epsilon(int64_t d, int64_t* out);

/* All positive ordered primitive solutions of a^2+b^2+c^2 = 3d^2 in
 * lexicographic order: *out receives a buffer of (*count) rows of four
 * int64 values a,b,c,d.  *out is NULL when the count is zero.  Release
 * with rtc_free_i64. */
rtc_status rtc_solutions_3d2(int64_t d, int64_t** out, size_t* count);
void rtc_free_i64(int64_t* p);

/* Relation test on two solutions given as rows (a,b,c,d); *out = 0 or 1. */
rtc_status rtc_solutions_connected(const int64_t x[4], const int64_t y[4], int* out);

/* ---- brute-force oracles ------------------------------------------------ */

/* Number of regular tetrahedra with vertices in {0..n}^3 (the raw total,
 * twice the published sequence value) by exhaustive 4-subset scan; n <= 4. */
rtc_status rtc_oracle_quadruple_count(int64_t n, int64_t* out);

/* Same count via equilateral triangles + apex completion; n <= 10 unless
 * force is nonzero. */
rtc_status rtc_oracle_triangle_count(int64_t n, int force, int64_t* out);

/* ---- enumeration pipeline ----------------------------------------------- */

typedef struct rtc_pipeline rtc_pipeline;

rtc_pipeline* rtc_pipeline_new(void);
void rtc_pipeline_free(rtc_pipeline* p);

/* threads = 0 selects machine parallelism; results are identical for any
 * value. */
rtc_status rtc_pipeline_set_threads(rtc_pipeline* p, int threads);

/* Load / save the irreducible-record cache (one JSON object per line). */
rtc_status rtc_pipeline_load_cache(rtc_pipeline* p, const char* path);
rtc_status rtc_pipeline_save_cache(rtc_pipeline* p, const char* path);

/* Sequence values for n = 1..n_max: half_out[i] = A103158(i+1) (required,
 * n_max entries), total_out[i] = the raw doubled total (optional, may be
 * NULL).  Extends the record list as needed. */
rtc_status rtc_pipeline_sequence(rtc_pipeline* p, int64_t n_max, int64_t* half_out,
                                 int64_t* total_out);

rtc_status rtc_pipeline_record_count(const rtc_pipeline* p, size_t* out);

/* ---- relation graph ------------------------------------------------------ */

typedef struct rtc_graph rtc_graph;

rtc_status rtc_graph_build(int64_t d_max, rtc_graph** out);
void rtc_graph_free(rtc_graph* g);

size_t rtc_graph_node_count(const rtc_graph* g);
size_t rtc_graph_edge_count(const rtc_graph* g);       /* self-loops included */
size_t rtc_graph_self_loop_count(const rtc_graph* g);
size_t rtc_graph_component_count(const rtc_graph* g);

/* NUL-terminated DOT / CSV text; release with rtc_free_str. */
rtc_status rtc_graph_dot(const rtc_graph* g, char** out);
rtc_status rtc_graph_components_csv(const rtc_graph* g, char** out);
void rtc_free_str(char* s);

#ifdef __cplusplus
}
#endif

#endif /* RTCOUNT_H */
