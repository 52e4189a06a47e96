/* C interface to the Thompson's-group-F workbench core.
 *
 * All functions return a tf_status; every other output travels through an
 * out-parameter.  Strings returned through char** are heap-allocated and
 * must be released with tf_string_free; handles must be released with
 * their matching *_free.  On any non-TF_OK return the out-parameters are
 * untouched and tf_last_error() describes the failure (thread-local).
 *
 * Exact values are always exchanged as strings: dyadics as "a/2^n",
 * rationals as "p/q".  Floating point input is rejected everywhere.
 */
#ifndef THOMPSONF_CAPI_H
#define THOMPSONF_CAPI_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tf_status {
    TF_OK = 0,
    TF_ERR_PARSE = 2,        /* malformed input */
    TF_ERR_RESOURCE = 3,     /* enumeration cap or I/O failure */
    TF_ERR_PRECONDITION = 4, /* structurally valid but unusable input */
    TF_ERR_INTERNAL = 5
} tf_status;

typedef struct tf_element tf_element; /* an element of F (a PL map) */
typedef struct tf_graph tf_graph;     /* a computed Schreier/Cayley ball */
typedef struct tf_oracle tf_oracle;   /* a subgroup membership oracle */

/* Description of the most recent failure on this thread; never NULL. */
const char * tf_last_error(void);

void tf_string_free(char * s);
void tf_element_free(tf_element * e);
void tf_graph_free(tf_graph * g);
void tf_oracle_free(tf_oracle * o);

/* ---- elements ------------------------------------------------------- */

/* Word over {x0, x1}: "x0x1'" or "x0 x1^-1".  Empty string = identity. */
tf_status tf_element_from_word(const char * word, tf_element ** out);
/* JSON {"points": [["a/2^n", ...], ...], "slopes": [...]} (validated). */
tf_status tf_element_from_json(const char * json, tf_element ** out);
tf_status tf_element_to_json(const tf_element * e, char ** out);

tf_status tf_element_compose(const tf_element * g, const tf_element * h,
                             tf_element ** out); /* apply g, then h */
tf_status tf_element_inverse(const tf_element * e, tf_element ** out);
tf_status tf_element_conjugate(const tf_element * g, const tf_element * h,
                               tf_element ** out); /* h^-1 g h */

/* Exact image of a rational point, as a string. */
tf_status tf_element_eval(const tf_element * e, const char * point, char ** out);

/* Boolean queries return 0/1 through *out. */
tf_status tf_element_equal(const tf_element * a, const tf_element * b, int * out);
tf_status tf_element_is_identity(const tf_element * e, int * out);
tf_status tf_element_in_commutator(const tf_element * e, int * out);
tf_status tf_element_abelianize(const tf_element * e,
                                long * at_zero, long * at_one);

/* ---- relations ------------------------------------------------------ */

/* Checks both defining relators and generator/inverse identities;
 * *out is a JSON report with per-relator booleans and "all_ok". */
tf_status tf_relations_check(char ** out);

/* ---- oracles -------------------------------------------------------- */

/* kind: trivial | full | commutator | point_stab | tuple_stab |
 *       germ_stab | germ_stab_commutator | cyclic.
 * points: comma-separated exact rationals (stabilizer kinds; else NULL).
 * base:   generator element (cyclic kind; else NULL). */
tf_status tf_oracle_make(const char * kind, const char * points,
                         const tf_element * base, tf_oracle ** out);
tf_status tf_oracle_member(const tf_oracle * o, const tf_element * e, int * out);

/* ---- graphs --------------------------------------------------------- */

/* spec: "cayley" | "orbit:<point>" | "coset:<kind>[:<points>]".
 * Builds the radius-`radius` ball.  Vertex enumeration is capped by the
 * THOMPSONF_MAX_VERTICES environment variable (default 200000). */
tf_status tf_graph_build(const char * spec, int radius, tf_graph ** out);
tf_status tf_graph_from_json(const char * json, tf_graph ** out);
tf_status tf_graph_to_json(const tf_graph * g, char ** out);
tf_status tf_graph_to_dot(const tf_graph * g, char ** out);
tf_status tf_graph_size(const tf_graph * g, size_t * out);
tf_status tf_graph_radius(const tf_graph * g, int * out);

/* Rooted-ball comparison up to radius n (1 = isomorphic). */
tf_status tf_graph_ball_isomorphic(const tf_graph * a, const tf_graph * b,
                                   int n, int * out);

/* JSON report: {"value": "p/q", "witness_radius": n|null,
 *               "is_upper_bound": bool, "display": "..."} */
tf_status tf_chabauty_distance(const tf_graph * a, const tf_graph * b,
                               int max_radius, char ** out);

/* JSON list of vertices of g whose radius-n ball matches the Cayley
 * ball's, with their payloads. */
tf_status tf_cayley_fragments(const tf_graph * g, const tf_graph * cayley,
                              int n, char ** out);

/* ---- growth / amenability / displacement ---------------------------- */

/* Ball sizes |B(v, n)| for n = 0..max_n at each listed root (indices
 * into g; NULL roots = every vertex with a complete radius-max_n ball).
 * *out is the growth-table JSON. */
tf_status tf_growth_table(const tf_graph * g, const int * roots,
                          size_t nroots, int max_n, char ** out);
tf_status tf_growth_table_csv(const char * table_json, char ** out);

/* Log2 least-squares fit over [window_lo, window_hi] (-1 = defaults).
 * *out: {"fitted_rate", "r_squared", "window", "exponential_evidence"}. */
tf_status tf_growth_estimate(const char * table_json,
                             int window_lo, int window_hi, char ** out);

/* Exact |boundary(S)| / |S| for S = ball of radius r at the root. */
tf_status tf_foelner_ratio(const tf_graph * g, int r, char ** out);

/* Max displacement of the word's element over the graph's vertices:
 * {"word", "max_observed", "vertices_checked", "vertices_skipped"}. */
tf_status tf_displacement(const tf_graph * g, const char * word, char ** out);

/* ---- constructions --------------------------------------------------- */

/* |S|+1 disjoint bumps near 0; *out lists their element JSON plus the
 * target subgroup description. */
tf_status tf_confine_build(const char * points, char ** out);

/* Verifies the built set against germ_stab_commutator(S) over all
 * commutator-subgroup conjugators of the radius-`radius` Cayley ball. */
tf_status tf_confine_verify(const char * points, int radius, char ** out);

/* Semicolon-separated words; *out reports the permutation, inversions,
 * the intervals U_i, and whether the chain ordering holds. */
tf_status tf_lemma_chain(const char * words, char ** out);

/* Least k >= 0 with x0^k(S) inside (0, 1/2). */
tf_status tf_push_left(const char * points, int * out);

/* Compares the two germ-stabilizer descriptions over the radius-`radius`
 * Cayley ball; *out has per-sample rows and "identity_holds". */
tf_status tf_germ_check(const char * points, int radius, char ** out);

#ifdef __cplusplus
}
#endif

#endif
