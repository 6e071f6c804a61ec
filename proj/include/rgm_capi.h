#ifndef RGM_CAPI_H
#define RGM_CAPI_H

/* C interface to the model library.  Inputs are parsed into opaque
 * handles; every query returns a heap-allocated report string in the
 * requested format ("text" or "json") that the caller releases with
 * rgm_string_free.  On failure functions return NULL (or 0) and
 * rgm_last_error() describes what went wrong; the message is owned by
 * the library and valid until the next failing call on the same thread.
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef struct rgm_term rgm_term;
typedef struct rgm_model rgm_model;
typedef struct rgm_elem rgm_elem;
typedef struct rgm_env rgm_env;
typedef struct rgm_tree rgm_tree;
typedef struct rgm_path rgm_path;

const char* rgm_last_error(void);
void rgm_string_free(char* s);

/* lambda term; @Name escapes expand the built-in combinators */
rgm_term* rgm_term_parse(const char* text);
void rgm_term_free(rgm_term* t);

/* builtin name (E, Domega, Dstar) or a path to a model file */
rgm_model* rgm_model_open(const char* spec);
void rgm_model_free(rgm_model* m);

rgm_elem* rgm_elem_parse(const rgm_model* m, const char* text);
void rgm_elem_free(rgm_elem* e);

/* "{}" or "x:[a,b] y:[c]" */
rgm_env* rgm_env_parse(const rgm_model* m, const char* text);
void rgm_env_free(rgm_env* g);

/* branching / path expressions over len, last, n */
rgm_tree* rgm_tree_parse(const char* text);
void rgm_tree_free(rgm_tree* t);
rgm_path* rgm_path_parse(const char* text);
void rgm_path_free(rgm_path* p);

char* rgm_parse_report(const rgm_term* t, const char* format);

/* mode: beta | head | eta | bot (eta and bot ignore fuel) */
char* rgm_reduce_report(const rgm_term* t, const char* mode, unsigned long fuel,
                        const char* format);

char* rgm_bt_report(const rgm_term* t, unsigned depth, unsigned long fuel, const char* format);

char* rgm_type_report(const rgm_model* m, const rgm_env* g, const rgm_term* t, const rgm_elem* a,
                      unsigned long max_steps, const char* format);

char* rgm_interp_report(const rgm_model* m, const rgm_term* t, unsigned size_bound, unsigned depth,
                        unsigned long fuel, const char* format);

char* rgm_member_report(const rgm_model* m, const rgm_term* t, const rgm_env* g, const rgm_elem* a,
                        unsigned depth, unsigned long fuel, const char* format);

char* rgm_compare_report(const rgm_model* m, const rgm_term* left, const rgm_term* right,
                         unsigned size_bound, unsigned depth, unsigned long fuel,
                         const char* format);

char* rgm_ler_report(const rgm_term* left, const rgm_term* right, unsigned depth,
                     unsigned long fuel, const char* format);

char* rgm_polarity_report(const rgm_model* m, const rgm_elem* a, const char* format);

char* rgm_hasnf_report(const rgm_term* t, unsigned size_bound, unsigned depth, unsigned long fuel,
                       const char* format);

char* rgm_witness_report(const rgm_model* m, const rgm_elem* a, const rgm_tree* t,
                         const rgm_path* p, unsigned depth, const char* format);

char* rgm_koenig_report(const rgm_model* m, const rgm_tree* t, unsigned element_bound,
                        unsigned depth, const char* format);

char* rgm_hyper_report(const rgm_model* m, const rgm_tree* t, unsigned element_bound,
                       unsigned depth, const char* format);

char* rgm_charwt_report(const rgm_model* m, const rgm_elem* a, const rgm_tree* t, unsigned depth,
                        unsigned long fuel, const char* format);

char* rgm_jt_report(const rgm_tree* t, const char* head_var, unsigned depth, const char* format);

/* runs the acceptance battery (takes a while); machine lines, one per
 * criterion.  all_passed (may be NULL) is set to 1 when every criterion
 * passed. */
char* rgm_selftest_report(int* all_passed);

#ifdef __cplusplus
}
#endif

#endif
