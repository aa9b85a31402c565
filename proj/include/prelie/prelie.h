#ifndef PRELIE_H
#define PRELIE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define PRELIE_API __declspec(dllexport)
#else
#define PRELIE_API __attribute__((visibility("default")))
#endif

/* Status values double as CLI exit codes. */
typedef enum prelie_status {
  PRELIE_OK = 0,
  PRELIE_ERR_USAGE = 2,
  PRELIE_ERR_INVALID = 3,
  PRELIE_ERR_BUDGET = 4,
  PRELIE_ERR_INTERNAL = 5
} prelie_status;

typedef struct prelie_algebra prelie_algebra;

PRELIE_API const char* prelie_version(void);

/* Message and error-code name of the last failure on this thread. */
PRELIE_API const char* prelie_last_error(void);
PRELIE_API const char* prelie_last_error_code(void);

/* Every char* handed out by the library must be released here. */
PRELIE_API void prelie_string_free(char* s);

/* Field strings are "rational" or "gf:<p>". */

/* ---- algebras */

/* default_field applies when the document has no "field" key; may be NULL. */
PRELIE_API prelie_status prelie_algebra_parse(const char* json, const char* default_field,
                                              prelie_algebra** out);
PRELIE_API prelie_status prelie_algebra_gallery(const char* id, unsigned n, const char* field,
                                                prelie_algebra** out);
PRELIE_API prelie_status prelie_algebra_truncated_trees(unsigned max_vertices, const char* field,
                                                        prelie_algebra** out);
PRELIE_API prelie_status prelie_algebra_subadjacent(const prelie_algebra* a, prelie_algebra** out);
PRELIE_API prelie_status prelie_algebra_opposite(const prelie_algebra* a, prelie_algebra** out);
/* out_report receives {"unit", "augmentation", "roundTrip"}; may be NULL. */
PRELIE_API prelie_status prelie_algebra_dorroh(const prelie_algebra* a, prelie_algebra** out,
                                               char** out_report);
PRELIE_API prelie_status prelie_algebra_semidirect(const prelie_algebra* actor,
                                                   const prelie_algebra* acted,
                                                   const char* action_json,
                                                   prelie_algebra** out);
PRELIE_API prelie_status prelie_algebra_to_json(const prelie_algebra* a, char** out);
PRELIE_API size_t prelie_algebra_dim(const prelie_algebra* a);
/* 1 when name, field, basis and structure constants all agree. */
PRELIE_API int prelie_algebra_equal(const prelie_algebra* a, const prelie_algebra* b);
PRELIE_API void prelie_algebra_free(prelie_algebra* a);

/* ---- queries; each writes a JSON document to *out */

PRELIE_API prelie_status prelie_check_identity(const prelie_algebra* a, const char* identity,
                                               char** out);
/* with_lattice != 0 enumerates ideals (prime fields only) to decide
   hyperabelian. */
PRELIE_API prelie_status prelie_classify(const prelie_algebra* a, int with_lattice,
                                         uint64_t budget, char** out);
/* kind: "derived" or "lower-central" */
PRELIE_API prelie_status prelie_series(const prelie_algebra* a, const char* kind, char** out);

/* Ideal documents: {"algebra": name, "generators": [{basis name: scalar}]}. */
PRELIE_API prelie_status prelie_ideal_closure(const prelie_algebra* a, const char* ideal_json,
                                              char** out);
PRELIE_API prelie_status prelie_submodule_product(const prelie_algebra* a, const char* i_json,
                                                  const char* j_json, char** out);
PRELIE_API prelie_status prelie_commutator(const prelie_algebra* a, const char* i_json,
                                           const char* j_json, char** out);
PRELIE_API prelie_status prelie_center(const prelie_algebra* a, char** out);
PRELIE_API prelie_status prelie_centralizer(const prelie_algebra* a, const char* i_json,
                                            char** out);
PRELIE_API prelie_status prelie_ideals(const prelie_algebra* a, uint64_t budget, char** out);
PRELIE_API prelie_status prelie_primes(const prelie_algebra* a, uint64_t budget, char** out);
PRELIE_API prelie_status prelie_idempotents(const prelie_algebra* a, uint64_t budget, char** out);

/* property: hom, antihom, pre-morphism, derivation, pre-derivation */
PRELIE_API prelie_status prelie_map_check(const prelie_algebra* domain,
                                          const prelie_algebra* codomain, const char* map_json,
                                          const char* property, char** out);

/* ---- rooted trees */

PRELIE_API prelie_status prelie_trees_enumerate(unsigned n, unsigned budget, char** out);
/* Operands are tree strings or TreeSum documents. */
PRELIE_API prelie_status prelie_trees_product(const char* left, const char* right,
                                              const char* field, char** out);

/* ---- modules and actions */

PRELIE_API prelie_status prelie_module_check(const prelie_algebra* a, const char* module_json,
                                             char** out);
PRELIE_API prelie_status prelie_action_check(const prelie_algebra* actor,
                                             const prelie_algebra* acted,
                                             const char* action_json, char** out);
PRELIE_API prelie_status prelie_bimodule_check(const prelie_algebra* actor,
                                               const prelie_algebra* acted,
                                               const char* action_json, char** out);

#ifdef __cplusplus
}
#endif

#endif
