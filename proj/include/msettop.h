/* msettop: finite multiset topology engine.
 *
 * C interface over the C++ core: opaque handles, status codes, and JSON
 * strings for structured reports. Every function returning mst_status sets
 * a thread-local message retrievable via mst_last_error() on failure.
 *
 * Ownership: *_free releases a handle; char** outputs are released with
 * mst_string_free(). Pointers documented as borrowed stay valid while the
 * owning handle lives and is unmodified. A budget argument of 0 selects the
 * engine default.
 */

#ifndef MSETTOP_H
#define MSETTOP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define MST_API __declspec(dllexport)
#else
#define MST_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mst_status {
  MST_OK = 0,
  MST_ERR_INVALID_ARGUMENT = 1,
  MST_ERR_PARSE = 2,
  MST_ERR_SPACE_MISMATCH = 3,
  MST_ERR_NOT_A_SUBSET = 4,
  MST_ERR_MALFORMED_FAMILY = 5,
  MST_ERR_BUDGET = 6,
  MST_ERR_DIVERGENCE = 7,
  MST_ERR_CHAIN = 8,
  MST_ERR_UNKNOWN_CLAIM = 9,
  MST_ERR_GENERATION = 10,
  MST_ERR_INTERNAL = 11
} mst_status;

typedef struct mst_space mst_space;
typedef struct mst_mset mst_mset;
typedef struct mst_family mst_family;
typedef struct mst_topology mst_topology;
typedef struct mst_semi mst_semi;

typedef enum mst_combine_op {
  MST_OP_UNION = 0,
  MST_OP_INTERSECT = 1,
  MST_OP_ADD = 2,
  MST_OP_SUBTRACT = 3
} mst_combine_op;

typedef enum mst_power_kind {
  MST_POWER_ALL = 0,
  MST_POWER_WHOLE = 1,
  MST_POWER_FULL = 2
} mst_power_kind;

typedef enum mst_semi_alg {
  MST_ALG_WITNESS = 0,
  MST_ALG_CRITERION = 1,
  MST_ALG_BOTH = 2
} mst_semi_alg;

typedef enum mst_filter {
  MST_FILTER_ANY = 0,
  MST_FILTER_WHOLE = 1,
  MST_FILTER_PARTIAL_WHOLE = 2,
  MST_FILTER_FULL = 3
} mst_filter;

typedef enum mst_variant {
  MST_COMPACT_SEMI = 0,
  MST_COMPACT_SEMI_WHOLE = 1,
  MST_COMPACT_SEMI_PARTIAL_WHOLE = 2,
  MST_COMPACT_SEMI_FULL = 3
} mst_variant;

typedef struct mst_subrel {
  int is_sub;
  int is_whole;
  int is_partial_whole;
  int is_full;
} mst_subrel;

typedef struct mst_gen_config {
  uint32_t max_domain;
  uint32_t max_w;
  uint64_t seed;
  double density;        /* 0 selects the default 0.35 */
  uint64_t family_budget; /* 0 selects the default */
} mst_gen_config;

MST_API int mst_abi_version(void);
MST_API const char* mst_status_name(mst_status status);
MST_API const char* mst_last_error(void);
MST_API void mst_string_free(char* text);

/* --- spaces ------------------------------------------------------------ */

MST_API mst_status mst_space_new(const char* const* symbols, size_t count,
                                 unsigned bound, mst_space** out);
MST_API void mst_space_free(mst_space* space);
MST_API size_t mst_space_size(const mst_space* space);
MST_API unsigned mst_space_bound(const mst_space* space);
/* Borrowed; NULL when index is out of range. */
MST_API const char* mst_space_symbol(const mst_space* space, size_t index);

/* --- M-sets ------------------------------------------------------------ */

/* Canonical text form, e.g. "{5/a, 2/b, 3/c}"; "{}" is the empty M-set. */
MST_API mst_status mst_mset_parse(const mst_space* space, const char* text,
                                  mst_mset** out);
MST_API mst_status mst_mset_from_counts(const mst_space* space, const unsigned* counts,
                                        size_t count, mst_mset** out);
MST_API mst_status mst_mset_format(const mst_mset* mset, char** out);
MST_API mst_status mst_mset_count(const mst_mset* mset, size_t index, unsigned* out);
MST_API mst_status mst_mset_equal(const mst_mset* a, const mst_mset* b, int* out);
MST_API mst_status mst_mset_subset(const mst_mset* a, const mst_mset* b, int* out);
MST_API void mst_mset_free(mst_mset* mset);

MST_API mst_status mst_combine(mst_combine_op op, const mst_mset* a, const mst_mset* b,
                               mst_mset** out);
MST_API mst_status mst_classify_sub(const mst_mset* n, const mst_mset* m,
                                    mst_subrel* out);
MST_API mst_status mst_complement_in(const mst_mset* n, const mst_mset* m,
                                     mst_mset** out);
MST_API mst_status mst_power_family(const mst_mset* m, mst_power_kind kind,
                                    uint64_t budget, mst_family** out);

/* --- families ----------------------------------------------------------- */

MST_API mst_status mst_family_new(const mst_space* space, mst_family** out);
MST_API mst_status mst_family_push(mst_family* family, const mst_mset* member);
MST_API size_t mst_family_size(const mst_family* family);
/* Borrowed element pointer; valid until the family is pushed to or freed. */
MST_API mst_status mst_family_get(const mst_family* family, size_t index,
                                  const mst_mset** out);
MST_API void mst_family_free(mst_family* family);

/* --- topologies ---------------------------------------------------------- */

/* Topology file schema:
 *   {"domain": ["a","b"], "w": 2, "M": {"a":1}, "tau": [{}, {"a":1}]}  */
MST_API mst_status mst_topology_load(const char* json_text, mst_topology** out);
/* Always produces a validation report when the file parses; "valid" tells
 * whether the family is an M-topology. */
MST_API mst_status mst_validate_json(const char* json_text, char** report_json);
MST_API mst_status mst_topology_to_json(const mst_topology* top, char** out);
/* Borrowed. */
MST_API mst_status mst_topology_ground(const mst_topology* top, const mst_mset** out);
MST_API const mst_space* mst_topology_space(const mst_topology* top);
MST_API mst_status mst_topology_opens(const mst_topology* top, mst_family** out);
MST_API void mst_topology_free(mst_topology* top);

MST_API mst_status mst_interior(const mst_topology* top, const mst_mset* a,
                                mst_mset** out);
MST_API mst_status mst_closure(const mst_topology* top, const mst_mset* a,
                               mst_mset** out);
MST_API mst_status mst_subspace(const mst_topology* top, const mst_mset* n,
                                mst_topology** out);

/* Basis file schema: like a topology file with "basis" instead of "tau". */
MST_API mst_status mst_basis_validate(const char* json_text, char** report_json);
MST_API mst_status mst_topology_from_basis(const char* json_text, mst_topology** out);

/* --- semi-open / semi-closed machinery ----------------------------------- */

/* witness_out may be NULL; when non-NULL and the test holds it receives the
 * open (resp. closed) witness set. */
MST_API mst_status mst_is_semi_open(const mst_topology* top, const mst_mset* s,
                                    mst_semi_alg alg, int* holds, mst_mset** witness_out);
MST_API mst_status mst_is_semi_closed(const mst_topology* top, const mst_mset* s,
                                      mst_semi_alg alg, int* holds, mst_mset** witness_out);

MST_API mst_status mst_semi_new(const mst_topology* top, uint64_t budget, mst_semi** out);
MST_API mst_status mst_semi_som(const mst_semi* semi, mst_family** out);
MST_API mst_status mst_semi_scm(const mst_semi* semi, mst_family** out);
MST_API mst_status mst_semi_interior(const mst_semi* semi, const mst_mset* a,
                                     mst_mset** out);
MST_API mst_status mst_semi_closure(const mst_semi* semi, const mst_mset* a,
                                    mst_mset** out);
MST_API mst_status mst_checklist(const mst_semi* semi, const mst_mset* a,
                                 char** report_json);
MST_API void mst_semi_free(mst_semi* semi);

/* --- covers, compactness, FIP -------------------------------------------- */

MST_API mst_status mst_is_semi_open_cover(const mst_semi* semi, const mst_family* members,
                                          int* out);
MST_API mst_status mst_find_subcover(const mst_semi* semi, const mst_family* cover,
                                     mst_filter filter, uint64_t budget, int* found,
                                     mst_family** out);
MST_API mst_status mst_decide_compactness(const mst_semi* semi, mst_variant variant,
                                          uint64_t budget, int* holds,
                                          char** verdict_json);
MST_API mst_status mst_has_fip(const mst_family* family, int* out);
MST_API mst_status mst_check_fip_scm(const mst_semi* semi, uint64_t collection_budget,
                                     uint64_t seed, int* agree, char** report_json);
MST_API mst_status mst_check_fip_scl(const mst_semi* semi, uint64_t collection_budget,
                                     uint64_t family_budget, uint64_t seed, int* agree,
                                     char** report_json);
MST_API mst_status mst_subspace_compact_equiv(const mst_topology* top, const mst_mset* n,
                                              const mst_mset* a, uint64_t collection_budget,
                                              uint64_t family_budget, uint64_t seed,
                                              int* agree, char** report_json);

/* --- harness -------------------------------------------------------------- */

MST_API mst_status mst_generate_topology(const mst_gen_config* config, uint64_t trial,
                                         mst_topology** out);

/* Called once per enumerated topology; return nonzero to stop early. */
typedef int (*mst_topology_cb)(const mst_topology* top, void* user);
MST_API mst_status mst_enumerate_topologies(const mst_mset* ground, int power_budget,
                                            mst_topology_cb callback, void* user);

/* JSON arrays of the recognized claim / remark ids. */
MST_API mst_status mst_claim_list(char** out);
MST_API mst_status mst_remark_list(char** out);

/* Corpus schema:
 *   {"kind":"exhaustive","domain":2,"w":1}
 *   {"kind":"random","domain":3,"w":3,"trials":500,"seed":42,"density":0.35}
 *   {"kind":"sweep","domain":3,"w":5,"trials":100,"seed":7}
 *   {"kind":"fixture","topology":{...topology file...}}
 * ok is 1 when the claim reports zero violations. */
MST_API mst_status mst_verify(const char* claim, const char* corpus_json,
                              int include_timing, int* ok, char** report_json);
/* found is 1 when a witness (3.7, 3.13) or any iff surprise (3.8) turned up. */
MST_API mst_status mst_mine(const char* remark, const char* corpus_json,
                            int include_timing, int* found, char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* MSETTOP_H */
