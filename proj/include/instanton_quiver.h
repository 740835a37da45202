/*
 * Copyright 2026 The instanton-quiver Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef INSTANTON_QUIVER_H
#define INSTANTON_QUIVER_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(IQ_BUILDING_LIBRARY)
#define IQ_API __attribute__((visibility("default")))
#else
#define IQ_API
#endif

/* Every function returning iq_status leaves outputs untouched on failure and
 * records a message retrievable with iq_last_error() on the calling thread.
 * Rationals cross the boundary as strings "p" or "p/q". Strings returned
 * through char** are owned by the caller and released with iq_string_free. */

typedef enum iq_status {
  IQ_OK = 0,
  IQ_ERR_PARSE = 1,
  IQ_ERR_SHAPE = 2,
  IQ_ERR_RELATIONS = 3,
  IQ_ERR_NOT_GLOBALLY_SURJECTIVE = 4,
  IQ_ERR_GENERATION_FAILED = 5,
  IQ_ERR_INVALID_ARGUMENT = 6,
  IQ_ERR_IO = 7,
  IQ_ERR_INTERNAL = 8
} iq_status;

typedef struct iq_rep iq_rep;
typedef struct iq_monad iq_monad;
typedef struct iq_chambers iq_chambers;

IQ_API const char* iq_version(void);
IQ_API const char* iq_status_name(iq_status s);
IQ_API const char* iq_last_error(void);
/* 1-based line of the last IQ_ERR_PARSE, 0 otherwise. */
IQ_API size_t iq_last_error_line(void);
IQ_API void iq_string_free(char* s);

/* ---- files ------------------------------------------------------------ */

typedef enum iq_file_kind { IQ_FILE_QREP = 0, IQ_FILE_MONAD = 1, IQ_FILE_UNKNOWN = 2 } iq_file_kind;

IQ_API iq_status iq_read_text_file(const char* path, char** out_text);
IQ_API iq_status iq_write_text_file(const char* path, const char* text);
IQ_API iq_file_kind iq_detect_file_kind(const char* text);

/* ---- representations -------------------------------------------------- */

IQ_API iq_status iq_rep_parse(const char* text, iq_rep** out);
IQ_API iq_status iq_rep_serialize(const iq_rep* r, char** out_text);
IQ_API iq_status iq_rep_clone(const iq_rep* r, iq_rep** out);
IQ_API void iq_rep_free(iq_rep* r);
IQ_API void iq_rep_dim(const iq_rep* r, size_t out_dim[3]);
IQ_API int iq_rep_equal(const iq_rep* a, const iq_rep* b);
/* Charge-1 representation of the P^5 point [a:b:c:d:e:f]. */
IQ_API iq_status iq_rep_from_p5_point(const char* const coords[6], iq_rep** out);

typedef enum iq_charge1_sample {
  IQ_SAMPLE_LOCALLY_FREE = 0,
  IQ_SAMPLE_GLOBALLY_SURJECTIVE_RANK2 = 1,
  IQ_SAMPLE_GLOBALLY_INJECTIVE_RANK2 = 2,
  IQ_SAMPLE_DOUBLY_DEGENERATE = 3
} iq_charge1_sample;

/* Seeded random charge-1 representation of the class, randomly gauged. */
IQ_API iq_status iq_rep_sample_charge1(iq_charge1_sample cls, uint64_t seed, iq_rep** out);

typedef struct iq_relation_report {
  int holds;
  size_t i; /* first failing pair when !holds */
  size_t j;
} iq_relation_report;

IQ_API iq_status iq_check_relations(const iq_rep* r, iq_relation_report* out);

typedef enum iq_answer { IQ_ANSWER_YES = 0, IQ_ANSWER_NO = 1, IQ_ANSWER_PROBABLY_YES = 2 } iq_answer;

typedef struct iq_verdict {
  iq_answer answer;
  unsigned rounds;
  int has_certificate;
} iq_verdict;

typedef struct iq_pencil_report {
  iq_verdict globally_injective;
  iq_verdict locally_injective;
  iq_verdict globally_surjective;
  iq_verdict locally_surjective;
} iq_pencil_report;

IQ_API iq_status iq_rep_pencil_report(const iq_rep* r, uint64_t seed, iq_pencil_report* out);
IQ_API iq_status iq_hom_space_dim(const iq_rep* a, const iq_rep* b, size_t* out);

typedef enum iq_search_result { IQ_SEARCH_YES = 0, IQ_SEARCH_NO = 1, IQ_SEARCH_UNKNOWN = 2 } iq_search_result;

/* Subrepresentation of dimension `dim`; *out_verified reports an exact
 * re-check of the witness when the answer is Yes. */
IQ_API iq_status iq_subrep_exists(const iq_rep* r, const size_t dim[3], uint64_t seed, iq_search_result* out,
                                  int* out_verified);

/* ---- monads ----------------------------------------------------------- */

IQ_API iq_status iq_monad_parse(const char* text, iq_monad** out);
IQ_API iq_status iq_monad_serialize(const iq_monad* m, char** out_text);
IQ_API void iq_monad_free(iq_monad* m);
IQ_API size_t iq_monad_charge(const iq_monad* m);
IQ_API int iq_monad_equal(const iq_monad* a, const iq_monad* b);
IQ_API iq_status iq_functor_F(const iq_monad* m, iq_rep** out);
IQ_API iq_status iq_functor_F_inverse(const iq_rep* r, iq_monad** out);

typedef enum iq_sheaf_type {
  IQ_SHEAF_LOCALLY_FREE = 0,
  IQ_SHEAF_TORSION_FREE_NOT_LF = 1,
  IQ_SHEAF_NOT_INSTANTON = 2,
  IQ_SHEAF_UNDETERMINED = 3
} iq_sheaf_type;

typedef struct iq_diagnosis {
  iq_verdict beta_surjective_everywhere;
  iq_verdict alpha_injective_everywhere;
  iq_verdict alpha_fail_codim2;
  iq_sheaf_type sheaf_type;
} iq_diagnosis;

IQ_API iq_status iq_monad_diagnose(const iq_monad* m, uint64_t seed, iq_diagnosis* out);
IQ_API const char* iq_sheaf_type_name(iq_sheaf_type t);

typedef enum iq_instanton_kind {
  IQ_KIND_LOCALLY_FREE = 0,
  IQ_KIND_TORSION_FREE = 1,
  IQ_KIND_ANY = 2
} iq_instanton_kind;

/* IQ_ERR_GENERATION_FAILED when no attempt is accepted; *out_attempts (may
 * be NULL) receives the number of attempts made in that case. */
IQ_API iq_status iq_generate_instanton(size_t n, iq_instanton_kind kind, uint64_t seed, unsigned max_attempts,
                                       iq_monad** out, unsigned* out_attempts);

/* ---- stability -------------------------------------------------------- */

typedef enum iq_stability { IQ_STABLE = 0, IQ_SEMISTABLE_ONLY = 1, IQ_UNSTABLE = 2 } iq_stability;

typedef struct iq_stability_result {
  iq_stability kind;
  int has_certificate;
  size_t certificate[3];
  char* max_value; /* max theta . s over the subrep dimension vectors */
} iq_stability_result;

IQ_API void iq_stability_result_clear(iq_stability_result* r);
IQ_API const char* iq_stability_name(iq_stability s);

/* Exact verdict for a (1,4,1) representation. */
IQ_API iq_status iq_stability_charge1(const iq_rep* r, const char* alpha, const char* gamma,
                                      iq_stability_result* out);

typedef struct iq_heuristic_result {
  int certified_unstable;
  size_t certificate[3];
  int certificate_verified;
  size_t subreps_examined;
  int negative_on_candidates;
  int has_candidate_violation;
  size_t candidate_violation[3];
  char* max_value; /* over the sampled subreps; "0" when none */
} iq_heuristic_result;

IQ_API void iq_heuristic_result_clear(iq_heuristic_result* r);

/* Necessary-condition analysis for dimension vectors (n, 2n+2, n). */
IQ_API iq_status iq_stability_heuristic(const iq_rep* r, const char* alpha, const char* gamma, uint64_t seed,
                                        iq_heuristic_result* out);

typedef enum iq_charge1_kind {
  IQ_C1_LOCALLY_FREE_INSTANTON = 0,
  IQ_C1_NON_LOCALLY_FREE_INSTANTON = 1,
  IQ_C1_PERVERSE_DUAL = 2,
  IQ_C1_NOT_STABLE_HERE = 3,
  IQ_C1_EMPTY_REGION = 4,
  IQ_C1_STRICTLY_SEMISTABLE = 5
} iq_charge1_kind;

typedef enum iq_charge1_region {
  IQ_REGION_Q4_BELOW_WALL = 0,
  IQ_REGION_Q4_ABOVE_WALL = 1,
  IQ_REGION_WALL = 2,
  IQ_REGION_OUTSIDE_Q4 = 3
} iq_charge1_region;

typedef struct iq_classification {
  iq_charge1_kind kind;
  iq_charge1_region region;
  iq_stability_result verdict;
  size_t rank_m;
  size_t rank_n;
  int has_skew_form;
  char* skew_form; /* "[a:b:c:d:e:f]", normalized */
  char* pfaffian;  /* of the normalized form */
  int on_quadric;
} iq_classification;

IQ_API void iq_classification_clear(iq_classification* c);
IQ_API const char* iq_charge1_kind_name(iq_charge1_kind k);
IQ_API const char* iq_charge1_region_name(iq_charge1_region r);
IQ_API iq_status iq_classify_charge1(const iq_rep* r, const char* alpha, const char* gamma,
                                     iq_classification* out);

/* theta_eps = (eps, (1 - eps) n / (2n+2), -1) against every candidate
 * dimension vector of charge n. */
IQ_API iq_status iq_verify_theta_eps(size_t n, const char* eps, int* out_ok, size_t out_counterexample[3]);

/* ---- walls and chambers ----------------------------------------------- */

IQ_API iq_status iq_chambers_compute(size_t n, iq_chambers** out);
IQ_API void iq_chambers_free(iq_chambers* c);
IQ_API size_t iq_chambers_wall_count(const iq_chambers* c);
/* Direction "(alpha,gamma)" of wall i. */
IQ_API iq_status iq_chambers_wall_direction(const iq_chambers* c, size_t i, char** out);
IQ_API size_t iq_chambers_wall_generator_count(const iq_chambers* c, size_t i);
IQ_API iq_status iq_chambers_wall_generator(const iq_chambers* c, size_t i, size_t k, size_t out_dim[3]);
IQ_API size_t iq_chambers_chamber_count(const iq_chambers* c);
/* Bounding rays and sample point of chamber i, each as "(alpha,gamma)". */
IQ_API iq_status iq_chambers_chamber(const iq_chambers* c, size_t i, char** out_from, char** out_to,
                                     char** out_sample);

/* Interior walls of the charge-1 stability regions of the given reps, one
 * "(alpha,gamma)" per line; empty string when there are none. */
IQ_API iq_status iq_effective_walls_charge1(const iq_rep* const* reps, size_t count, char** out);

/* SVG of the charge-1 regions; overlay (may be NULL) adds the stability
 * region of a (1,4,1) representation. */
IQ_API iq_status iq_render_svg(const iq_rep* overlay, char** out_svg);

#ifdef __cplusplus
}
#endif

#endif /* INSTANTON_QUIVER_H */
