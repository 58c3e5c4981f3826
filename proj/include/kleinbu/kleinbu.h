/* C interface to the P2(K^2) engine and Borsuk-Ulam classifier.
 *
 * Every fallible call returns a kbu_status. On failure, kbu_last_error()
 * returns a message for the calling thread, valid until its next call.
 * Strings returned through char** are owned by the caller and released with
 * kbu_string_free(); handles are released with their *_free function.
 */
#ifndef KLEINBU_KLEINBU_H
#define KLEINBU_KLEINBU_H

#include <stdint.h>

#if defined(_WIN32)
#define KBU_API __declspec(dllexport)
#else
#define KBU_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kbu_status {
  KBU_OK = 0,
  KBU_ERR_PARSE = 1,
  KBU_ERR_NON_COMMUTING = 2,
  KBU_ERR_NOT_IN_KERNEL = 3,
  KBU_ERR_NOT_IN_SIGMA = 4,
  KBU_ERR_PRECONDITION = 5,
  KBU_ERR_ZERO_INPUT = 6,
  KBU_ERR_OVERFLOW = 7,
  KBU_ERR_NULL_ARG = 8,
  KBU_ERR_INTERNAL = 9
} kbu_status;

KBU_API const char* kbu_last_error(void);
KBU_API const char* kbu_status_name(kbu_status s);
KBU_API void kbu_string_free(char* s);

/* Reduced words in F(u,v). Text form: "u v^-1 B", "1" for the identity. */
typedef struct kbu_word kbu_word;

KBU_API kbu_status kbu_word_parse(const char* text, kbu_word** out);
KBU_API kbu_status kbu_word_mul(const kbu_word* a, const kbu_word* b, kbu_word** out);
KBU_API kbu_status kbu_word_inv(const kbu_word* a, kbu_word** out);
KBU_API kbu_status kbu_word_format(const kbu_word* a, char** out);
KBU_API int kbu_word_equal(const kbu_word* a, const kbu_word* b);
KBU_API void kbu_word_free(kbu_word* a);

/* Elements of P2(K^2). Text form: "(word; m, n)". */
typedef struct kbu_p2 kbu_p2;

KBU_API kbu_status kbu_p2_parse(const char* text, kbu_p2** out);
KBU_API kbu_status kbu_p2_mul(const kbu_p2* a, const kbu_p2* b, kbu_p2** out);
KBU_API kbu_status kbu_p2_inv(const kbu_p2* a, kbu_p2** out);
KBU_API kbu_status kbu_p2_lsigma(const kbu_p2* a, kbu_p2** out);
KBU_API kbu_status kbu_p2_format(const kbu_p2* a, char** out);
KBU_API int kbu_p2_equal(const kbu_p2* a, const kbu_p2* b);
KBU_API void kbu_p2_free(kbu_p2* a);

/* Reports. f10 and f01 are "(m,n)" images of (1,0) and (0,1); json != 0
 * selects JSON output. */
KBU_API kbu_status kbu_classify(const char* f10, const char* f01, int json, char** out);
KBU_API kbu_status kbu_witness(const char* f10, const char* f01, int json, char** out);
KBU_API kbu_status kbu_verify_witness(const char* f10, const char* f01, const char* a,
                                      const char* b, int json, char** out);
/* B-basis factorization and abelianization (JSON) of a word in ker g. */
KBU_API kbu_status kbu_rewrite(const char* word, char** out);
KBU_API kbu_status kbu_abelianize(const char* word, char** out);
KBU_API kbu_status kbu_eval(const char* expr, char** out);

typedef struct kbu_selftest_config {
  uint64_t seed;
  int64_t cases;
  int64_t word_len;
  int64_t pi1k_bound;
  int64_t p2_bound;
  int64_t kerg_bound;
  int64_t buc_bound;
  int mutant; /* nonzero: run the theta suites against a corrupted theta */
} kbu_selftest_config;

KBU_API void kbu_selftest_config_default(kbu_selftest_config* cfg);
/* *passed is set to 1 when every suite passes; *report gets the table. */
KBU_API kbu_status kbu_selftest(const kbu_selftest_config* cfg, int* passed, char** report);

#ifdef __cplusplus
}
#endif

#endif
