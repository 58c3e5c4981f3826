#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include <kleinbu/kleinbu.h>

#include "commands.hpp"
#include "p2.hpp"
#include "selftest.hpp"
#include "text.hpp"

struct kbu_word {
  kbu::FreeWord w;
};

struct kbu_p2 {
  kbu::P2Elem e;
};

namespace {

thread_local std::string g_last_error;

kbu_status status_of(kbu::ErrorKind k) {
  switch (k) {
    case kbu::ErrorKind::Parse: return KBU_ERR_PARSE;
    case kbu::ErrorKind::NonCommuting: return KBU_ERR_NON_COMMUTING;
    case kbu::ErrorKind::NotInKernel: return KBU_ERR_NOT_IN_KERNEL;
    case kbu::ErrorKind::NotInSigma: return KBU_ERR_NOT_IN_SIGMA;
    case kbu::ErrorKind::PreconditionFail: return KBU_ERR_PRECONDITION;
    case kbu::ErrorKind::ZeroInput: return KBU_ERR_ZERO_INPUT;
    case kbu::ErrorKind::Overflow: return KBU_ERR_OVERFLOW;
  }
  return KBU_ERR_INTERNAL;
}

kbu_status fail(kbu_status s, std::string msg) {
  g_last_error = std::move(msg);
  return s;
}

template <class F>
kbu_status guard(F&& f) {
  try {
    f();
    g_last_error.clear();
    return KBU_OK;
  } catch (const kbu::Error& e) {
    return fail(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(KBU_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(KBU_ERR_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

bool any_null() { return false; }
template <class T, class... Rest>
bool any_null(const T* p, const Rest*... rest) {
  return p == nullptr || any_null(rest...);
}

kbu_status null_arg() { return fail(KBU_ERR_NULL_ARG, "null argument"); }

template <class F>
kbu_status string_call(char** out, F&& f) {
  if (!out) return null_arg();
  *out = nullptr;
  return guard([&] { *out = dup(f()); });
}

}  // namespace

extern "C" {

const char* kbu_last_error(void) { return g_last_error.c_str(); }

const char* kbu_status_name(kbu_status s) {
  switch (s) {
    case KBU_OK: return "ok";
    case KBU_ERR_PARSE: return "parse error";
    case KBU_ERR_NON_COMMUTING: return "images do not commute";
    case KBU_ERR_NOT_IN_KERNEL: return "word not in ker g";
    case KBU_ERR_NOT_IN_SIGMA: return "class not in the witness table";
    case KBU_ERR_PRECONDITION: return "precondition failed";
    case KBU_ERR_ZERO_INPUT: return "zero input";
    case KBU_ERR_OVERFLOW: return "integer overflow";
    case KBU_ERR_NULL_ARG: return "null argument";
    case KBU_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void kbu_string_free(char* s) { std::free(s); }

// ---------------------------------------------------------------------------
// Words

kbu_status kbu_word_parse(const char* text, kbu_word** out) {
  if (any_null(text, out)) return null_arg();
  return guard([&] { *out = new kbu_word{kbu::parse_word(text)}; });
}

kbu_status kbu_word_mul(const kbu_word* a, const kbu_word* b, kbu_word** out) {
  if (any_null(a, b, out)) return null_arg();
  return guard([&] { *out = new kbu_word{a->w * b->w}; });
}

kbu_status kbu_word_inv(const kbu_word* a, kbu_word** out) {
  if (any_null(a, out)) return null_arg();
  return guard([&] { *out = new kbu_word{kbu::w_inv(a->w)}; });
}

kbu_status kbu_word_format(const kbu_word* a, char** out) {
  if (!a) return null_arg();
  return string_call(out, [&] { return kbu::format_word(a->w); });
}

int kbu_word_equal(const kbu_word* a, const kbu_word* b) { return a && b && a->w == b->w; }

void kbu_word_free(kbu_word* a) { delete a; }

// ---------------------------------------------------------------------------
// P2 elements

kbu_status kbu_p2_parse(const char* text, kbu_p2** out) {
  if (any_null(text, out)) return null_arg();
  return guard([&] { *out = new kbu_p2{kbu::parse_p2(text)}; });
}

kbu_status kbu_p2_mul(const kbu_p2* a, const kbu_p2* b, kbu_p2** out) {
  if (any_null(a, b, out)) return null_arg();
  return guard([&] { *out = new kbu_p2{a->e * b->e}; });
}

kbu_status kbu_p2_inv(const kbu_p2* a, kbu_p2** out) {
  if (any_null(a, out)) return null_arg();
  return guard([&] { *out = new kbu_p2{kbu::p2_inv(a->e)}; });
}

kbu_status kbu_p2_lsigma(const kbu_p2* a, kbu_p2** out) {
  if (any_null(a, out)) return null_arg();
  return guard([&] { *out = new kbu_p2{kbu::l_sigma(a->e)}; });
}

kbu_status kbu_p2_format(const kbu_p2* a, char** out) {
  if (!a) return null_arg();
  return string_call(out, [&] { return kbu::format_p2(a->e); });
}

int kbu_p2_equal(const kbu_p2* a, const kbu_p2* b) { return a && b && a->e == b->e; }

void kbu_p2_free(kbu_p2* a) { delete a; }

// ---------------------------------------------------------------------------
// Reports

kbu_status kbu_classify(const char* f10, const char* f01, int json, char** out) {
  if (any_null(f10, f01)) return null_arg();
  return string_call(out, [&] { return kbu::cmd_classify(f10, f01, json != 0); });
}

kbu_status kbu_witness(const char* f10, const char* f01, int json, char** out) {
  if (any_null(f10, f01)) return null_arg();
  return string_call(out, [&] { return kbu::cmd_witness(f10, f01, json != 0); });
}

kbu_status kbu_verify_witness(const char* f10, const char* f01, const char* a, const char* b,
                              int json, char** out) {
  if (any_null(f10, f01, a, b)) return null_arg();
  return string_call(out, [&] { return kbu::cmd_verify_witness(f10, f01, a, b, json != 0); });
}

kbu_status kbu_rewrite(const char* word, char** out) {
  if (!word) return null_arg();
  return string_call(out, [&] { return kbu::cmd_rewrite(word); });
}

kbu_status kbu_abelianize(const char* word, char** out) {
  if (!word) return null_arg();
  return string_call(out, [&] { return kbu::cmd_abelianize(word); });
}

kbu_status kbu_eval(const char* expr, char** out) {
  if (!expr) return null_arg();
  return string_call(out, [&] { return kbu::cmd_eval(expr); });
}

// ---------------------------------------------------------------------------
// Selftest

void kbu_selftest_config_default(kbu_selftest_config* cfg) {
  if (!cfg) return;
  const kbu::SelftestConfig d;
  cfg->seed = d.seed;
  cfg->cases = d.cases;
  cfg->word_len = d.word_len;
  cfg->pi1k_bound = d.pi1k_bound;
  cfg->p2_bound = d.p2_bound;
  cfg->kerg_bound = d.kerg_bound;
  cfg->buc_bound = d.buc_bound;
  cfg->mutant = d.mutant ? 1 : 0;
}

kbu_status kbu_selftest(const kbu_selftest_config* cfg, int* passed, char** report) {
  if (any_null(cfg, passed)) return null_arg();
  *passed = 0;
  return string_call(report, [&] {
    kbu::SelftestConfig c;
    c.seed = cfg->seed;
    c.cases = cfg->cases;
    c.word_len = cfg->word_len;
    c.pi1k_bound = cfg->pi1k_bound;
    c.p2_bound = cfg->p2_bound;
    c.kerg_bound = cfg->kerg_bound;
    c.buc_bound = cfg->buc_bound;
    c.mutant = cfg->mutant != 0;
    const kbu::SelftestReport r = kbu::run_selftest(c);
    *passed = r.ok() ? 1 : 0;
    return r.format();
  });
}

}  // extern "C"
