// kleinbu: command-line front end. Talks to the engine only through the C API.
//
// Exit codes: 0 ok, 1 parse error, 2 semantic precondition failure,
// 3 selftest failure.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <kleinbu/kleinbu.h>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitSemantic = 2;
constexpr int kExitSelftest = 3;

int exit_code_for(kbu_status s) {
  if (s == KBU_OK) return kExitOk;
  return s == KBU_ERR_PARSE ? kExitParse : kExitSemantic;
}

// Runs a report call and prints its output.
template <class F>
int emit(F&& call) {
  char* out = nullptr;
  const kbu_status s = call(&out);
  if (s != KBU_OK) {
    std::fprintf(stderr, "error: %s\n", kbu_last_error());
    return exit_code_for(s);
  }
  std::fputs(out, stdout);
  kbu_string_free(out);
  return kExitOk;
}

std::optional<uint64_t> parse_seed(const char* text) {
  try {
    size_t used = 0;
    const std::string s(text);
    const unsigned long long v = std::stoull(s, &used, 10);
    if (used != s.size() || s.empty() || s[0] == '-') return std::nullopt;
    return v;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic in P2(K^2) and Borsuk-Ulam classification of maps T^2 -> K^2"};
  app.require_subcommand(1);

  std::string f10, f01, a_text, b_text, word, expr;
  bool json = false;
  std::function<int()> run;

  auto add_hom = [&](CLI::App* sub) {
    sub->add_option("--f10", f10, "image of (1,0), e.g. \"(2,2)\"")->required();
    sub->add_option("--f01", f01, "image of (0,1), e.g. \"(4,0)\"")->required();
    sub->add_flag("--json", json, "JSON output");
  };

  auto* classify = app.add_subcommand("classify", "normal form and Borsuk-Ulam verdict");
  add_hom(classify);
  classify->callback([&] {
    run = [&] {
      return emit([&](char** out) { return kbu_classify(f10.c_str(), f01.c_str(), json, out); });
    };
  });

  auto* witness = app.add_subcommand("witness", "witness pair (a,b) for a non-BU class");
  add_hom(witness);
  witness->callback([&] {
    run = [&] {
      return emit([&](char** out) { return kbu_witness(f10.c_str(), f01.c_str(), json, out); });
    };
  });

  auto* verify = app.add_subcommand("verify-witness", "check a candidate pair (a,b)");
  add_hom(verify);
  verify->add_option("--a", a_text, "P2 element \"(word; m, n)\"")->required();
  verify->add_option("--b", b_text, "P2 element \"(word; m, n)\"")->required();
  verify->callback([&] {
    run = [&] {
      return emit([&](char** out) {
        return kbu_verify_witness(f10.c_str(), f01.c_str(), a_text.c_str(), b_text.c_str(), json, out);
      });
    };
  });

  auto* rewrite = app.add_subcommand("rewrite", "factor a word of ker g in the B[k,l] basis");
  rewrite->add_option("word", word, "word, e.g. \"v B v^-1\"")->required();
  rewrite->callback([&] {
    run = [&] {
      return emit([&](char** out) { return kbu_rewrite(word.c_str(), out); });
    };
  });

  auto* abelianize = app.add_subcommand("abelianize", "abelianization of a word of ker g (JSON)");
  abelianize->add_option("word", word, "word in ker g")->required();
  abelianize->callback([&] {
    run = [&] {
      return emit([&](char** out) { return kbu_abelianize(word.c_str(), out); });
    };
  });

  auto* eval = app.add_subcommand("eval", "evaluate mul/inv/lsigma/theta[m,n]/rho expressions");
  eval->add_option("expr", expr, "expression, e.g. \"lsigma (B; 0, 0)\"")->required();
  eval->callback([&] {
    run = [&] {
      return emit([&](char** out) { return kbu_eval(expr.c_str(), out); });
    };
  });

  kbu_selftest_config cfg;
  kbu_selftest_config_default(&cfg);
  std::optional<uint64_t> seed_flag;
  bool mutant = false;
  auto* selftest = app.add_subcommand("selftest", "replay every invariant suite");
  selftest->add_option("--seed", seed_flag, "RNG seed (default: $KLEIN_BU_SEED, else 42)");
  selftest->add_option("--cases", cfg.cases, "random cases per property")->check(CLI::PositiveNumber);
  selftest->add_option("--word-len", cfg.word_len, "max syllables of random words")->check(CLI::PositiveNumber);
  selftest->add_option("--pi1k-bound", cfg.pi1k_bound, "bound for Z x| Z elements")->check(CLI::PositiveNumber);
  selftest->add_option("--p2-bound", cfg.p2_bound, "bound for theta and P2 parameters")->check(CLI::PositiveNumber);
  selftest->add_option("--kerg-bound", cfg.kerg_bound, "bound for B[k,l] indices")->check(CLI::PositiveNumber);
  selftest->add_option("--buc-bound", cfg.buc_bound, "bound for obstruction grids")->check(CLI::PositiveNumber);
  selftest->add_flag("--mutant", mutant)->group("");
  selftest->callback([&] {
    run = [&] {
      if (seed_flag) {
        cfg.seed = *seed_flag;
      } else if (const char* env = std::getenv("KLEIN_BU_SEED"); env && *env) {
        const auto s = parse_seed(env);
        if (!s) {
          std::fprintf(stderr, "error: KLEIN_BU_SEED is not a non-negative integer: %s\n", env);
          return kExitParse;
        }
        cfg.seed = *s;
      }
      cfg.mutant = mutant ? 1 : 0;
      int passed = 0;
      char* report = nullptr;
      const kbu_status st = kbu_selftest(&cfg, &passed, &report);
      if (st != KBU_OK) {
        std::fprintf(stderr, "error: %s\n", kbu_last_error());
        return exit_code_for(st);
      }
      std::printf("seed %llu, %lld cases\n", static_cast<unsigned long long>(cfg.seed),
                  static_cast<long long>(cfg.cases));
      std::fputs(report, stdout);
      kbu_string_free(report);
      return passed ? kExitOk : kExitSelftest;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }
  return run ? run() : kExitParse;
}
