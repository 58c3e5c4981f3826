#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "kerg.hpp"
#include "p2.hpp"
#include "pi1k.hpp"
#include "word.hpp"

// Text forms used by the CLI and the C API. All parsers throw ParseError.
namespace kbu {

/// word := term (WS term)* | "1";  term := (u|v|B) ("^" INT)?
FreeWord parse_word(std::string_view s);
std::string format_word(const FreeWord& w);

/// "(m,n)"
Pi1K parse_pi1k(std::string_view s);
std::string format_pi1k(const Pi1K& q);

/// "(word; m, n)"
P2Elem parse_p2(std::string_view s);
std::string format_p2(const P2Elem& e);

/// "B[k,l]^e ..." or "1"
BBasisWord parse_bbasis(std::string_view s);
std::string format_bbasis(const BBasisWord& w);

/// JSON array of {"k","l","c"} sorted by (k,l).
std::string format_abkerg_json(const AbKerG& x);
AbKerG parse_abkerg_json(std::string_view s);

/// Result of eval: a bare word or an element of P2.
using EvalValue = std::variant<FreeWord, P2Elem>;

/// Prefix expressions:
///   expr := "mul" expr expr | "inv" expr | "lsigma" expr | "rho" expr
///         | "theta[" INT "," INT "]" expr | "(" word ";" INT "," INT ")"
///         | "(" expr ")" | word
/// Bare words consume terms greedily. mul/inv keep words as words; mixing a
/// word with a P2 element promotes the word to (w;0,0). theta and rho act on
/// words only (Error(PreconditionFail) otherwise).
EvalValue eval_expr(std::string_view s);
std::string format_value(const EvalValue& v);

}  // namespace kbu
