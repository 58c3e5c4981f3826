#include "text.hpp"

#include <cctype>
#include <charconv>
#include <vector>

#include <json.hpp>

namespace kbu {

namespace {

struct Tok {
  enum Kind { Ident, Int, Sym, End } kind;
  std::string_view text;
  size_t pos;
};

std::vector<Tok> lex(std::string_view s) {
  std::vector<Tok> out;
  size_t i = 0;
  auto is_digit = [&](size_t j) { return j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])); };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < s.size() && (std::isalpha(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::Ident, s.substr(i, j - i), i});
      i = j;
    } else if (is_digit(i) || ((c == '-' || c == '+') && is_digit(i + 1))) {
      size_t j = i + 1;
      while (is_digit(j)) ++j;
      out.push_back({Tok::Int, s.substr(i, j - i), i});
      i = j;
    } else if (std::string_view("()[],;^").find(c) != std::string_view::npos) {
      out.push_back({Tok::Sym, s.substr(i, 1), i});
      ++i;
    } else {
      throw ParseError("unexpected character '" + std::string(1, c) + "' at offset " +
                       std::to_string(i));
    }
  }
  out.push_back({Tok::End, {}, s.size()});
  return out;
}

int64_t to_int(const Tok& t) {
  std::string_view d = t.text;
  if (!d.empty() && d[0] == '+') d.remove_prefix(1);
  int64_t v = 0;
  auto [p, ec] = std::from_chars(d.data(), d.data() + d.size(), v);
  if (ec != std::errc() || p != d.data() + d.size()) {
    throw ParseError("integer out of range: " + std::string(t.text));
  }
  return v;
}

class Parser {
 public:
  explicit Parser(std::string_view s) : toks_(lex(s)) {}

  const Tok& peek(size_t ahead = 0) const {
    return toks_[std::min(i_ + ahead, toks_.size() - 1)];
  }
  const Tok& next() {
    const Tok& t = toks_[i_];
    if (t.kind != Tok::End) ++i_;
    return t;
  }
  bool at_sym(char c) const { return peek().kind == Tok::Sym && peek().text[0] == c; }
  bool at_end() const { return peek().kind == Tok::End; }

  [[noreturn]] void fail(const std::string& what) const {
    const Tok& t = peek();
    throw ParseError(what + " at offset " + std::to_string(t.pos) +
                     (t.kind == Tok::End ? " (end of input)" : " near '" + std::string(t.text) + "'"));
  }

  void expect_sym(char c) {
    if (!at_sym(c)) fail(std::string("expected '") + c + "'");
    next();
  }
  void expect_end() {
    if (!at_end()) fail("trailing input");
  }
  int64_t expect_int() {
    if (peek().kind != Tok::Int) fail("expected integer");
    return to_int(next());
  }

  bool at_word_term() const {
    const Tok& t = peek();
    return t.kind == Tok::Ident && (t.text == "u" || t.text == "v" || t.text == "B");
  }
  bool at_word() const {
    return at_word_term() || (peek().kind == Tok::Int && peek().text == "1");
  }

  FreeWord word() {
    if (peek().kind == Tok::Int && peek().text == "1") {
      next();
      return {};
    }
    if (!at_word_term()) fail("expected word");
    std::vector<Syllable> stream;
    while (at_word_term()) {
      const std::string_view g = next().text;
      int64_t e = 1;
      if (at_sym('^')) {
        next();
        e = expect_int();
      }
      if (g == "B") {
        const FreeWord b = w_pow(word_B(), e);
        stream.insert(stream.end(), b.syllables().begin(), b.syllables().end());
      } else {
        stream.push_back({g == "u" ? Gen::U : Gen::V, e});
      }
    }
    return FreeWord::from_syllables(stream);
  }

  Pi1K pair_tail() {
    const int64_t m = expect_int();
    expect_sym(',');
    const int64_t n = expect_int();
    return {m, n};
  }

  // Called with the '(' already consumed.
  P2Elem p2_tail() {
    FreeWord w = word();
    expect_sym(';');
    const Pi1K q = pair_tail();
    expect_sym(')');
    return {std::move(w), q};
  }

  /// True when the parenthesis at the cursor encloses a top-level ';'.
  bool paren_is_literal() const {
    int depth = 0;
    for (size_t j = i_; j < toks_.size() && toks_[j].kind != Tok::End; ++j) {
      const Tok& t = toks_[j];
      if (t.kind != Tok::Sym) continue;
      if (t.text[0] == '(') ++depth;
      else if (t.text[0] == ')' && --depth == 0) return false;
      else if (t.text[0] == ';' && depth == 1) return true;
    }
    return false;
  }

  EvalValue expr();

 private:
  std::vector<Tok> toks_;
  size_t i_ = 0;
};

P2Elem promote(const EvalValue& v) {
  if (const auto* w = std::get_if<FreeWord>(&v)) return {*w, {}};
  return std::get<P2Elem>(v);
}

const FreeWord& need_word(const EvalValue& v, const char* op) {
  if (const auto* w = std::get_if<FreeWord>(&v)) return *w;
  throw Error(ErrorKind::PreconditionFail, std::string(op) + " takes a word, not a P2 element");
}

EvalValue Parser::expr() {
  if (at_sym('(')) {
    if (paren_is_literal()) {
      next();
      return p2_tail();
    }
    next();
    EvalValue v = expr();
    expect_sym(')');
    return v;
  }
  if (at_word()) return word();
  if (peek().kind != Tok::Ident) fail("expected expression");
  const std::string_view op = next().text;
  if (op == "mul") {
    EvalValue a = expr();
    EvalValue b = expr();
    if (std::holds_alternative<FreeWord>(a) && std::holds_alternative<FreeWord>(b)) {
      return std::get<FreeWord>(a) * std::get<FreeWord>(b);
    }
    return promote(a) * promote(b);
  }
  if (op == "inv") {
    EvalValue a = expr();
    if (const auto* w = std::get_if<FreeWord>(&a)) return w_inv(*w);
    return p2_inv(std::get<P2Elem>(a));
  }
  if (op == "lsigma") return l_sigma(promote(expr()));
  if (op == "rho") return rho(need_word(expr(), "rho"));
  if (op == "theta") {
    expect_sym('[');
    const Pi1K q = pair_tail();
    expect_sym(']');
    return theta(q, need_word(expr(), "theta"));
  }
  throw ParseError("unknown operator '" + std::string(op) + "'");
}

std::string term(char g, int64_t e) {
  std::string s(1, g);
  if (e != 1) s += "^" + std::to_string(e);
  return s;
}

}  // namespace

FreeWord parse_word(std::string_view s) {
  Parser p(s);
  FreeWord w = p.word();
  p.expect_end();
  return w;
}

std::string format_word(const FreeWord& w) {
  if (w.is_identity()) return "1";
  std::string out;
  for (const auto& syl : w.syllables()) {
    if (!out.empty()) out += ' ';
    out += term(syl.gen == Gen::U ? 'u' : 'v', syl.exp);
  }
  return out;
}

Pi1K parse_pi1k(std::string_view s) {
  Parser p(s);
  p.expect_sym('(');
  const Pi1K q = p.pair_tail();
  p.expect_sym(')');
  p.expect_end();
  return q;
}

std::string format_pi1k(const Pi1K& q) {
  return "(" + std::to_string(q.m) + "," + std::to_string(q.n) + ")";
}

P2Elem parse_p2(std::string_view s) {
  Parser p(s);
  p.expect_sym('(');
  P2Elem e = p.p2_tail();
  p.expect_end();
  return e;
}

std::string format_p2(const P2Elem& e) {
  return "(" + format_word(e.w) + "; " + std::to_string(e.q.m) + ", " + std::to_string(e.q.n) + ")";
}

BBasisWord parse_bbasis(std::string_view s) {
  Parser p(s);
  BBasisWord w;
  if (p.peek().kind == Tok::Int && p.peek().text == "1") {
    p.next();
    p.expect_end();
    return w;
  }
  do {
    if (p.peek().kind != Tok::Ident || p.peek().text != "B") p.fail("expected B[k,l]");
    p.next();
    p.expect_sym('[');
    const Pi1K kl = p.pair_tail();
    p.expect_sym(']');
    int64_t e = 1;
    if (p.at_sym('^')) {
      p.next();
      e = p.expect_int();
    }
    w.append(kl.m, kl.n, e);
  } while (!p.at_end());
  return w;
}

std::string format_bbasis(const BBasisWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& f : w.factors()) {
    if (!out.empty()) out += ' ';
    out += "B[" + std::to_string(f.k) + "," + std::to_string(f.l) + "]";
    if (f.exp != 1) out += "^" + std::to_string(f.exp);
  }
  return out;
}

std::string format_abkerg_json(const AbKerG& x) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& [key, c] : x.coeffs()) {
    arr.push_back({{"k", key.first}, {"l", key.second}, {"c", c}});
  }
  return arr.dump();
}

AbKerG parse_abkerg_json(std::string_view s) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(s);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
  if (!j.is_array()) throw ParseError("expected a JSON array");
  AbKerG x;
  for (const auto& item : j) {
    if (!item.is_object() || !item.contains("k") || !item.contains("l") || !item.contains("c") ||
        !item["k"].is_number_integer() || !item["l"].is_number_integer() ||
        !item["c"].is_number_integer()) {
      throw ParseError("expected objects with integer k, l, c");
    }
    x.add(item["k"].get<int64_t>(), item["l"].get<int64_t>(), item["c"].get<int64_t>());
  }
  return x;
}

EvalValue eval_expr(std::string_view s) {
  Parser p(s);
  EvalValue v = p.expr();
  p.expect_end();
  return v;
}

std::string format_value(const EvalValue& v) {
  if (const auto* w = std::get_if<FreeWord>(&v)) return format_word(*w);
  return format_p2(std::get<P2Elem>(v));
}

}  // namespace kbu
