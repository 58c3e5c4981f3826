#include "commands.hpp"

#include <json.hpp>

#include "buc.hpp"
#include "text.hpp"

namespace kbu {

namespace {

using ojson = nlohmann::ordered_json;

HomPair parse_hom(std::string_view f10, std::string_view f01) {
  return HomPair(parse_pi1k(f10), parse_pi1k(f01));
}

ojson nf_json(const HomNormalForm& nf) {
  ojson j;
  j["type"] = static_cast<int>(nf.type);
  if (nf.type == HomType::T4) {
    j["r1"] = nf.r1;
    j["s1"] = nf.s1;
    j["r2"] = nf.r2;
    j["s2"] = nf.s2;
  } else {
    j["i"] = nf.i;
    j["s1"] = nf.s1;
    j["s2"] = nf.s2;
  }
  return j;
}

std::string nf_text(const HomNormalForm& nf) {
  if (nf.type == HomType::T4) {
    return "r1=" + std::to_string(nf.r1) + " s1=" + std::to_string(nf.s1) +
           " r2=" + std::to_string(nf.r2) + " s2=" + std::to_string(nf.s2);
  }
  return "i=" + std::to_string(nf.i) + " s1=" + std::to_string(nf.s1) +
         " s2=" + std::to_string(nf.s2);
}

ojson classification_json(const Normalized& n, const BUVerdict& v) {
  ojson j;
  j["type"] = static_cast<int>(n.nf.type);
  j["normal_form"] = nf_json(n.nf);
  j["conjugator"] = {n.conjugator.m, n.conjugator.n};
  j["borsuk_ulam"] = v.has_bu;
  j["reason"] = reason_name(v.reason);
  return j;
}

std::string classification_text(const Normalized& n, const BUVerdict& v) {
  std::string out;
  out += "type: " + std::to_string(static_cast<int>(n.nf.type)) + "\n";
  out += "normal_form: " + nf_text(n.nf) + "\n";
  out += "conjugator: " + format_pi1k(n.conjugator) + "\n";
  out += std::string("borsuk_ulam: ") + (v.has_bu ? "true" : "false") + "\n";
  out += "reason: " + std::string(reason_name(v.reason)) + "\n";
  return out;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string cmd_classify(std::string_view f10, std::string_view f01, bool json) {
  const Normalized n = normalize_hom(parse_hom(f10, f01));
  const BUVerdict v = classify(n.nf);
  if (json) return classification_json(n, v).dump() + "\n";
  return classification_text(n, v);
}

std::string cmd_witness(std::string_view f10, std::string_view f01, bool json) {
  const HomPair h = parse_hom(f10, f01);
  const Normalized n = normalize_hom(h);
  const BUVerdict v = classify(n.nf);
  // The witness is built for the normal form and carried back to h.
  const WitnessPair wp = transport_witness(generate_witness(n.nf), k_inv(n.conjugator));
  const bool generated = wp.status == WitnessStatus::Generated;
  const bool verified = generated && verify_witness(h, wp.a, wp.b).all();

  if (json) {
    ojson j = classification_json(n, v);
    j["status"] = status_name(wp.status);
    j["a"] = generated ? ojson(format_p2(wp.a)) : ojson(nullptr);
    j["b"] = generated ? ojson(format_p2(wp.b)) : ojson(nullptr);
    j["verified"] = verified;
    return j.dump() + "\n";
  }
  std::string out = classification_text(n, v);
  out += "status: " + std::string(status_name(wp.status)) + "\n";
  if (generated) {
    out += "a: " + format_p2(wp.a) + "\n";
    out += "b: " + format_p2(wp.b) + "\n";
  }
  out += "verified: " + yes_no(verified) + "\n";
  return out;
}

std::string cmd_verify_witness(std::string_view f10, std::string_view f01, std::string_view a,
                               std::string_view b, bool json) {
  const HomPair h = parse_hom(f10, f01);
  const WitnessCheck c = verify_witness(h, parse_p2(a), parse_p2(b));
  if (json) {
    ojson j;
    j["cond_i"] = c.cond_i;
    j["cond_ii"] = c.cond_ii;
    j["cond_iii"] = c.cond_iii;
    j["certified"] = c.all();
    return j.dump() + "\n";
  }
  return "cond_i: " + yes_no(c.cond_i) + "\ncond_ii: " + yes_no(c.cond_ii) +
         "\ncond_iii: " + yes_no(c.cond_iii) + "\ncertified: " + yes_no(c.all()) + "\n";
}

std::string cmd_rewrite(std::string_view word) {
  return format_bbasis(to_b_basis(parse_word(word))) + "\n";
}

std::string cmd_abelianize(std::string_view word) {
  return format_abkerg_json(abelianize(to_b_basis(parse_word(word)))) + "\n";
}

std::string cmd_eval(std::string_view expr) { return format_value(eval_expr(expr)) + "\n"; }

}  // namespace kbu
