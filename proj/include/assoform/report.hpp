#pragma once

#include <string>

#include "assoform/milnor.hpp"
#include "assoform/poly.hpp"
#include "assoform/suites.hpp"
#include "json.hpp"

namespace assoform {

// nlohmann::json keeps object keys in a std::map, so dumps are key-sorted.
using Json = nlohmann::json;

inline Json to_json(const Rational& q) { return to_string(q); }

inline Json to_json(const Monomial& m) {
  Json exps = Json::array();
  for (std::size_t i = 0; i < m.nvars(); ++i) exps.push_back(m[i]);
  return exps;
}

/// {"text": ..., "terms": [{"coeff": "p/q", "exponents": [...]}, ...]} in
/// graded-lex order.
inline Json to_json(const Poly& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back({{"coeff", to_string(c)}, {"exponents", to_json(m)}});
  return {{"nvars", p.nvars()}, {"space", std::string(1, variable_letter(p.space()))}, {"terms", terms},
          {"text", render_poly(p)}};
}

inline Json to_json(const MuTable& mu) {
  Json out = Json::array();
  for (const auto& [m, v] : mu) out.push_back({{"exponents", to_json(m)}, {"value", to_string(v)}});
  return out;
}

inline Json to_json(const CaseResult& c) {
  Json j = {{"index", c.index}, {"input", c.input}, {"pass", c.pass}, {"rejections", c.rejections}};
  if (!c.pass) j["detail"] = c.detail;
  return j;
}

/// Passing cases are summarized; failing inputs are listed verbatim.
inline Json to_json(const SuiteReport& r) {
  Json failing = Json::array();
  for (const auto& c : r.cases)
    if (!c.pass) failing.push_back(to_json(c));
  return {{"suite", to_string(r.suite)}, {"seed", r.seed},       {"count", r.cases.size()},
          {"passed", r.cases.size() - r.failures()}, {"failed", r.failures()}, {"rejections", r.rejections()},
          {"failures", failing}};
}

}  // namespace assoform
