#pragma once

// JSON interchange for condition systems and scheme coefficients.
//
// System:
//   {"spec": {"stages": s, "operators": m, "ansatz": "plain", "fixed": {"a[1]": "1/2"}},
//    "order": p,
//    "blocks": [{"q": 1, "conditions": [{"word": "A", "poly": "a[1]+a[2]-1"}, ...]}, ...],
//    "leading": {"q": p+1, "conditions": [...]}}          // optional
// Coefficients:
//   {"s": 2, "m": 2, "a": ["1/2", "1/2"], "b": [1, 0], "c": [...]}
//   entries are "p/q" strings or JSON numbers (taken at their exact binary value).

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "expansion.hpp"
#include "numeric.hpp"
#include "poly_text.hpp"

namespace splitoc {

using Json = nlohmann::ordered_json;

namespace detail {

inline const Json& require(const Json& j, const char* key, const char* context) {
  if (!j.is_object() || !j.contains(key))
    throw invalid_input(std::string(context) + ": missing field '" + key + "'");
  return j.at(key);
}

inline int require_int(const Json& j, const char* key, const char* context) {
  const Json& v = require(j, key, context);
  if (!v.is_number_integer())
    throw invalid_input(std::string(context) + ": field '" + key + "' must be an integer");
  return v.get<int>();
}

inline Rational rational_from_json(const Json& v) {
  if (v.is_string())
    return parse_rational(v.get<std::string>());
  if (v.is_number_integer())
    return Rational(v.get<long long>());
  if (v.is_number())
    return rational_from_double(v.get<double>());
  throw invalid_input("coefficient must be a \"p/q\" string or a number");
}

} // namespace detail

inline Json to_json(const SchemeSpec& spec) {
  Json fixed = Json::object();
  for (const auto& [u, v] : spec.fixed)
    fixed[u.name()] = to_string(v);
  return Json{{"stages", spec.stages},
              {"operators", spec.operators},
              {"ansatz", std::string(ansatz_name(spec.ansatz))},
              {"fixed", fixed}};
}

inline SchemeSpec scheme_spec_from_json(const Json& j) {
  SchemeSpec spec;
  spec.stages = detail::require_int(j, "stages", "spec");
  spec.operators = detail::require_int(j, "operators", "spec");
  spec.ansatz = parse_ansatz(detail::require(j, "ansatz", "spec").get<std::string>());
  if (j.contains("fixed"))
    for (const auto& [name, value] : j.at("fixed").items())
      spec.fixed[parse_unknown(name)] = detail::rational_from_json(value);
  spec.validate();
  return spec;
}

inline Json to_json(const ConditionBlock& block) {
  Json conditions = Json::array();
  for (const auto& c : block.conditions)
    conditions.push_back(Json{{"word", c.word.str()}, {"poly", to_string(c.poly)}});
  return Json{{"q", block.order}, {"conditions", conditions}};
}

inline ConditionBlock condition_block_from_json(const Json& j) {
  ConditionBlock block;
  block.order = detail::require_int(j, "q", "block");
  for (const auto& c : detail::require(j, "conditions", "block")) {
    block.conditions.push_back(
        {Word::from_string(detail::require(c, "word", "condition").get<std::string>()),
         parse_coeff_poly(detail::require(c, "poly", "condition").get<std::string>())});
  }
  return block;
}

inline Json to_json(const OrderConditionSystem& system,
                    const std::optional<LeadingErrorTerm>& leading = std::nullopt) {
  Json blocks = Json::array();
  for (const auto& b : system.blocks)
    blocks.push_back(to_json(b));
  Json out{{"spec", to_json(system.spec)}, {"order", system.order}, {"blocks", blocks}};
  if (leading)
    out["leading"] = to_json(leading->block);
  return out;
}

struct LoadedSystem {
  OrderConditionSystem system;
  std::optional<LeadingErrorTerm> leading;
};

inline LoadedSystem system_from_json(const Json& j) {
  LoadedSystem out;
  out.system.spec = scheme_spec_from_json(detail::require(j, "spec", "system"));
  out.system.order = detail::require_int(j, "order", "system");
  for (const auto& b : detail::require(j, "blocks", "system"))
    out.system.blocks.push_back(condition_block_from_json(b));
  if (j.contains("leading"))
    out.leading = LeadingErrorTerm{out.system.spec, out.system.order,
                                   condition_block_from_json(j.at("leading"))};
  return out;
}

inline Json to_json(const SchemeCoefficients& coeffs) {
  auto list = [](const std::vector<Rational>& v) {
    Json arr = Json::array();
    for (const auto& x : v)
      arr.push_back(to_string(x));
    return arr;
  };
  Json out{{"s", coeffs.stages()}, {"m", coeffs.operators()}, {"a", list(coeffs.a)}, {"b", list(coeffs.b)}};
  if (!coeffs.c.empty())
    out["c"] = list(coeffs.c);
  return out;
}

inline SchemeCoefficients scheme_coefficients_from_json(const Json& j) {
  const int s = detail::require_int(j, "s", "coefficients");
  const int m = detail::require_int(j, "m", "coefficients");
  if (m != 2 && m != 3)
    throw invalid_input("coefficients: m must be 2 or 3");
  auto list = [&](const char* key) {
    std::vector<Rational> out;
    const Json& arr = detail::require(j, key, "coefficients");
    if (!arr.is_array() || static_cast<int>(arr.size()) != s)
      throw invalid_input(std::string("coefficients: '") + key + "' must be an array of length s");
    for (const auto& v : arr)
      out.push_back(detail::rational_from_json(v));
    return out;
  };
  SchemeCoefficients out;
  out.a = list("a");
  out.b = list("b");
  if (m == 3)
    out.c = list("c");
  else if (j.contains("c"))
    throw invalid_input("coefficients: 'c' given but m = 2");
  out.validate();
  return out;
}

} // namespace splitoc
