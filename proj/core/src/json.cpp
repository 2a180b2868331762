#include "qshuffle/json.hpp"

#include <type_traits>

namespace qshuffle {

using nlohmann::json;

json to_json(const FreeElement& v) {
  json terms = json::array();
  for (const auto& [w, c] : v.sorted_terms()) terms.push_back({{"word", w.to_string()}, {"coeff", to_string(c)}});
  return {{"terms", std::move(terms)}};
}

FreeElement element_from_json(const json& j) {
  FreeElement v;
  for (const auto& t : j.at("terms"))
    v.add_term(Word::parse(t.at("word").get<std::string>()), parse_laurent(t.at("coeff").get<std::string>()));
  return v;
}

json to_json(const VerificationReport& r) {
  json j = {
      {"id", r.id},
      {"params", r.params},
      {"verdict", r.pass ? "pass" : "fail"},
      {"difference", to_json(r.difference)},
      {"lhs_terms", r.lhs_terms},
      {"rhs_terms", r.rhs_terms},
      {"millis", r.millis},
  };
  if (r.t_power) j["t_power"] = *r.t_power;
  return j;
}

json to_json(const Word& w, const WordClass& c) {
  json j = {{"word", w.to_string()}, {"in_U", c.in_U()}};
  std::visit(
      [&](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, word_class::Trivial>) {
          j["class"] = "trivial";
        } else if constexpr (std::is_same_v<K, word_class::LetterPower>) {
          j["class"] = "power";
          j["family"] = std::string(1, to_char(k.letter));
          j["n"] = k.n;
        } else if constexpr (std::is_same_v<K, word_class::Alternating>) {
          j["class"] = "alternating";
          j["family"] = std::string(name(k.family));
          j["n"] = k.n;
        } else if constexpr (std::is_same_v<K, word_class::DoublyAlternating>) {
          j["class"] = "doubly-alternating";
          j["family"] = std::string(name(k.family));
          j["n"] = k.n;
        } else {
          j["class"] = "not-in-U";
          j["offset"] = k.offset;
          j["segment"] = k.segment.to_string();
        }
      },
      c.kind());
  j["text"] = c.to_string();
  return j;
}

json to_json(const TruncatedSeries& s) {
  json coeffs = json::array();
  for (const auto& c : s.coefficients()) coeffs.push_back(to_json(c));
  return {{"order", s.order()}, {"coefficients", std::move(coeffs)}};
}

json to_json(const CheckResult& c) {
  return {{"name", c.name}, {"verdict", c.pass ? "pass" : "fail"}, {"cases", c.cases}, {"detail", c.detail},
          {"millis", c.millis}};
}

json to_json(const SweepResult& s) {
  json reports = json::array();
  for (const auto& r : s.reports) reports.push_back(to_json(r));
  json checks = json::array();
  for (const auto& c : s.checks) checks.push_back(to_json(c));
  return {{"verdict", s.pass() ? "pass" : "fail"},
          {"failures", s.failures()},
          {"reports", std::move(reports)},
          {"checks", std::move(checks)},
          {"millis", s.millis}};
}

json to_json(const RelationFamily& f) {
  return {{"id", f.id}, {"arity", f.arity}, {"group", f.group}, {"formula", f.formula}, {"note", f.note}};
}

}  // namespace qshuffle
