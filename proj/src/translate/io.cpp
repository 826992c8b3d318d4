#include "wh2dl/translate/io.hpp"

namespace wh2dl::translate {

namespace {

nlohmann::json axiom_list(const std::vector<dl::Axiom>& axioms) {
  auto arr = nlohmann::json::array();
  for (const auto& a : axioms) arr.push_back(dl::serialize(a));
  return arr;
}

}  // namespace

nlohmann::json to_json(const TranslationResult& r) {
  nlohmann::json j;
  j["mode"] = to_string(r.form.mode);
  j["desire"] = dl::serialize(r.form.desire);
  j["variable"] = r.form.variable;
  j["axioms"] = axiom_list(r.query_axioms);
  j["support"] = axiom_list(r.support);
  j["rules"] = r.rules;
  auto sub = nlohmann::json::array();
  for (const auto& s : r.sub) sub.push_back(to_json(s));
  j["sub"] = sub;
  j["combinator"] = r.combinator ? nlohmann::json(to_string(*r.combinator)) : nlohmann::json();
  return j;
}

std::string render_json(const TranslationResult& r, int indent) {
  return to_json(r).dump(indent);
}

std::string render_text(const TranslationResult& r) {
  std::string out;
  out += dl::serialize(r.form.desire) + "\n";
  for (const auto& a : r.axioms()) out += dl::serialize(a) + "\n";
  return out;
}

}  // namespace wh2dl::translate
