#include "wh2dl/qct/io.hpp"

namespace wh2dl::qct {

namespace {

using nlohmann::json;

json connectives(const std::vector<Connective>& cc) {
  json out = json::array();
  for (auto c : cc) out.push_back(std::string(to_string(c)));
  return out;
}

json phrase(const NounPhrase& np) {
  return json{{"head", np.joined_head()}, {"mods", np.mods}, {"quant", np.quant}};
}

}  // namespace

json to_json(const QCT& q) {
  json subs = json::array();
  for (const auto& s : q.subqueries) {
    json desires = json::array();
    for (const auto& d : s.desires) {
      json j = phrase(d);
      j["mode"] = std::string(to_string(d.mode));
      desires.push_back(std::move(j));
    }
    json clauses = json::array();
    for (const auto& c : s.clauses) {
      json inputs = json::array();
      for (const auto& in : c.inputs) {
        json j = phrase(in);
        j["proper"] = in.proper;
        inputs.push_back(std::move(j));
      }
      clauses.push_back(json{{"cl", c.cl ? json(*c.cl) : json(nullptr)},
                             {"rel", c.joined_relation()},
                             {"inputs", std::move(inputs)},
                             {"cc", connectives(c.cc)},
                             {"inverse", c.inverse},
                             {"attach", c.attach}});
    }
    subs.push_back(json{{"kind", std::string(to_string(s.kind))},
                        {"r1", s.r1 ? json(*s.r1) : json(nullptr)},
                        {"desires", std::move(desires)},
                        {"dcc", connectives(s.dcc)},
                        {"clauses", std::move(clauses)},
                        {"subject", std::string(to_string(s.subject))}});
  }
  return json{{"form", std::string(to_string(q.form))},
              {"subqueries", std::move(subs)},
              {"cc", connectives(q.cc)}};
}

std::string render_json(const QCT& q, int indent) { return to_json(q).dump(indent); }

bool matches_gold(const json& actual, const json& gold) {
  if (gold.is_object()) {
    if (!actual.is_object()) return false;
    for (const auto& [key, value] : gold.items()) {
      if (!actual.contains(key) || !matches_gold(actual.at(key), value)) return false;
    }
    return true;
  }
  if (gold.is_array()) {
    if (!actual.is_array() || actual.size() != gold.size()) return false;
    for (std::size_t i = 0; i < gold.size(); ++i) {
      if (!matches_gold(actual[i], gold[i])) return false;
    }
    return true;
  }
  return actual == gold;
}

}  // namespace wh2dl::qct
