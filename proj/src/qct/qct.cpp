#include "wh2dl/qct/qct.hpp"

#include <array>

namespace wh2dl::qct {

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += '_';
    out += parts[i];
  }
  return out;
}

constexpr std::array<std::string_view, 8> kKinds = {
    "What", "Which", "Who", "When", "Where", "HowQuantitative", "HowState", "HowComputational"};
constexpr std::array<std::string_view, 3> kForms = {"Simple", "Complex", "Compound"};

}  // namespace

std::string NounPhrase::joined_head() const { return join(head); }
std::string ClauseStructure::joined_relation() const { return join(relation); }

std::size_t SubQCT::input_count() const {
  std::size_t n = 0;
  for (const auto& c : clauses) n += c.inputs.size();
  return n;
}

std::string_view to_string(QueryKind k) { return kKinds[static_cast<std::size_t>(k)]; }

std::string_view to_string(DesireMode m) {
  switch (m) {
    case DesireMode::Explicit: return "Explicit";
    case DesireMode::ImplicitDefinition: return "ImplicitDefinition";
    case DesireMode::ImplicitTime: return "ImplicitTime";
    case DesireMode::ImplicitLocation: return "ImplicitLocation";
    case DesireMode::ImplicitCount: return "ImplicitCount";
  }
  return {};
}

std::string_view to_string(Connective c) { return c == Connective::And ? "And" : "Or"; }

std::string_view to_string(Form f) { return kForms[static_cast<std::size_t>(f)]; }

std::string_view to_string(SubjectBinding s) {
  switch (s) {
    case SubjectBinding::DesireIsSubject: return "DesireIsSubject";
    case SubjectBinding::InputIsSubject: return "InputIsSubject";
    case SubjectBinding::NoRelation: return "NoRelation";
  }
  return {};
}

std::string_view to_string(Dependency d) {
  switch (d) {
    case Dependency::Desire: return "Desire";
    case Dependency::Input: return "Input";
    case Dependency::None: return "None";
  }
  return {};
}

std::optional<QueryKind> parse_kind(std::string_view s) {
  for (std::size_t i = 0; i < kKinds.size(); ++i) {
    if (kKinds[i] == s) return static_cast<QueryKind>(i);
  }
  return std::nullopt;
}

std::optional<Form> parse_form(std::string_view s) {
  for (std::size_t i = 0; i < kForms.size(); ++i) {
    if (kForms[i] == s) return static_cast<Form>(i);
  }
  return std::nullopt;
}

}  // namespace wh2dl::qct
