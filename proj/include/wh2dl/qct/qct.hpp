#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wh2dl/text/token.hpp"

namespace wh2dl::qct {

enum class QueryKind { What, Which, Who, When, Where, HowQuantitative, HowState, HowComputational };
enum class DesireMode { Explicit, ImplicitDefinition, ImplicitTime, ImplicitLocation, ImplicitCount };
enum class Connective { And, Or };
enum class Form { Simple, Complex, Compound };
enum class SubjectBinding { DesireIsSubject, InputIsSubject, NoRelation };
enum class Dependency { Desire, Input, None };

std::string_view to_string(QueryKind k);
std::string_view to_string(DesireMode m);
std::string_view to_string(Connective c);
std::string_view to_string(Form f);
std::string_view to_string(SubjectBinding s);
std::string_view to_string(Dependency d);

std::optional<QueryKind> parse_kind(std::string_view s);
std::optional<Form> parse_form(std::string_view s);

// Shared shape of D and I slots. Lemmas only; the POS of each modifier is
// kept for the superlative rule.
struct NounPhrase {
  std::vector<std::string> head;
  bool proper = false;
  std::vector<std::string> mods;
  std::vector<text::Pos> mod_pos;
  std::vector<std::string> quant;
  std::vector<std::size_t> head_index;  // token positions of the head

  std::string joined_head() const;
  bool operator==(const NounPhrase&) const = default;
};

struct DesireSlot : NounPhrase {
  DesireMode mode = DesireMode::Explicit;
  bool operator==(const DesireSlot&) const = default;
};

using InputSlot = NounPhrase;

struct ClauseStructure {
  std::optional<std::string> cl;
  std::vector<std::string> relation;
  std::vector<text::Pos> relation_pos;
  std::vector<std::size_t> relation_index;
  std::vector<InputSlot> inputs;
  std::vector<Connective> cc;
  bool inverse = false;
  // -1: constrains the desire; k >= 0: constrains the last input of clause k.
  int attach = -1;

  std::string joined_relation() const;
  bool operator==(const ClauseStructure&) const = default;
};

struct SubQCT {
  QueryKind kind = QueryKind::What;
  std::optional<std::string> r1;
  std::optional<std::size_t> r1_index;  // last token of R1
  std::vector<DesireSlot> desires;
  std::vector<Connective> dcc;
  std::vector<ClauseStructure> clauses;
  SubjectBinding subject = SubjectBinding::NoRelation;

  std::size_t input_count() const;
  bool operator==(const SubQCT&) const = default;
};

struct QCT {
  Form form = Form::Simple;
  std::vector<SubQCT> subqueries;
  std::vector<Connective> cc;

  bool operator==(const QCT&) const = default;
};

class CharacterizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NoWhToken : public CharacterizationError {
 public:
  NoWhToken() : CharacterizationError("no wh-token") {}
};

class UnsupportedKind : public CharacterizationError {
 public:
  using CharacterizationError::CharacterizationError;
};

class CharacterizationFailure : public CharacterizationError {
 public:
  using CharacterizationError::CharacterizationError;
};

}  // namespace wh2dl::qct
