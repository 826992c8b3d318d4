#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wh2dl/dl/expr.hpp"
#include "wh2dl/lexicon/hypernym.hpp"
#include "wh2dl/qct/qct.hpp"
#include "wh2dl/translate/modifiers.hpp"

namespace wh2dl::translate {

enum class QueryMode { TBoxStrong, TBoxWeak, ABoxRetrieval };
// paper-literal replaces a proper-noun input by its most specific parent;
// nominal-strict keeps the individual as {I}.
enum class NominalMode { PaperLiteral, NominalStrict };
enum class Combinator { Union, Intersection };

std::string_view to_string(QueryMode m);
std::string_view to_string(NominalMode m);
std::string_view to_string(Combinator c);
std::optional<NominalMode> parse_nominal_mode(std::string_view s);

struct QueryForm {
  QueryMode mode = QueryMode::ABoxRetrieval;
  dl::Concept desire = dl::Concept::thing();
  std::string variable = "?x";
};

struct TranslationResult {
  QueryForm form;
  std::vector<dl::Axiom> query_axioms;  // D_F against the desire concept
  std::vector<dl::Axiom> support;       // modifier, temporal and count axioms
  std::vector<std::string> rules;
  std::vector<TranslationResult> sub;
  std::optional<Combinator> combinator;

  std::vector<dl::Axiom> axioms() const;
};

struct Context {
  const lexicon::HypernymProvider* hypernyms = &lexicon::HypernymLexicon::bundled();
  const ModifierLexicon* modifiers = &ModifierLexicon::bundled();
  NominalMode nominal = NominalMode::PaperLiteral;
};

class TranslationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedAdverbial : public TranslationFailure {
 public:
  explicit UnsupportedAdverbial(const std::string& adverb)
      : TranslationFailure("adverbial '" + adverb + "' needs negation") {}
};

// Name of the formalized desire in emitted axioms.
inline constexpr std::string_view kDesireName = "D_F";

TranslationResult translate(const qct::QCT& q, const Context& ctx = {});

TranslationResult apply_base_rules(const qct::SubQCT& sub, const Context& ctx = {});
TranslationResult translate_complex(const qct::SubQCT& sub, const Context& ctx = {});
TranslationResult apply_desire_inclusion(const qct::SubQCT& sub, const Context& ctx = {});
TranslationResult apply_quantitative_how(const qct::SubQCT& sub, const Context& ctx = {});
TranslationResult apply_temporal_adverbial(const qct::SubQCT& sub, const Context& ctx = {});
// Throws UnknownMeasurableModifier when the superlative has no attribute.
TranslationResult apply_superlative(const qct::SubQCT& sub, const Context& ctx = {});

// Chain for modifiers [M1..Mk] (surface order) over `head`:
// Mk_Head SubClassOf Head, ..., M1_.._Mk_Head SubClassOf M2_.._Mk_Head.
std::vector<dl::Axiom> apply_modifier_rule(const std::vector<std::string>& modifiers,
                                           const std::string& head);

struct SplitResult {
  std::vector<qct::SubQCT> parts;
  Combinator combinator = Combinator::Union;
  bool split = false;  // false: returned unchanged (NotSplit or nothing to split)
};

SplitResult split_compound(const qct::QCT& q);

// Intransitive relation with no input becomes `does` + gerund concept.
qct::SubQCT reify_empty_input(const qct::SubQCT& sub);

// f_r: bark -> barking, run -> running, make -> making, die -> dying.
std::string gerund(std::string_view base);

// Capitalized_Underscore concept name from lemma parts.
std::string concept_name(const std::vector<std::string>& parts);
std::string role_name(const std::vector<std::string>& relation);

}  // namespace wh2dl::translate
