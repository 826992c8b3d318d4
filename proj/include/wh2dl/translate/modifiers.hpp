#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wh2dl::translate {

enum class Polarity { Positive, Negative };

struct MeasurableModifier {
  std::string lemma;
  std::string attribute;  // A_M
  Polarity polarity = Polarity::Positive;
};

class UnknownMeasurableModifier : public std::runtime_error {
 public:
  explicit UnknownMeasurableModifier(const std::string& lemma)
      : std::runtime_error("no measurable attribute for '" + lemma + "'") {}
};

// Seed bag of measurable adjectives: `lemma<TAB>Attribute<TAB>+|-`.
class ModifierLexicon {
 public:
  static ModifierLexicon from_tsv(std::string_view text);
  static const ModifierLexicon& bundled();

  std::optional<MeasurableModifier> find(std::string_view lemma) const;
  // Throws UnknownMeasurableModifier.
  const MeasurableModifier& at(std::string_view lemma) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::string, MeasurableModifier, std::less<>> entries_;
};

// Throws IoError.
ModifierLexicon load_modifier_lexicon(const std::string& path);

// Base adjective of a superlative ("tallest" -> "tall", "largest" -> "large",
// "biggest" -> "big") if the lexicon knows it.
std::optional<MeasurableModifier> superlative_base(const ModifierLexicon& lex, std::string_view jjs);

}  // namespace wh2dl::translate
