#include "wh2dl/translate/modifiers.hpp"

#include "wh2dl/error.hpp"
#include "wh2dl/resources.hpp"

namespace wh2dl::translate {

ModifierLexicon ModifierLexicon::from_tsv(std::string_view text) {
  ModifierLexicon lex;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    auto t1 = line.find('\t');
    auto t2 = t1 == std::string_view::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string_view::npos) {
      throw IoError("line " + std::to_string(line_no) + ": expected lemma<TAB>attribute<TAB>+|-");
    }
    std::string_view pol = line.substr(t2 + 1);
    if (pol != "+" && pol != "-") {
      throw IoError("line " + std::to_string(line_no) + ": polarity must be + or -");
    }
    MeasurableModifier m{std::string(line.substr(0, t1)), std::string(line.substr(t1 + 1, t2 - t1 - 1)),
                         pol == "+" ? Polarity::Positive : Polarity::Negative};
    lex.entries_.emplace(m.lemma, std::move(m));
  }
  return lex;
}

const ModifierLexicon& ModifierLexicon::bundled() {
  static const ModifierLexicon kLex = from_tsv(resources::measurable_modifiers());
  return kLex;
}

std::optional<MeasurableModifier> ModifierLexicon::find(std::string_view lemma) const {
  if (auto it = entries_.find(lemma); it != entries_.end()) return it->second;
  return std::nullopt;
}

const MeasurableModifier& ModifierLexicon::at(std::string_view lemma) const {
  auto it = entries_.find(lemma);
  if (it == entries_.end()) throw UnknownMeasurableModifier(std::string(lemma));
  return it->second;
}

ModifierLexicon load_modifier_lexicon(const std::string& path) {
  return ModifierLexicon::from_tsv(read_file(path));
}

std::optional<MeasurableModifier> superlative_base(const ModifierLexicon& lex, std::string_view jjs) {
  if (jjs.size() < 4 || jjs.substr(jjs.size() - 3) != "est") return std::nullopt;
  std::string stem(jjs.substr(0, jjs.size() - 3));
  if (auto m = lex.find(stem)) return m;
  if (auto m = lex.find(stem + "e")) return m;
  if (stem.size() >= 2 && stem[stem.size() - 1] == stem[stem.size() - 2]) {
    if (auto m = lex.find(stem.substr(0, stem.size() - 1))) return m;
  }
  if (!stem.empty() && stem.back() == 'i') {
    if (auto m = lex.find(stem.substr(0, stem.size() - 1) + "y")) return m;
  }
  return std::nullopt;
}

}  // namespace wh2dl::translate
