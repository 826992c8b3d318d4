#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

#include "wh2dl/text/token.hpp"

namespace wh2dl::text {

// Lexicon-driven fallback tagger. Closed-class words come from the lexicon,
// open-class words from suffix heuristics.
class Tagger {
 public:
  // `word<TAB>tag` lines, '#' comments; first entry for a word wins.
  explicit Tagger(std::string_view lexicon_tsv);

  TokenSequence tag(std::string_view raw) const;

  std::optional<Pos> lookup(std::string_view lower) const;

  // Base form of an inflected verb if it derives from a known base verb.
  std::optional<std::string> verb_base(std::string_view lower) const;
  bool is_base_verb(std::string_view lower) const;

 private:
  Pos classify(std::string_view surface, bool initial, bool aux_seen) const;

  std::unordered_map<std::string, Pos> words_;
  std::unordered_set<std::string> verbs_;
};

// Tagger over the bundled lexicon.
const Tagger& default_tagger();

TokenSequence tag_tokens(std::string_view raw);

// Splits raw text into surface tokens: trailing punctuation and possessive
// 's are separated; "3.2" and "and/or" stay whole.
std::vector<std::string> split_words(std::string_view raw);

}  // namespace wh2dl::text
