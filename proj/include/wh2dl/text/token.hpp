#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wh2dl::text {

// Closed Penn-Treebank tag set. IN is folded into PP; everything outside the
// set that is still a recognised tag maps to Other.
enum class Pos {
  NN, NNS, NNP, NNPS, JJ, JJS, RB, VB, VBZ, VBD, VBG, VBN,
  PP, DT, WDT, WP, WRB, CC, MD, Other
};

std::string_view to_string(Pos pos);

// Parses a tag name. Accepts the closed set plus common Penn aliases
// (IN, TO, RP, VBP, JJR, RBR, RBS, CD, PRP, punctuation, ...).
std::optional<Pos> parse_pos(std::string_view tag);

bool is_noun(Pos pos);
bool is_verb(Pos pos);
bool is_wh(Pos pos);

struct Token {
  std::string surface;
  std::string lemma;
  Pos pos = Pos::Other;
  std::size_t index = 0;

  bool operator==(const Token&) const = default;
};

struct TokenSequence {
  std::vector<Token> tokens;
  bool terminal = false;  // trailing '?'

  bool operator==(const TokenSequence&) const = default;
};

class EmptyInput : public std::runtime_error {
 public:
  EmptyInput() : std::runtime_error("empty input") {}
};

class MalformedLine : public std::runtime_error {
 public:
  MalformedLine(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Recomputes the lemma from the surface form. Idempotent.
Token normalize(Token token);

// Lowercase plural stripping used for common nouns.
std::string singularize(std::string_view lower);

// `surface<TAB>POS` per line; a final `?` line sets the terminal flag.
TokenSequence parse_tagged_input(std::string_view text);

// {"tokens":[{"surface":..., "pos":...}]}
TokenSequence parse_tagged_json(std::string_view text);

std::string serialize_tsv(const TokenSequence& seq);

}  // namespace wh2dl::text
