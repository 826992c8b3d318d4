#include "wh2dl/text/tagger.hpp"

#include <algorithm>
#include <cctype>

#include "wh2dl/resources.hpp"

namespace wh2dl::text {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

bool is_punct(char c) {
  return c == '?' || c == ',' || c == '.' || c == '!' || c == ';' || c == ':' ||
         c == '"' || c == '(' || c == ')';
}

bool is_number(std::string_view s) {
  bool digit = false;
  for (char c : s) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digit = true;
    } else if (c != '.' && c != ',') {
      return false;
    }
  }
  return digit;
}

bool capitalized(std::string_view s) {
  return !s.empty() && std::isupper(static_cast<unsigned char>(s.front()));
}

// Words whose lexicon tag survives capitalization mid-sentence.
bool closed_class(Pos pos) {
  switch (pos) {
    case Pos::WP: case Pos::WDT: case Pos::WRB: case Pos::DT: case Pos::PP:
    case Pos::CC: case Pos::MD: case Pos::Other: case Pos::VBZ: case Pos::VBD:
      return true;
    default:
      return false;
  }
}

bool auxiliary(std::string_view w) {
  static const std::unordered_set<std::string_view> kAux = {
      "is", "are", "was", "were", "be", "been", "am", "has", "have", "had",
      "can", "could", "will", "would", "might", "may", "shall", "should", "must"};
  return kAux.contains(w);
}

}  // namespace

Tagger::Tagger(std::string_view lexicon_tsv) {
  std::size_t pos = 0;
  while (pos < lexicon_tsv.size()) {
    std::size_t end = lexicon_tsv.find('\n', pos);
    if (end == std::string_view::npos) end = lexicon_tsv.size();
    std::string_view line = lexicon_tsv.substr(pos, end - pos);
    pos = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string_view::npos) continue;
    auto tag = parse_pos(line.substr(tab + 1));
    if (!tag) continue;
    std::string word = lower(line.substr(0, tab));
    if (words_.contains(word)) continue;
    words_.emplace(word, *tag);
    if (*tag == Pos::VB) verbs_.insert(word);
  }
}

std::optional<Pos> Tagger::lookup(std::string_view w) const {
  if (auto it = words_.find(std::string(w)); it != words_.end()) return it->second;
  return std::nullopt;
}

bool Tagger::is_base_verb(std::string_view w) const { return verbs_.contains(std::string(w)); }

std::optional<std::string> Tagger::verb_base(std::string_view w) const {
  std::string s(w);
  if (verbs_.contains(s)) return s;
  auto strip = [&](std::size_t n) { return s.substr(0, s.size() - n); };
  std::vector<std::string> candidates;
  if (ends_with(s, "ies")) candidates.push_back(strip(3) + "y");
  if (ends_with(s, "es")) candidates.push_back(strip(2));
  if (ends_with(s, "s")) candidates.push_back(strip(1));
  if (ends_with(s, "ied")) candidates.push_back(strip(3) + "y");
  if (ends_with(s, "ed")) {
    candidates.push_back(strip(2));
    candidates.push_back(strip(1));
    std::string stem = strip(2);
    if (stem.size() >= 2 && stem[stem.size() - 1] == stem[stem.size() - 2]) {
      candidates.push_back(stem.substr(0, stem.size() - 1));
    }
  }
  if (ends_with(s, "ing")) {
    std::string stem = strip(3);
    candidates.push_back(stem);
    candidates.push_back(stem + "e");
    if (stem.size() >= 2 && stem[stem.size() - 1] == stem[stem.size() - 2]) {
      candidates.push_back(stem.substr(0, stem.size() - 1));
    }
  }
  for (const auto& c : candidates) {
    if (verbs_.contains(c)) return c;
  }
  return std::nullopt;
}

Pos Tagger::classify(std::string_view surface, bool initial, bool aux_seen) const {
  if (surface.size() == 1 && is_punct(surface.front())) return Pos::Other;
  if (is_number(surface)) return Pos::JJ;
  const std::string w = lower(surface);
  auto known = lookup(w);
  if (capitalized(surface) && !initial && (!known || !closed_class(*known))) {
    return Pos::NNP;
  }
  if (known) return *known;

  if (auto base = verb_base(w)) {
    if (ends_with(w, "ing")) return Pos::VBG;
    if (ends_with(w, "s")) return Pos::VBZ;
    if (ends_with(w, "ed")) return aux_seen ? Pos::VBN : Pos::VBD;
  }
  Pos guess = Pos::NN;
  if (w.size() > 5 && ends_with(w, "ing")) {
    guess = Pos::VBG;
  } else if (w.size() > 4 && ends_with(w, "ed")) {
    guess = aux_seen ? Pos::VBN : Pos::VBD;
  } else if (w.size() > 5 && ends_with(w, "est")) {
    guess = Pos::JJS;
  } else if (w.size() > 4 && ends_with(w, "ly")) {
    guess = Pos::RB;
  } else if (ends_with(w, "ous") || ends_with(w, "ful") || ends_with(w, "ive") ||
             ends_with(w, "ic") || ends_with(w, "able") || ends_with(w, "ible")) {
    guess = Pos::JJ;
  } else if (w.size() > 3 && ends_with(w, "s") && !ends_with(w, "ss") &&
             !ends_with(w, "us") && !ends_with(w, "is")) {
    guess = Pos::NNS;
  }
  if (initial && capitalized(surface) && guess == Pos::NN) return Pos::NNP;
  return guess;
}

std::vector<std::string> split_words(std::string_view raw) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < raw.size()) {
    while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
    std::size_t start = i;
    while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
    std::string_view chunk = raw.substr(start, i - start);
    if (chunk.empty()) continue;

    std::vector<std::string> tail;
    while (!chunk.empty() && is_punct(chunk.front()) && chunk.size() > 1) {
      out.emplace_back(1, chunk.front());
      chunk.remove_prefix(1);
    }
    while (chunk.size() > 1 && is_punct(chunk.back())) {
      tail.emplace_back(1, chunk.back());
      chunk.remove_suffix(1);
    }
    if (chunk.size() > 2 && (ends_with(chunk, "'s") || ends_with(chunk, "’s"))) {
      std::size_t cut = ends_with(chunk, "'s") ? 2 : 4;
      out.emplace_back(chunk.substr(0, chunk.size() - cut));
      out.emplace_back("'s");
    } else {
      out.emplace_back(chunk);
    }
    out.insert(out.end(), tail.rbegin(), tail.rend());
  }
  return out;
}

TokenSequence Tagger::tag(std::string_view raw) const {
  auto words = split_words(raw);
  bool terminal = false;
  if (!words.empty() && words.back() == "?") {
    terminal = true;
    words.pop_back();
  }
  std::vector<Token> tokens;
  bool aux_seen = false;
  bool initial = true;
  bool after_who = false;
  for (auto& w : words) {
    Pos pos = classify(w, initial, aux_seen);
    const std::string l = lower(w);
    // "who" is followed by its verb, so "Who (always) visits" is not a plural.
    if (after_who && pos == Pos::NNS) pos = Pos::VBZ;
    if (l == "who") after_who = true;
    else if (pos != Pos::RB) after_who = false;
    if (auxiliary(l) || pos == Pos::MD) aux_seen = true;
    if (is_wh(pos) || pos == Pos::CC) aux_seen = false;
    if (!(w.size() == 1 && is_punct(w.front()))) initial = false;
    tokens.push_back(Token{std::move(w), {}, pos, 0});
  }
  if (tokens.empty()) throw EmptyInput();
  // Reuse the TSV path so merging and lemmas stay identical.
  std::string tsv;
  for (const auto& t : tokens) {
    tsv += t.surface;
    tsv += '\t';
    tsv += to_string(t.pos);
    tsv += '\n';
  }
  if (terminal) tsv += "?\t.\n";
  return parse_tagged_input(tsv);
}

const Tagger& default_tagger() {
  static const Tagger kTagger(resources::tagger_lexicon());
  return kTagger;
}

TokenSequence tag_tokens(std::string_view raw) { return default_tagger().tag(raw); }

}  // namespace wh2dl::text
