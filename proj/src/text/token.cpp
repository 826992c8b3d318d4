#include "wh2dl/text/token.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"

namespace wh2dl::text {

namespace {

constexpr std::array<std::string_view, 20> kPosNames = {
    "NN", "NNS", "NNP", "NNPS", "JJ", "JJS", "RB", "VB", "VBZ", "VBD",
    "VBG", "VBN", "PP", "DT", "WDT", "WP", "WRB", "CC", "MD", "Other"};

const std::unordered_map<std::string_view, Pos>& pos_aliases() {
  static const std::unordered_map<std::string_view, Pos> kAliases = {
      {"IN", Pos::PP},     {"TO", Pos::PP},     {"RP", Pos::PP},
      {"VBP", Pos::VB},    {"JJR", Pos::JJ},    {"RBR", Pos::RB},
      {"RBS", Pos::RB},    {"CD", Pos::JJ},     {"PDT", Pos::DT},
      {"WP$", Pos::WP},    {"FW", Pos::NN},     {"other", Pos::Other},
      {"OTHER", Pos::Other}, {"PRP", Pos::Other}, {"PRP$", Pos::Other},
      {"POS", Pos::Other}, {"EX", Pos::Other},  {"UH", Pos::Other},
      {"SYM", Pos::Other}, {"LS", Pos::Other},  {".", Pos::Other},
      {",", Pos::Other},   {":", Pos::Other},   {"``", Pos::Other},
      {"''", Pos::Other},  {"-LRB-", Pos::Other}, {"-RRB-", Pos::Other},
      {"$", Pos::Other},   {"#", Pos::Other}};
  return kAliases;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

// Adjacent proper nouns form one multiword name.
std::vector<Token> merge_proper(std::vector<Token> tokens) {
  std::vector<Token> out;
  for (auto& t : tokens) {
    const bool proper = t.pos == Pos::NNP || t.pos == Pos::NNPS;
    if (proper && !out.empty() &&
        (out.back().pos == Pos::NNP || out.back().pos == Pos::NNPS)) {
      out.back().surface += " " + t.surface;
      out.back().pos = t.pos;
      continue;
    }
    out.push_back(std::move(t));
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i].index = i;
    out[i] = normalize(std::move(out[i]));
  }
  return out;
}

TokenSequence finish(std::vector<Token> tokens, bool terminal) {
  if (tokens.empty()) throw EmptyInput();
  return TokenSequence{merge_proper(std::move(tokens)), terminal};
}

}  // namespace

std::string_view to_string(Pos pos) { return kPosNames[static_cast<std::size_t>(pos)]; }

std::optional<Pos> parse_pos(std::string_view tag) {
  for (std::size_t i = 0; i < kPosNames.size(); ++i) {
    if (kPosNames[i] == tag) return static_cast<Pos>(i);
  }
  const auto& aliases = pos_aliases();
  if (auto it = aliases.find(tag); it != aliases.end()) return it->second;
  return std::nullopt;
}

bool is_noun(Pos pos) {
  return pos == Pos::NN || pos == Pos::NNS || pos == Pos::NNP || pos == Pos::NNPS;
}

bool is_verb(Pos pos) {
  return pos == Pos::VB || pos == Pos::VBZ || pos == Pos::VBD || pos == Pos::VBG ||
         pos == Pos::VBN || pos == Pos::MD;
}

bool is_wh(Pos pos) { return pos == Pos::WP || pos == Pos::WDT || pos == Pos::WRB; }

std::string singularize(std::string_view w) {
  static const std::unordered_set<std::string_view> kInvariant = {
      "people", "species", "series", "news",    "physics", "mathematics", "gas",
      "bus",    "glass",   "lens",   "grass",   "class",   "boss",        "chess",
      "analysis", "basis", "thesis", "crisis",  "status",  "virus",       "campus",
      "bonus",  "census",  "focus",  "genus",   "octopus", "cactus",      "axis",
      "iris",   "canvas",  "atlas",  "bias",    "christmas", "always",    "this",
      "has",    "was",     "is",     "does",    "yes"};
  std::string s(w);
  if (s.size() <= 3 || kInvariant.contains(s)) return s;
  if (ends_with(s, "ies") && s.size() > 4) return s.substr(0, s.size() - 3) + "y";
  if (ends_with(s, "oes") || ends_with(s, "ches") || ends_with(s, "shes") ||
      ends_with(s, "xes") || ends_with(s, "zes") || ends_with(s, "sses")) {
    return s.substr(0, s.size() - 2);
  }
  if (ends_with(s, "ss") || ends_with(s, "us") || ends_with(s, "is")) return s;
  if (ends_with(s, "s")) return s.substr(0, s.size() - 1);
  return s;
}

Token normalize(Token token) {
  switch (token.pos) {
    case Pos::NNP:
    case Pos::NNPS: {
      std::string lemma = token.surface;
      std::replace(lemma.begin(), lemma.end(), ' ', '_');
      token.lemma = std::move(lemma);
      break;
    }
    case Pos::NN:
    case Pos::NNS:
      token.lemma = singularize(lower(token.surface));
      break;
    default:
      token.lemma = lower(token.surface);
  }
  return token;
}

TokenSequence parse_tagged_input(std::string_view text) {
  std::vector<Token> tokens;
  bool terminal = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos) throw MalformedLine(line_no, "missing tab");
    std::string_view surface = line.substr(0, tab);
    std::string_view tag = line.substr(tab + 1);
    if (surface.empty()) throw MalformedLine(line_no, "empty surface");
    auto parsed = parse_pos(tag);
    if (!parsed) throw MalformedLine(line_no, "unknown tag '" + std::string(tag) + "'");
    if (surface == "?") {
      terminal = true;
      continue;
    }
    tokens.push_back(Token{std::string(surface), {}, *parsed, 0});
  }
  return finish(std::move(tokens), terminal);
}

TokenSequence parse_tagged_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw MalformedLine(1, e.what());
  }
  if (!doc.is_object() || !doc.contains("tokens") || !doc["tokens"].is_array()) {
    throw MalformedLine(1, "expected {\"tokens\":[...]}");
  }
  std::vector<Token> tokens;
  bool terminal = false;
  std::size_t n = 0;
  for (const auto& item : doc["tokens"]) {
    ++n;
    if (!item.contains("surface") || !item.contains("pos")) {
      throw MalformedLine(n, "token needs surface and pos");
    }
    auto surface = item["surface"].get<std::string>();
    auto tag = item["pos"].get<std::string>();
    auto parsed = parse_pos(tag);
    if (surface.empty()) throw MalformedLine(n, "empty surface");
    if (!parsed) throw MalformedLine(n, "unknown tag '" + tag + "'");
    if (surface == "?") {
      terminal = true;
      continue;
    }
    tokens.push_back(Token{std::move(surface), {}, *parsed, 0});
  }
  return finish(std::move(tokens), terminal);
}

std::string serialize_tsv(const TokenSequence& seq) {
  std::string out;
  for (const auto& t : seq.tokens) {
    out += t.surface;
    out += '\t';
    out += to_string(t.pos);
    out += '\n';
  }
  if (seq.terminal) out += "?\t.\n";
  return out;
}

}  // namespace wh2dl::text
