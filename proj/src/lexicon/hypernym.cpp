#include "wh2dl/lexicon/hypernym.hpp"

#include <fstream>
#include <sstream>

#include "wh2dl/error.hpp"
#include "wh2dl/resources.hpp"

namespace wh2dl {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("read failed: " + path);
  return buf.str();
}

}  // namespace wh2dl

namespace wh2dl::lexicon {

HypernymLexicon HypernymLexicon::from_tsv(std::string_view text, Source source) {
  HypernymLexicon lex;
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
    auto tab = line.find('\t');
    if (tab == std::string_view::npos || tab == 0 || tab + 1 == line.size()) {
      throw IoError("line " + std::to_string(line_no) + ": expected lemma<TAB>msp");
    }
    std::string lemma(line.substr(0, tab));
    std::string msp(line.substr(tab + 1));
    if (lex.entries_.contains(lemma)) throw DuplicateLemma(lemma);
    lex.entries_.emplace(lemma, LexiconEntry{lemma, std::move(msp), source});
  }
  return lex;
}

const HypernymLexicon& HypernymLexicon::bundled() {
  static const HypernymLexicon kLex = from_tsv(resources::hypernyms(), Source::Bundled);
  return kLex;
}

std::optional<std::string> HypernymLexicon::msp(std::string_view lemma) const {
  if (auto it = entries_.find(lemma); it != entries_.end()) return it->second.msp;
  return std::nullopt;
}

std::vector<LexiconEntry> HypernymLexicon::entries() const {
  std::vector<LexiconEntry> out;
  for (const auto& [k, v] : entries_) out.push_back(v);
  return out;
}

HypernymLexicon load_lexicon(const std::string& path) {
  return HypernymLexicon::from_tsv(read_file(path), Source::External);
}

std::optional<std::string> getMSP(const HypernymProvider& lexicon, std::string_view lemma) {
  if (lemma.empty()) return std::nullopt;
  return lexicon.msp(lemma);
}

}  // namespace wh2dl::lexicon
