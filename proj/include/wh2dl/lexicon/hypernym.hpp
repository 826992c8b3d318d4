#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wh2dl::lexicon {

enum class Source { Bundled, External };

struct LexiconEntry {
  std::string lemma;
  std::string msp;
  Source source = Source::Bundled;
};

class DuplicateLemma : public std::runtime_error {
 public:
  explicit DuplicateLemma(const std::string& lemma)
      : std::runtime_error("duplicate lemma '" + lemma + "'"), lemma_(lemma) {}
  const std::string& lemma() const { return lemma_; }

 private:
  std::string lemma_;
};

// Anything that can answer most-specific-parent queries.
class HypernymProvider {
 public:
  virtual ~HypernymProvider() = default;
  virtual std::optional<std::string> msp(std::string_view lemma) const = 0;
};

class HypernymLexicon : public HypernymProvider {
 public:
  HypernymLexicon() = default;

  // `lemma<TAB>msp` lines; '#' comments and blank lines skipped.
  static HypernymLexicon from_tsv(std::string_view text, Source source);
  static const HypernymLexicon& bundled();

  std::optional<std::string> msp(std::string_view lemma) const override;
  std::size_t size() const { return entries_.size(); }
  std::vector<LexiconEntry> entries() const;

 private:
  std::map<std::string, LexiconEntry, std::less<>> entries_;
};

// Throws IoError, DuplicateLemma.
HypernymLexicon load_lexicon(const std::string& path);

// Exact, case-sensitive lookup; nullopt is the NotFound value.
std::optional<std::string> getMSP(const HypernymProvider& lexicon, std::string_view lemma);

}  // namespace wh2dl::lexicon
