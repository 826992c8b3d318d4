#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <fstream>

#include <unistd.h>

#include "doctest.h"
#include "wh2dl/error.hpp"
#include "wh2dl/lexicon/hypernym.hpp"
#include "wh2dl/translate/modifiers.hpp"

using namespace wh2dl;
using namespace wh2dl::lexicon;

namespace {

std::string temp_file(const std::string& content) {
  char path[] = "/tmp/wh2dl_lexXXXXXX";
  int fd = mkstemp(path);
  REQUIRE(fd >= 0);
  close(fd);
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("load a one-entry lexicon") {
  auto path = temp_file("USA\tCountry\n");
  auto lex = load_lexicon(path);
  CHECK(lex.size() == 1);
  CHECK(lex.entries().front().source == Source::External);
  std::remove(path.c_str());
}

TEST_CASE("duplicate lemma") {
  CHECK_THROWS_AS(HypernymLexicon::from_tsv("USA\tCountry\nUSA\tNation\n", Source::External), DuplicateLemma);
}

TEST_CASE("missing file and malformed lines") {
  CHECK_THROWS_AS(load_lexicon("/nonexistent/lexicon.tsv"), IoError);
  CHECK_THROWS_AS(HypernymLexicon::from_tsv("USA Country\n", Source::External), IoError);
}

TEST_CASE("comments and blank lines are skipped") {
  auto lex = HypernymLexicon::from_tsv("# header\n\nJapan\tCountry\n", Source::External);
  CHECK(lex.size() == 1);
}

TEST_CASE("bundled lexicon") {
  const auto& lex = HypernymLexicon::bundled();
  CHECK(lex.size() >= 40);
  CHECK(getMSP(lex, "USA") == std::optional<std::string>("Country"));
  CHECK(getMSP(lex, "Japan") == std::optional<std::string>("Country"));
  CHECK_FALSE(getMSP(lex, "Zzyzx").has_value());
  CHECK_FALSE(getMSP(lex, "usa").has_value());
}

TEST_CASE("measurable modifiers") {
  using namespace wh2dl::translate;
  const auto& mods = ModifierLexicon::bundled();
  CHECK(mods.at("tall").attribute == "Height");
  CHECK(mods.at("low").polarity == Polarity::Negative);
  CHECK_THROWS_AS(mods.at("great"), UnknownMeasurableModifier);
  CHECK(superlative_base(mods, "tallest")->lemma == "tall");
  CHECK(superlative_base(mods, "largest")->lemma == "large");
  CHECK(superlative_base(mods, "biggest")->lemma == "big");
  CHECK(superlative_base(mods, "lowest")->attribute == "Depth");
  CHECK_FALSE(superlative_base(mods, "greatest").has_value());
  CHECK_THROWS_AS(ModifierLexicon::from_tsv("tall\tHeight\n"), IoError);
  CHECK_THROWS_AS(ModifierLexicon::from_tsv("tall\tHeight\t?\n"), IoError);
}
