#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wh2dl/error.hpp"
#include "wh2dl/eval/harness.hpp"
#include "wh2dl/qct/characterizer.hpp"
#include "wh2dl/qct/io.hpp"
#include "wh2dl/text/tagger.hpp"
#include "wh2dl/translate/io.hpp"

namespace {

using namespace wh2dl;

constexpr int kOk = 0;
constexpr int kQueryFailed = 1;
constexpr int kUsage = 2;

struct Options {
  std::string input;
  std::string format;
  std::string lexicon;
  std::string mod_lexicon;
  std::string nominal_mode = "paper-literal";
  std::string corpus;
  bool tagged = false;
  bool serial = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A positional query is one input. Stdin is one input when tagged, else one
// query per non-blank line.
std::vector<std::string> inputs(const Options& o) {
  if (!o.input.empty()) return {o.input};
  std::string all((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
  if (o.tagged) return {all};
  std::vector<std::string> out;
  std::istringstream in(all);
  std::string line;
  while (std::getline(in, line))
    if (line.find_first_not_of(" \t\r") != std::string::npos) out.push_back(line);
  if (out.empty()) throw UsageError("no input query");
  return out;
}

text::TokenSequence tokens(const std::string& q, bool tagged) {
  return tagged ? text::parse_tagged_input(q) : text::tag_tokens(q);
}

std::string error_kind(const std::exception& e) {
  if (dynamic_cast<const qct::NoWhToken*>(&e)) return "NoWhToken";
  if (dynamic_cast<const qct::UnsupportedKind*>(&e)) return "UnsupportedKind";
  if (dynamic_cast<const qct::CharacterizationError*>(&e)) return "CharacterizationFailure";
  if (dynamic_cast<const translate::UnsupportedAdverbial*>(&e)) return "UnsupportedAdverbial";
  if (dynamic_cast<const translate::TranslationFailure*>(&e)) return "TranslationFailure";
  if (dynamic_cast<const translate::UnknownMeasurableModifier*>(&e)) return "UnknownMeasurableModifier";
  if (dynamic_cast<const text::EmptyInput*>(&e)) return "EmptyInput";
  if (dynamic_cast<const text::MalformedLine*>(&e)) return "MalformedLine";
  return "Error";
}

void check_format(const std::string& f, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (f == a) return;
  throw UsageError("unsupported --format '" + f + "'");
}

// Runs `one` per input; failures become JSON error records and the batch
// continues.
template <class F>
int each_query(const Options& o, F one) {
  int rc = kOk;
  for (const auto& q : inputs(o)) {
    try {
      std::cout << one(q);
    } catch (const std::exception& e) {
      nlohmann::json err = {{"error", error_kind(e)}, {"message", e.what()}, {"query", q}};
      std::cout << err.dump() << "\n";
      std::cerr << "wh2dl: " << e.what() << "\n";
      rc = kQueryFailed;
    }
  }
  return rc;
}

int run_tag(const Options& o) {
  check_format(o.format, {"tsv", "json"});
  return each_query(o, [&](const std::string& q) {
    auto seq = tokens(q, o.tagged);
    if (o.format == "tsv") return text::serialize_tsv(seq);
    nlohmann::json j;
    j["tokens"] = nlohmann::json::array();
    for (const auto& t : seq.tokens)
      j["tokens"].push_back({{"surface", t.surface}, {"lemma", t.lemma}, {"pos", text::to_string(t.pos)}});
    j["terminal"] = seq.terminal;
    return j.dump() + "\n";
  });
}

int run_characterize(const Options& o) {
  check_format(o.format, {"json"});
  return each_query(o, [&](const std::string& q) {
    return qct::render_json(qct::characterize(tokens(q, o.tagged))) + "\n";
  });
}

int run_translate(const Options& o) {
  check_format(o.format, {"dl", "json"});
  auto mode = translate::parse_nominal_mode(o.nominal_mode);
  if (!mode) throw UsageError("unknown --nominal-mode '" + o.nominal_mode + "'");
  std::optional<lexicon::HypernymLexicon> lex;
  std::optional<translate::ModifierLexicon> mods;
  translate::Context ctx;
  ctx.nominal = *mode;
  if (!o.lexicon.empty()) ctx.hypernyms = &lex.emplace(lexicon::load_lexicon(o.lexicon));
  if (!o.mod_lexicon.empty())
    ctx.modifiers = &mods.emplace(translate::load_modifier_lexicon(o.mod_lexicon));
  return each_query(o, [&](const std::string& q) {
    auto r = translate::translate(qct::characterize(tokens(q, o.tagged)), ctx);
    if (o.format == "json") return translate::render_json(r) + "\n";
    return translate::render_text(r);
  });
}

int run_eval(const Options& o) {
  check_format(o.format, {"table", "json", "csv"});
  if (o.corpus.empty()) throw UsageError("eval needs --corpus");
  auto corpus = eval::load_corpus(o.corpus);
  auto report = o.serial ? eval::evaluate(corpus) : eval::evaluate_parallel(corpus);
  std::cout << eval::render_report(report, *eval::parse_report_format(o.format));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Characterize wh-queries and translate them to description logic"};
  app.require_subcommand(1);
  Options o;

  auto* tag = app.add_subcommand("tag", "Tokenize and POS-tag a query");
  auto* chr = app.add_subcommand("characterize", "Fit a query into its QCT");
  auto* tr = app.add_subcommand("translate", "Translate a query to DL");
  auto* ev = app.add_subcommand("eval", "Score the characterizer on a corpus");
  for (auto* sub : {tag, chr, tr, ev}) sub->add_option("--format", o.format, "Output format");
  for (auto* sub : {tag, chr, tr}) {
    sub->add_option("query", o.input, "Query text; stdin when omitted");
    sub->add_flag("--tagged", o.tagged, "Input is word<TAB>tag lines");
  }
  tr->add_option("--lexicon", o.lexicon, "Hypernym TSV replacing the bundled one");
  tr->add_option("--mod-lexicon", o.mod_lexicon, "Measurable-modifier TSV");
  tr->add_option("--nominal-mode", o.nominal_mode, "paper-literal or nominal-strict");
  ev->add_option("--corpus", o.corpus, "JSON-lines corpus")->required();
  ev->add_flag("--serial", o.serial, "Judge entries on one thread");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*tag) {
      if (o.format.empty()) o.format = "tsv";
      return run_tag(o);
    }
    if (*chr) {
      if (o.format.empty()) o.format = "json";
      return run_characterize(o);
    }
    if (*tr) {
      if (o.format.empty()) o.format = "dl";
      return run_translate(o);
    }
    if (o.format.empty()) o.format = "table";
    return run_eval(o);
  } catch (const UsageError& e) {
    std::cerr << "wh2dl: " << e.what() << "\n";
    return kUsage;
  } catch (const IoError& e) {
    std::cerr << "wh2dl: " << e.what() << "\n";
    return kUsage;
  } catch (const eval::SchemaError& e) {
    std::cerr << "wh2dl: " << e.what() << "\n";
    return kUsage;
  } catch (const lexicon::DuplicateLemma& e) {
    std::cerr << "wh2dl: " << e.what() << "\n";
    return kUsage;
  }
}
