// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"
#include "wh2dl/eval/harness.hpp"
#include "wh2dl/qct/characterizer.hpp"
#include "wh2dl/text/tagger.hpp"
#include "wh2dl/translate/translator.hpp"

using namespace wh2dl;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

text::TokenSequence tokens(const std::string& q) {
  return q.find('\t') != std::string::npos ? text::parse_tagged_input(q) : text::tag_tokens(q);
}

translate::TranslationResult tr(const std::string& q,
                                translate::NominalMode m = translate::NominalMode::PaperLiteral) {
  translate::Context ctx;
  ctx.nominal = m;
  return translate::translate(qct::characterize(tokens(q)), ctx);
}

std::string pct(const std::optional<long>& v) { return eval::format_hundredths(v); }

Verdict golden_corpus() {
  auto start = std::chrono::steady_clock::now();
  auto corpus = eval::load_corpus(testing::source_path("corpus/golden.jsonl"));
  auto report = eval::evaluate(corpus);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const auto& total = report.by_form.back();
  Verdict v;
  v.pass = corpus.size() == 13 && total.counts.n_ci == total.counts.n &&
           total.metrics.precision == 10000 && secs < 1.0;
  std::ostringstream d;
  d << total.counts.n_ci << "/" << total.counts.n << " exact, CC-Pr " << pct(total.metrics.precision)
    << ", " << secs << " s";
  v.detail = d.str();
  return v;
}

Verdict metrics_and_recall() {
  struct Row {
    eval::Counts c;
    long re, pr, f1;
  };
  const std::vector<Row> table = {{{676, 642, 642}, 9497, 10000, 9742},
                                  {{147, 140, 140}, 9523, 10000, 9755},
                                  {{69, 64, 64}, 9275, 10000, 9623},
                                  {{892, 843, 843}, 9450, 10000, 9717}};
  Verdict v;
  auto near = [](std::optional<long> got, long want) { return got && std::abs(*got - want) <= 1; };
  for (const auto& r : table) {
    auto m = eval::compute_metrics(r.c);
    if (!near(m.recall, r.re) || !near(m.precision, r.pr) || !near(m.f1, r.f1)) v.pass = false;
  }
  auto corpus = eval::load_corpus(testing::source_path("corpus/extended.jsonl"));
  auto total = eval::evaluate_parallel(corpus).by_form.back();
  v.pass = v.pass && corpus.size() >= 60 && total.metrics.recall >= 9000 &&
           total.metrics.precision == 10000;
  v.detail = "4 metric rows checked; extended corpus N=" + std::to_string(corpus.size()) + " CC-Re " +
             pct(total.metrics.recall) + " CC-Pr " + pct(total.metrics.precision);
  return v;
}

Verdict oracle_suite() {
  auto oracles = testing::read_jsonl("tests/data/translator_oracles.jsonl");
  std::size_t ok = 0;
  std::vector<std::string> failed;
  for (const auto& o : oracles) {
    try {
      auto r = tr(o["query"], *translate::parse_nominal_mode(o["nominalMode"].get<std::string>()));
      bool good = std::string(translate::to_string(r.form.mode)) == o["mode"] &&
                  dl::structurally_equal(r.form.desire, dl::parse_concept(o["desire"].get<std::string>()));
      std::multiset<std::string> got, want;
      for (const auto& a : r.axioms()) got.insert(dl::serialize(dl::normalize(a)));
      for (const auto& a : o["axioms"])
        want.insert(dl::serialize(dl::normalize(dl::parse_axiom(a.get<std::string>()))));
      if (good && got == want)
        ++ok;
      else
        failed.push_back(o["id"]);
    } catch (const std::exception&) {
      failed.push_back(o["id"]);
    }
  }
  Verdict v;
  v.pass = oracles.size() >= 15 && ok == oracles.size();
  v.detail = std::to_string(ok) + "/" + std::to_string(oracles.size()) + " structurally equal";
  for (const auto& f : failed) v.detail += " " + f;
  return v;
}

bool closed(const translate::TranslationResult& r) {
  if (!dl::check_fragment(r.form.desire)) return false;
  for (const auto& a : r.axioms())
    if (!dl::check_fragment(a)) return false;
  for (const auto& s : r.sub)
    if (!closed(s)) return false;
  return true;
}

Verdict fragment_closure() {
  std::size_t outputs = 0, good = 0, failures = 0;
  for (const auto& e : testing::read_jsonl("corpus/extended.jsonl")) {
    try {
      auto r = tr(e["query"]);
      ++outputs;
      good += closed(r);
    } catch (const std::exception&) {
      ++failures;
    }
  }
  Verdict v;
  v.pass = outputs > 0 && good == outputs;
  v.detail = std::to_string(good) + "/" + std::to_string(outputs) + " outputs in fragment (" +
             std::to_string(failures) + " queries without output)";
  return v;
}

Verdict round_trip() {
  testing::ExprGen gen(7);
  std::size_t ok = 0;
  const std::size_t n = 1000;
  for (std::size_t i = 0; i < n; ++i) {
    auto c = gen.concept_expr(6);
    try {
      if (testing::depth(c) <= 6 && dl::structurally_equal(dl::parse_dl(dl::serialize(c)), dl::Expr(c))) ++ok;
    } catch (const dl::SyntaxError&) {
    }
  }
  Verdict v;
  v.pass = ok == n;
  v.detail = std::to_string(ok) + "/" + std::to_string(n) + " expressions (depth <= 6)";
  return v;
}

Verdict structural_invariants() {
  static const char* words[] = {"big", "old", "red", "wooden", "tall", "famous", "green", "ancient"};
  testing::ExprGen gen(11);
  std::size_t chain_cases = 0, chain_ok = 0;
  for (int i = 0; i < 24; ++i) {
    std::vector<std::string> mods;
    int k = 1 + gen.pick(5);
    for (int j = 0; j < k; ++j) mods.push_back(words[gen.pick(8)] + std::to_string(j));
    auto axioms = translate::apply_modifier_rule(mods, "house");
    bool linked = axioms.size() == mods.size() && axioms.back().rhs.kind() == dl::Concept::Kind::Atomic;
    for (std::size_t j = 1; linked && j < axioms.size(); ++j) linked = axioms[j].rhs == axioms[j - 1].lhs;
    ++chain_cases;
    chain_ok += linked;
  }
  // Through the whole pipeline as well.
  for (int k = 1; k <= 4; ++k) {
    std::string q = "What are some";
    for (int j = 0; j < k; ++j) q += std::string(" ") + words[j];
    q += " houses?";
    ++chain_cases;
    chain_ok += tr(q).support.size() == static_cast<std::size_t>(k);
  }

  std::size_t temporal_cases = 0, temporal_ok = 0;
  for (const char* q : {"What can be sometimes observed in the morning sky?", "What is always observed in the evening sky?",
                        "What is often seen in the forest?", "Who always visits the library?"}) {
    ++temporal_cases;
    auto r = tr(q);
    bool ok = r.support.size() == 3 && r.support[0].kind == dl::Axiom::Kind::DisjointWith &&
              r.support[1].kind == dl::Axiom::Kind::SubClassOf && r.support[2].kind == dl::Axiom::Kind::SubClassOf &&
              r.support[0].lhs.role().temporal == dl::Temporal::Sometimes &&
              r.support[0].rhs.role().temporal == dl::Temporal::Always && !r.support[1].rhs.role().temporal;
    temporal_ok += ok;
  }

  std::size_t count_cases = 0, count_ok = 0;
  for (const auto& e : testing::read_jsonl("corpus/extended.jsonl")) {
    if (e["kind"] != "HowQuantitative") continue;
    ++count_cases;
    auto c = tr(e["query"]).form.desire;
    count_ok += c.kind() == dl::Concept::Kind::Intersection && c.operands().size() == 2 &&
                c.operands()[0].kind() == dl::Concept::Kind::Count &&
                c.operands()[1].kind() == dl::Concept::Kind::Exists &&
                c.operands()[1].role() == dl::Role::inv("hasCount");
  }
  Verdict v;
  v.pass = chain_cases >= 20 && chain_ok == chain_cases && temporal_ok == temporal_cases &&
           count_cases > 0 && count_ok == count_cases;
  v.detail = "chains " + std::to_string(chain_ok) + "/" + std::to_string(chain_cases) + ", temporal " +
             std::to_string(temporal_ok) + "/" + std::to_string(temporal_cases) + ", count shape " +
             std::to_string(count_ok) + "/" + std::to_string(count_cases);
  return v;
}

Verdict split_union() {
  std::size_t cases = 0, ok = 0;
  std::string failed;
  for (const auto& e : testing::read_jsonl("tests/data/compound_splits.jsonl")) {
    std::string q = e["query"];
    auto qct = qct::characterize(tokens(q));
    if (!translate::split_compound(qct).split) continue;
    ++cases;
    auto whole = translate::translate(qct);
    std::vector<dl::Concept> parts;
    std::set<std::string> support;
    for (const auto& p : e["parts"]) {
      auto r = tr(p);
      parts.push_back(r.form.desire);
      for (const auto& a : r.support) support.insert(dl::serialize(dl::normalize(a)));
    }
    std::set<std::string> whole_support;
    for (const auto& a : whole.support) whole_support.insert(dl::serialize(dl::normalize(a)));
    if (dl::structurally_equal(whole.form.desire, dl::Concept::union_of(parts)) && whole_support == support &&
        whole.sub.size() == parts.size())
      ++ok;
    else
      failed += " [" + q + "]";
  }
  Verdict v;
  v.pass = cases > 0 && ok == cases;
  v.detail = std::to_string(ok) + "/" + std::to_string(cases) + " splittable compounds match" + failed;
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"1 golden-corpus characterization", golden_corpus},
      {"2 metric arithmetic and extended-corpus recall", metrics_and_recall},
      {"3 translator oracle suite", oracle_suite},
      {"4 fragment closure", fragment_closure},
      {"5 DL round trip", round_trip},
      {"6 structural invariants", structural_invariants},
      {"7 split/union equivalence", split_union},
  };
  bool all = true;
  for (const auto& [name, check] : criteria) {
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    all = all && v.pass;
    std::cout << (v.pass ? "PASS" : "FAIL") << "  " << name << ": " << v.detail << "\n";
  }
  return all ? 0 : 1;
}
