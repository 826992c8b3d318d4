#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "support.hpp"
#include "wh2dl/error.hpp"
#include "wh2dl/eval/harness.hpp"

using namespace wh2dl;
using namespace wh2dl::eval;

namespace {

std::string row(const Counts& c) {
  auto m = compute_metrics(c);
  return format_hundredths(m.recall) + " " + format_hundredths(m.precision) + " " + format_hundredths(m.f1);
}

}  // namespace

TEST_CASE("metric arithmetic") {
  CHECK(row({892, 843, 843}) == "94.50 100.00 97.17");
  CHECK(row({676, 642, 642}) == "94.97 100.00 97.42");
  CHECK(row({147, 140, 140}) == "95.23 100.00 97.55");
  CHECK(row({69, 64, 64}) == "92.75 100.00 96.23");
  CHECK(row({10, 10, 10}) == "100.00 100.00 100.00");
  CHECK(row({5, 0, 0}) == "0.00 — —");
  CHECK(row({0, 0, 0}) == "— — —");
  CHECK(row({4, 4, 0}) == "0.00 0.00 0.00");
  CHECK_THROWS_AS(compute_metrics({1, 2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(compute_metrics({3, 1, 2}), std::invalid_argument);
}

TEST_CASE("table row rendering") {
  auto report = evaluate(std::vector<std::pair<std::string, Counts>>{{"Total", {892, 843, 843}}});
  auto text = render_report(report, ReportFormat::Table);
  CHECK(text.find("892  843  843  94.50  100.00  97.17") != std::string::npos);
  auto empty = render_report(CCReport{}, ReportFormat::Table);
  CHECK(empty == "Query Types  N  N_I  N_CI  CC-Re.  CC-Pr.  CC-F1\n");
}

TEST_CASE("corpus loading") {
  CHECK(load_corpus(testing::source_path("corpus/golden.jsonl")).size() == 13);
  CHECK(load_corpus(testing::source_path("corpus/extended.jsonl")).size() >= 60);
  CHECK(parse_corpus("").empty());
  CHECK_THROWS_AS(load_corpus("/nonexistent.jsonl"), IoError);
  try {
    parse_corpus(R"({"id":"a","query":"Who runs?","form":"Simple","kind":"Who","goldDesire":[]})"
                 "\n"
                 R"({"id":"b","query":"Who runs?","form":"Simple","kind":"Who"})");
    FAIL("expected SchemaError");
  } catch (const SchemaError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_corpus(R"({"query":"x","form":"Simple","kind":"Who","goldDesire":[]})"), SchemaError);
  CHECK_THROWS_AS(parse_corpus(R"({"id":"a","query":"x","form":"Simple","kind":"Who","goldDesire":[]})"
                               "\n"
                               R"({"id":"a","query":"y","form":"Simple","kind":"Who","goldDesire":[]})"),
                  SchemaError);
  CHECK_THROWS_AS(parse_corpus("{not json"), SchemaError);
  CHECK_THROWS_AS(parse_corpus(R"({"id":"a","query":"x","form":"Odd","kind":"Who","goldDesire":[]})"), SchemaError);
}

TEST_CASE("counting soundness") {
  auto corpus = parse_corpus(
      R"({"id":"1","query":"Who runs?","form":"Simple","kind":"Who","goldDesire":["ImplicitDefinition"]})"
      "\n"
      R"({"id":"2","query":"Who runs?","form":"Simple","kind":"Who","goldDesire":["runner"]})"
      "\n"
      R"({"id":"3","query":"Why is the sky blue?","form":"Simple","kind":"What","goldDesire":["sky"]})"
      "\n"
      R"({"id":"4","query":"What is a cat?","form":"Complex","kind":"What","goldDesire":["ImplicitDefinition"]})");
  auto report = evaluate(corpus);
  const auto& total = report.by_form.back();
  CHECK(total.category == "Total");
  CHECK(total.counts == Counts{4, 3, 1});
  CHECK(report.by_kind.back().counts == total.counts);
  CHECK(report.by_form[0].counts == Counts{3, 2, 1});
}

TEST_CASE("parallel evaluation matches serial") {
  auto corpus = load_corpus(testing::source_path("corpus/extended.jsonl"));
  auto serial = render_report(evaluate(corpus), ReportFormat::Json);
  CHECK(render_report(evaluate_parallel(corpus), ReportFormat::Json) == serial);
  CHECK(render_report(evaluate(corpus), ReportFormat::Json) == serial);
}

TEST_CASE("golden corpus scores perfectly") {
  auto report = evaluate(load_corpus(testing::source_path("corpus/golden.jsonl")));
  CHECK(report.by_form.back().counts == Counts{13, 13, 13});
}

TEST_CASE("json and csv formats") {
  auto report = evaluate(load_corpus(testing::source_path("corpus/golden.jsonl")));
  auto j = nlohmann::json::parse(render_report(report, ReportFormat::Json));
  CHECK(j["by_form"].size() == 4);
  CHECK(j["by_kind"].size() == 7);
  CHECK(j["by_form"][3]["precision"] == 100.0);
  auto csv = render_report(report, ReportFormat::Csv);
  CHECK(csv.rfind("group,category,N,N_I,N_CI,recall,precision,f1\n", 0) == 0);
  CHECK(csv.find("form,Total,13,13,13,100.00,100.00,100.00") != std::string::npos);
  CHECK(parse_report_format("table") == ReportFormat::Table);
  CHECK_FALSE(parse_report_format("xml").has_value());
}
