#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "wh2dl/eval/metrics.hpp"
#include "wh2dl/qct/qct.hpp"

namespace wh2dl::eval {

struct CorpusEntry {
  std::string id;
  std::string query;  // raw text, or word<TAB>tag lines
  qct::Form form = qct::Form::Simple;
  qct::QueryKind kind = qct::QueryKind::What;
  std::optional<nlohmann::json> gold;
  std::optional<std::vector<std::string>> gold_desire;
  std::size_t line = 0;

  bool tagged() const { return query.find('\t') != std::string::npos; }
};

class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

std::vector<CorpusEntry> parse_corpus(std::string_view jsonl);
// Throws IoError, SchemaError.
std::vector<CorpusEntry> load_corpus(const std::string& path);

struct Outcome {
  bool identified = false;
  bool correct = false;
  std::optional<qct::QCT> qct;
  std::string error;
};

Outcome judge(const CorpusEntry& e);

// Desire signature compared against goldDesire: explicit heads as lemmas,
// implicit desires by mode name, counted heads as "ImplicitCount(head)".
std::vector<std::string> desire_signature(const qct::QCT& q);

// "How" covers every how-kind.
std::string kind_category(qct::QueryKind k);

struct CCRow {
  std::string category;
  Counts counts;
  Metrics metrics;
};

struct CCReport {
  std::vector<CCRow> by_form;  // Simple, Complex, Compound, Total
  std::vector<CCRow> by_kind;  // How, What, When, Where, Which, Who, Total
};

CCRow make_row(std::string category, const Counts& c);

CCReport evaluate(const std::vector<CorpusEntry>& corpus);
// Same report; entries are judged on OpenMP threads.
CCReport evaluate_parallel(const std::vector<CorpusEntry>& corpus);
// Report from rows tallied elsewhere, kept in the given order in by_form.
CCReport evaluate(const std::vector<std::pair<std::string, Counts>>& rows);

std::vector<Outcome> judge_all(const std::vector<CorpusEntry>& corpus);
std::vector<Outcome> judge_all_parallel(const std::vector<CorpusEntry>& corpus);
CCReport tally(const std::vector<CorpusEntry>& corpus, const std::vector<Outcome>& outcomes);

enum class ReportFormat { Table, Json, Csv };
std::optional<ReportFormat> parse_report_format(std::string_view s);
std::string render_report(const CCReport& r, ReportFormat f);

}  // namespace wh2dl::eval
