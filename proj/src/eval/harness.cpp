#include "wh2dl/eval/harness.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "wh2dl/error.hpp"
#include "wh2dl/qct/characterizer.hpp"
#include "wh2dl/qct/io.hpp"
#include "wh2dl/text/tagger.hpp"

namespace wh2dl::eval {

namespace {

std::string required_string(const nlohmann::json& j, const char* key, std::size_t line) {
  if (!j.contains(key) || !j[key].is_string())
    throw SchemaError(line, std::string("missing string field '") + key + "'");
  return j[key].get<std::string>();
}

const std::vector<std::string>& form_categories() {
  static const std::vector<std::string> v = {"Simple", "Complex", "Compound"};
  return v;
}

const std::vector<std::string>& kind_categories() {
  static const std::vector<std::string> v = {"How", "What", "When", "Where", "Which", "Who"};
  return v;
}

}  // namespace

std::vector<CorpusEntry> parse_corpus(std::string_view jsonl) {
  std::vector<CorpusEntry> out;
  std::set<std::string> ids;
  std::istringstream in{std::string(jsonl)};
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw SchemaError(line, e.what());
    }
    if (!j.is_object()) throw SchemaError(line, "entry is not an object");
    CorpusEntry e;
    e.line = line;
    e.id = required_string(j, "id", line);
    if (!ids.insert(e.id).second) throw SchemaError(line, "duplicate id '" + e.id + "'");
    e.query = required_string(j, "query", line);
    auto form = qct::parse_form(required_string(j, "form", line));
    if (!form) throw SchemaError(line, "unknown form");
    e.form = *form;
    auto kind = qct::parse_kind(required_string(j, "kind", line));
    if (!kind) throw SchemaError(line, "unknown kind");
    e.kind = *kind;
    if (j.contains("gold") && !j["gold"].is_null()) {
      if (!j["gold"].is_object()) throw SchemaError(line, "gold must be an object");
      e.gold = j["gold"];
    }
    if (j.contains("goldDesire") && !j["goldDesire"].is_null()) {
      try {
        e.gold_desire = j["goldDesire"].get<std::vector<std::string>>();
      } catch (const nlohmann::json::exception&) {
        throw SchemaError(line, "goldDesire must be a list of strings");
      }
    }
    if (!e.gold && !e.gold_desire) throw SchemaError(line, "neither gold nor goldDesire given");
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<CorpusEntry> load_corpus(const std::string& path) { return parse_corpus(read_file(path)); }

std::vector<std::string> desire_signature(const qct::QCT& q) {
  std::vector<std::string> sig;
  for (const auto& s : q.subqueries)
    for (const auto& d : s.desires) {
      std::string mode(qct::to_string(d.mode));
      if (d.mode == qct::DesireMode::Explicit)
        sig.push_back(d.joined_head());
      else if (d.mode == qct::DesireMode::ImplicitCount && !d.head.empty())
        sig.push_back(mode + "(" + d.joined_head() + ")");
      else
        sig.push_back(mode);
    }
  return sig;
}

std::string kind_category(qct::QueryKind k) {
  switch (k) {
    case qct::QueryKind::HowQuantitative:
    case qct::QueryKind::HowState:
    case qct::QueryKind::HowComputational: return "How";
    default: return std::string(qct::to_string(k));
  }
}

Outcome judge(const CorpusEntry& e) {
  Outcome o;
  try {
    auto seq = e.tagged() ? text::parse_tagged_input(e.query) : text::tag_tokens(e.query);
    o.qct = qct::characterize(seq);
  } catch (const std::exception& ex) {
    o.error = ex.what();
    return o;
  }
  o.identified = true;
  const auto& q = *o.qct;
  bool ok = q.form == e.form && !q.subqueries.empty() && q.subqueries.front().kind == e.kind;
  if (e.gold)
    ok = ok && qct::matches_gold(qct::to_json(q), *e.gold);
  else
    ok = ok && desire_signature(q) == *e.gold_desire;
  o.correct = ok;
  return o;
}

std::vector<Outcome> judge_all(const std::vector<CorpusEntry>& corpus) {
  std::vector<Outcome> out;
  out.reserve(corpus.size());
  for (const auto& e : corpus) out.push_back(judge(e));
  return out;
}

std::vector<Outcome> judge_all_parallel(const std::vector<CorpusEntry>& corpus) {
  std::vector<Outcome> out(corpus.size());
  const long n = static_cast<long>(corpus.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (long i = 0; i < n; ++i) out[i] = judge(corpus[i]);
  return out;
}

CCRow make_row(std::string category, const Counts& c) {
  return CCRow{std::move(category), c, compute_metrics(c)};
}

CCReport tally(const std::vector<CorpusEntry>& corpus, const std::vector<Outcome>& outcomes) {
  CCReport r;
  if (corpus.empty()) return r;
  std::map<std::string, Counts> forms, kinds;
  Counts total;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    Counts c{1, outcomes[i].identified ? 1u : 0u, outcomes[i].correct ? 1u : 0u};
    forms[std::string(qct::to_string(corpus[i].form))] += c;
    kinds[kind_category(corpus[i].kind)] += c;
    total += c;
  }
  for (const auto& f : form_categories()) r.by_form.push_back(make_row(f, forms[f]));
  r.by_form.push_back(make_row("Total", total));
  for (const auto& k : kind_categories()) r.by_kind.push_back(make_row(k, kinds[k]));
  r.by_kind.push_back(make_row("Total", total));
  return r;
}

CCReport evaluate(const std::vector<CorpusEntry>& corpus) { return tally(corpus, judge_all(corpus)); }

CCReport evaluate_parallel(const std::vector<CorpusEntry>& corpus) {
  return tally(corpus, judge_all_parallel(corpus));
}

CCReport evaluate(const std::vector<std::pair<std::string, Counts>>& rows) {
  CCReport r;
  for (const auto& [name, c] : rows) r.by_form.push_back(make_row(name, c));
  return r;
}

std::optional<ReportFormat> parse_report_format(std::string_view s) {
  if (s == "table") return ReportFormat::Table;
  if (s == "json") return ReportFormat::Json;
  if (s == "csv") return ReportFormat::Csv;
  return std::nullopt;
}

namespace {

nlohmann::json metric_json(std::optional<long> v) {
  if (!v) return nullptr;
  return static_cast<double>(*v) / 100.0;
}

nlohmann::json rows_json(const std::vector<CCRow>& rows) {
  auto arr = nlohmann::json::array();
  for (const auto& row : rows)
    arr.push_back({{"category", row.category},
                   {"N", row.counts.n},
                   {"N_I", row.counts.n_i},
                   {"N_CI", row.counts.n_ci},
                   {"recall", metric_json(row.metrics.recall)},
                   {"precision", metric_json(row.metrics.precision)},
                   {"f1", metric_json(row.metrics.f1)}});
  return arr;
}

std::string numbers(const CCRow& row, std::string_view sep) {
  std::ostringstream out;
  out << row.counts.n << sep << row.counts.n_i << sep << row.counts.n_ci << sep
      << format_hundredths(row.metrics.recall) << sep << format_hundredths(row.metrics.precision)
      << sep << format_hundredths(row.metrics.f1);
  return out.str();
}

void table(std::ostringstream& out, const std::string& title, const std::vector<CCRow>& rows) {
  std::size_t width = title.size();
  for (const auto& row : rows) width = std::max(width, row.category.size());
  auto pad = [&](const std::string& s) { return s + std::string(width - s.size(), ' '); };
  out << pad(title) << "  N  N_I  N_CI  CC-Re.  CC-Pr.  CC-F1\n";
  for (const auto& row : rows) out << pad(row.category) << "  " << numbers(row, "  ") << "\n";
}

}  // namespace

std::string render_report(const CCReport& r, ReportFormat f) {
  std::ostringstream out;
  switch (f) {
    case ReportFormat::Json:
      out << nlohmann::json{{"by_form", rows_json(r.by_form)}, {"by_kind", rows_json(r.by_kind)}}
                 .dump(2)
          << "\n";
      break;
    case ReportFormat::Csv: {
      out << "group,category,N,N_I,N_CI,recall,precision,f1\n";
      auto emit = [&](const char* group, const std::vector<CCRow>& rows) {
        for (const auto& row : rows) {
          auto cell = [](std::optional<long> v) { return v ? format_hundredths(v) : std::string(); };
          out << group << "," << row.category << "," << row.counts.n << "," << row.counts.n_i << ","
              << row.counts.n_ci << "," << cell(row.metrics.recall) << ","
              << cell(row.metrics.precision) << "," << cell(row.metrics.f1) << "\n";
        }
      };
      emit("form", r.by_form);
      emit("kind", r.by_kind);
      break;
    }
    case ReportFormat::Table:
      table(out, "Query Types", r.by_form);
      if (!r.by_kind.empty()) {
        out << "\n";
        table(out, "Query Kinds", r.by_kind);
      }
      break;
  }
  return out.str();
}

}  // namespace wh2dl::eval
