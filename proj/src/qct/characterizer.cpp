#include "wh2dl/qct/characterizer.hpp"

#include <algorithm>
#include <unordered_set>

namespace wh2dl::qct {

using text::Pos;
using text::Token;

namespace {

bool in(std::string_view w, std::initializer_list<std::string_view> set) {
  return std::find(set.begin(), set.end(), w) != set.end();
}

bool is_be(std::string_view w) { return in(w, {"is", "are", "was", "were", "be", "am", "been", "being"}); }
bool is_do(std::string_view w) { return in(w, {"do", "does", "did"}); }
bool is_have(std::string_view w) { return in(w, {"has", "have", "had"}); }
bool is_temporal(std::string_view w) { return in(w, {"sometimes", "always", "often", "never"}); }
bool is_clause_word(std::string_view w) {
  return in(w, {"which", "who", "whom", "that", "when", "where", "whose"});
}
bool is_noun_pos(Pos p) { return text::is_noun(p); }
bool is_verb_pos(Pos p) {
  return p == Pos::VB || p == Pos::VBZ || p == Pos::VBD || p == Pos::VBN || p == Pos::MD;
}

bool np_token(const Token& t) {
  switch (t.pos) {
    case Pos::DT: case Pos::JJ: case Pos::JJS: case Pos::NN: case Pos::NNS: case Pos::NNP:
    case Pos::NNPS: case Pos::VBG:
      return true;
    case Pos::RB:
      return !is_temporal(t.lemma);
    default:
      return false;
  }
}

bool is_pronoun(const Token& t) {
  return t.pos == Pos::Other && in(t.lemma, {"it", "ones", "they", "them", "you", "i", "we"});
}

bool dropped_pronoun(const Token& t) { return in(t.lemma, {"you", "i", "we"}); }

Connective connective_of(const Token& t) { return t.lemma == "or" ? Connective::Or : Connective::And; }

// Tokens that do not take part in any slot.
std::vector<Token> preprocess(const text::TokenSequence& seq) {
  const auto& in_toks = seq.tokens;
  std::vector<Token> out;
  for (std::size_t i = 0; i < in_toks.size(); ++i) {
    const Token& t = in_toks[i];
    if (t.pos == Pos::Other && t.surface != "," && !is_pronoun(t)) continue;
    if (t.lemma == "also" || t.lemma == "respectively") continue;
    if (t.lemma == "as" && i + 1 < in_toks.size() && in_toks[i + 1].lemma == "well") {
      ++i;
      continue;
    }
    // "one of which" reads as the clause word alone.
    if (t.lemma == "one" && i + 2 < in_toks.size() && in_toks[i + 1].lemma == "of" &&
        text::is_wh(in_toks[i + 2].pos)) {
      ++i;
      continue;
    }
    out.push_back(t);
  }
  return out;
}

NounPhrase make_np(const std::vector<Token>& toks, std::size_t b, std::size_t e) {
  NounPhrase np;
  std::vector<const Token*> content;
  for (std::size_t i = b; i < e; ++i) {
    if (toks[i].pos == Pos::DT) {
      np.quant.push_back(toks[i].lemma);
    } else {
      content.push_back(&toks[i]);
    }
  }
  if (content.empty()) return np;
  std::size_t head_begin = content.size() - 1;
  if (is_noun_pos(content.back()->pos)) {
    while (head_begin > 0 && is_noun_pos(content[head_begin - 1]->pos)) --head_begin;
  }
  np.proper = true;
  for (std::size_t i = 0; i < content.size(); ++i) {
    const Token& t = *content[i];
    if (i < head_begin) {
      np.mods.push_back(t.lemma);
      np.mod_pos.push_back(t.pos);
    } else {
      np.head.push_back(t.lemma);
      np.head_index.push_back(t.index);
      if (t.pos != Pos::NNP && t.pos != Pos::NNPS) np.proper = false;
    }
  }
  return np;
}

struct Item {
  enum Type { NP, Rel, Cl, CC, Comma, Pron } type;
  std::size_t b = 0, e = 0;  // token range
};

std::vector<Item> chunk(const std::vector<Token>& toks, std::size_t b, std::size_t e) {
  std::vector<Item> items;
  std::size_t i = b;
  auto rel_token = [&](std::size_t k, bool in_run) {
    const Token& t = toks[k];
    if (is_verb_pos(t.pos) || t.pos == Pos::PP) return true;
    if (t.pos == Pos::RB && is_temporal(t.lemma)) return true;
    return in_run && t.pos == Pos::VBG && toks[k - 1].pos == Pos::PP;
  };
  while (i < e) {
    const Token& t = toks[i];
    if (t.surface == ",") {
      items.push_back({Item::Comma, i, i + 1});
      ++i;
    } else if (t.pos == Pos::CC) {
      items.push_back({Item::CC, i, i + 1});
      ++i;
    } else if (text::is_wh(t.pos) && is_clause_word(t.lemma)) {
      items.push_back({Item::Cl, i, i + 1});
      ++i;
    } else if (is_pronoun(t)) {
      if (!dropped_pronoun(t)) items.push_back({Item::Pron, i, i + 1});
      ++i;
    } else if (rel_token(i, false)) {
      std::size_t j = i + 1;
      while (j < e && rel_token(j, true)) ++j;
      items.push_back({Item::Rel, i, j});
      i = j;
    } else if (np_token(t)) {
      std::size_t j = i + 1;
      while (j < e && np_token(toks[j])) ++j;
      items.push_back({Item::NP, i, j});
      i = j;
    } else {
      throw CharacterizationFailure("cannot place token '" + t.surface + "'");
    }
  }
  return items;
}

bool aux_only(const std::vector<const Token*>& run) {
  for (std::size_t i = 0; i < run.size(); ++i) {
    const Token& t = *run[i];
    if (!is_verb_pos(t.pos) && t.pos != Pos::VBG) continue;
    if (is_be(t.lemma) || is_do(t.lemma) || t.pos == Pos::MD) continue;
    if (is_have(t.lemma) && i + 1 < run.size() && is_verb_pos(run[i + 1]->pos)) continue;
    return false;
  }
  return true;
}

struct Work {
  std::optional<std::string> cl;
  std::vector<const Token*> prefix, suffix;
  std::vector<NounPhrase> inputs;
  std::vector<std::optional<Connective>> conns;

  bool relation_empty() const { return prefix.empty() && suffix.empty(); }
};

struct Head {
  QueryKind kind;
  std::size_t next;             // first token after wh (+ measure word)
  std::optional<std::string> measure;
};

Head classify_at(const std::vector<Token>& toks, std::size_t b, std::size_t e) {
  const Token& wh = toks[b];
  const std::string& w = wh.lemma;
  if (w == "why") throw UnsupportedKind("why queries are not supported");
  if (w == "what") return {QueryKind::What, b + 1, {}};
  if (w == "which" || w == "whose") return {QueryKind::Which, b + 1, {}};
  if (w == "who" || w == "whom") return {QueryKind::Who, b + 1, {}};
  if (w == "when") return {QueryKind::When, b + 1, {}};
  if (w == "where") return {QueryKind::Where, b + 1, {}};
  if (w == "how") {
    if (b + 1 >= e) throw CharacterizationFailure("bare how");
    const Token& n = toks[b + 1];
    if (n.lemma == "much" || n.lemma == "many") return {QueryKind::HowQuantitative, b + 2, {}};
    if (n.pos == Pos::JJ || n.pos == Pos::JJS || n.pos == Pos::RB) {
      return {QueryKind::HowComputational, b + 2, n.lemma};
    }
    if (is_do(n.lemma) || n.pos == Pos::MD) {
      throw UnsupportedKind("procedural how queries are not supported");
    }
    if (is_verb_pos(n.pos)) {
      for (std::size_t i = b + 2; i < e; ++i) {
        const Token& t = toks[i];
        const bool verb = t.pos == Pos::VB || t.pos == Pos::VBZ || t.pos == Pos::VBD ||
                          t.pos == Pos::VBN || t.pos == Pos::VBG;
        if (verb && !is_be(t.lemma) && !is_do(t.lemma)) {
          throw UnsupportedKind("procedural how queries are not supported");
        }
      }
    }
    return {QueryKind::HowState, b + 1, {}};
  }
  throw CharacterizationFailure("unexpected query word '" + wh.surface + "'");
}

bool starts_sub(const std::vector<Token>& toks, std::size_t i) {
  const Token& t = toks[i];
  return (t.pos == Pos::WP || t.pos == Pos::WRB || (t.pos == Pos::WDT && t.lemma != "that")) &&
         i > 0 && toks[i - 1].pos == Pos::CC;
}

struct Segment {
  std::size_t b, e;
};

class Parser {
 public:
  explicit Parser(const text::TokenSequence& seq) : toks_(preprocess(seq)) {
    if (toks_.empty()) throw CharacterizationFailure("empty query");
    std::size_t start = 0;
    if (toks_[0].pos == Pos::PP && toks_.size() > 1 && text::is_wh(toks_[1].pos)) {
      lead_prep_ = &toks_[0];
      start = 1;
    }
    if (!text::is_wh(toks_[start].pos)) {
      bool any = std::any_of(toks_.begin(), toks_.end(),
                             [](const Token& t) { return text::is_wh(t.pos); });
      if (!any) throw NoWhToken();
      throw CharacterizationFailure("query does not open with a wh-word");
    }
    std::size_t b = start;
    for (std::size_t i = start + 1; i < toks_.size(); ++i) {
      if (starts_sub(toks_, i)) {
        segments_.push_back({b, i - 1});
        joins_.push_back(connective_of(toks_[i - 1]));
        b = i;
      }
    }
    segments_.push_back({b, toks_.size()});
  }

  QueryKind first_kind() const {
    return classify_at(toks_, segments_[0].b, segments_[0].e).kind;
  }

  QCT run() {
    QCT q;
    for (std::size_t s = 0; s < segments_.size(); ++s) {
      if (s > 0) q.cc.push_back(joins_[s - 1]);
      parse_segment(segments_[s], s == 0, q);
    }
    q.form = infer_form(q);
    return q;
  }

 private:
  NounPhrase pronoun_np(const Token& t, const QCT& q, const SubQCT* current) const {
    if (t.lemma == "ones") {
      const SubQCT* src = !q.subqueries.empty() ? &q.subqueries.back() : current;
      if (!src || src->desires.empty() || src->desires[0].head.empty()) {
        throw CharacterizationFailure("'ones' has no antecedent desire");
      }
      NounPhrase np = src->desires[0];
      return np;
    }
    for (auto it = q.subqueries.rbegin(); it != q.subqueries.rend(); ++it) {
      for (const auto& c : it->clauses) {
        if (!c.inputs.empty()) return c.inputs.front();
      }
    }
    throw CharacterizationFailure("pronoun '" + t.surface + "' has no antecedent");
  }

  void parse_segment(Segment seg, bool first, QCT& q) {
    Head head = classify_at(toks_, seg.b, seg.e);
    SubQCT sub;
    sub.kind = head.kind;
    std::size_t p = head.next;
    std::optional<NounPhrase> inverted;
    bool kind_of = false;
    auto at = [&](std::size_t i) -> const Token* { return i < seg.e ? &toks_[i] : nullptr; };

    const bool nominal_wh = sub.kind == QueryKind::What || sub.kind == QueryKind::Which;
    if (nominal_wh && at(p + 1) && in(toks_[p].lemma, {"kind", "type", "sort"}) &&
        toks_[p + 1].lemma == "of") {
      sub.r1 = toks_[p].lemma + "_of";
      sub.r1_index = toks_[p + 1].index;
      kind_of = true;
      p += 2;
    }
    const bool takes_np = nominal_wh || sub.kind == QueryKind::HowQuantitative ||
                          sub.kind == QueryKind::HowComputational;
    if (takes_np && at(p)) {
      if (toks_[p].pos == Pos::Other && toks_[p].lemma == "ones") {
        inverted = pronoun_np(toks_[p], q, nullptr);
        ++p;
      } else if (np_token(toks_[p])) {
        std::size_t j = p;
        while (j < seg.e && np_token(toks_[j])) ++j;
        inverted = make_np(toks_, p, j);
        p = j;
      }
    }
    if (kind_of && !inverted) throw CharacterizationFailure("'kind of' without a noun phrase");

    if (kind_of) {
      if (at(p) && is_be(toks_[p].lemma)) ++p;
    } else if (inverted) {
      if (at(p) && toks_[p].pos == Pos::MD && at(p + 1) && toks_[p + 1].lemma == "be") {
        sub.r1 = toks_[p].lemma + "_be";
        sub.r1_index = toks_[p + 1].index;
        p += 2;
      } else if (at(p) && is_be(toks_[p].lemma)) {
        sub.r1 = toks_[p].lemma;
        sub.r1_index = toks_[p].index;
        ++p;
      }
    } else if (at(p)) {
      const Token& t = toks_[p];
      if (t.pos == Pos::MD) {
        if (at(p + 1) && toks_[p + 1].lemma == "be") {
          sub.r1 = t.lemma + "_be";
          sub.r1_index = toks_[p + 1].index;
          p += 2;
        } else {
          sub.r1 = t.lemma;
          sub.r1_index = toks_[p].index;
          ++p;
        }
      } else if (is_be(t.lemma) || is_do(t.lemma)) {
        sub.r1 = t.lemma;
        sub.r1_index = toks_[p].index;
        ++p;
      }
    }

    std::vector<Item> items = chunk(toks_, p, seg.e);
    std::size_t k = 0;

    if (inverted) {
      DesireSlot d;
      static_cast<NounPhrase&>(d) = *inverted;
      sub.desires.push_back(d);
    } else if (sub.kind == QueryKind::HowComputational) {
      DesireSlot d;
      d.head = {*head.measure};
      sub.desires.push_back(d);
    } else if (nominal_wh || sub.kind == QueryKind::Who) {
      k = desire_list(items, sub);
    }

    std::optional<std::size_t> split = structures(items, k, sub, q, first);
    finish(sub);
    q.subqueries.push_back(std::move(sub));

    while (split) {
      // CC NP REL NP: an elliptical subquery sharing wh, kind and R1.
      const SubQCT& prev = q.subqueries.back();
      SubQCT next;
      next.kind = prev.kind;
      next.r1 = prev.r1;
      q.cc.push_back(connective_of(toks_[items[*split].b]));
      const Item& np = items[*split + 1];
      DesireSlot d;
      static_cast<NounPhrase&>(d) = make_np(toks_, np.b, np.e);
      next.desires.push_back(d);
      split = structures(items, *split + 2, next, q, false);
      finish(next);
      q.subqueries.push_back(std::move(next));
    }
  }

  // Leading NP list followed by a clause word or by REL NP: explicit desires.
  std::size_t desire_list(const std::vector<Item>& items, SubQCT& sub) {
    std::size_t i = 0;
    std::vector<NounPhrase> nps;
    std::vector<Connective> conns;
    while (i < items.size() && items[i].type == Item::NP) {
      nps.push_back(make_np(toks_, items[i].b, items[i].e));
      std::size_t j = i + 1;
      std::optional<Connective> c;
      while (j < items.size() && (items[j].type == Item::Comma || items[j].type == Item::CC)) {
        if (items[j].type == Item::CC) c = connective_of(toks_[items[j].b]);
        ++j;
      }
      if (j == i + 1 || j >= items.size() || items[j].type != Item::NP) {
        i = i + 1;
        break;
      }
      conns.push_back(c.value_or(Connective::And));
      i = j;
    }
    if (nps.empty() || i >= items.size()) return 0;
    const bool clause_follows = items[i].type == Item::Cl;
    const bool relation_follows = items[i].type == Item::Rel && i + 1 < items.size() &&
                                  (items[i + 1].type == Item::NP || items[i + 1].type == Item::Pron);
    if (!clause_follows && !relation_follows) return 0;
    for (auto& np : nps) {
      DesireSlot d;
      static_cast<NounPhrase&>(d) = std::move(np);
      sub.desires.push_back(std::move(d));
    }
    sub.dcc = conns;
    return i;
  }

  // Fills sub.clauses from items[k..]; returns the CC position when an
  // elliptical subquery starts there.
  std::optional<std::size_t> structures(const std::vector<Item>& items, std::size_t k, SubQCT& sub,
                                        const QCT& q, bool first_segment) {
    std::vector<Work> works;
    std::optional<std::size_t> split;
    std::optional<Connective> pending;
    bool pending_comma = false;
    auto cur = [&]() -> Work* { return works.empty() ? nullptr : &works.back(); };
    auto rel_tokens = [&](const Item& it) {
      std::vector<const Token*> out;
      for (std::size_t i = it.b; i < it.e; ++i) out.push_back(&toks_[i]);
      return out;
    };
    auto is_np_item = [&](std::size_t i) {
      return i < items.size() && (items[i].type == Item::NP || items[i].type == Item::Pron);
    };

    for (std::size_t i = k; i < items.size(); ++i) {
      const Item& it = items[i];
      switch (it.type) {
        case Item::Cl:
          works.push_back(Work{toks_[it.b].lemma, {}, {}, {}, {}});
          pending.reset();
          pending_comma = false;
          break;
        case Item::Rel: {
          auto run = rel_tokens(it);
          Work* w = cur();
          if (is_np_item(i + 1)) {
            if (w && w->inputs.empty() && w->relation_empty()) {
              w->prefix = run;
            } else {
              works.push_back(Work{{}, run, {}, {}, {}});
            }
          } else if (w && !w->inputs.empty()) {
            Work* target = w;
            Work& head = works.front();
            if (i + 1 == items.size() && &head != w && head.relation_empty() && !head.cl &&
                !head.inputs.empty()) {
              target = &head;
            }
            target->suffix.insert(target->suffix.end(), run.begin(), run.end());
          } else if (w && w->relation_empty()) {
            w->prefix = run;
          } else {
            works.push_back(Work{{}, run, {}, {}, {}});
          }
          break;
        }
        case Item::NP:
        case Item::Pron: {
          NounPhrase np = it.type == Item::NP ? make_np(toks_, it.b, it.e)
                                              : pronoun_np(toks_[it.b], q, &sub);
          Work* w = cur();
          const bool joined = pending || pending_comma;
          if (w && joined && w->suffix.empty() && !w->inputs.empty()) {
            w->conns.push_back(pending ? std::optional<Connective>(*pending) : std::nullopt);
            w->inputs.push_back(std::move(np));
          } else if (w && w->inputs.empty() && w->suffix.empty()) {
            w->inputs.push_back(std::move(np));
          } else {
            works.push_back(Work{});
            works.back().inputs.push_back(std::move(np));
          }
          pending.reset();
          pending_comma = false;
          break;
        }
        case Item::CC:
          if (!works.empty() && i + 3 < items.size() && items[i + 1].type == Item::NP &&
              items[i + 2].type == Item::Rel && is_np_item(i + 3)) {
            split = i;
            i = items.size();
            break;
          }
          pending = connective_of(toks_[it.b]);
          break;
        case Item::Comma:
          pending_comma = true;
          break;
      }
    }

    if (first_segment && lead_prep_ && !works.empty()) works.front().suffix.push_back(lead_prep_);

    // "Who does singing?": a do-form R1 with no relation anywhere is the relation.
    if (sub.r1 && is_do(*sub.r1) && !works.empty() &&
        std::all_of(works.begin(), works.end(), [](const Work& w) { return w.relation_empty(); })) {
      auto aux = std::find_if(toks_.begin(), toks_.end(),
                              [&](const Token& t) { return t.index == *sub.r1_index; });
      works.front().prefix.insert(works.front().prefix.begin(), &*aux);
      sub.r1.reset();
      sub.r1_index.reset();
    }

    const bool explicit_d = !sub.desires.empty() && !sub.desires[0].head.empty() &&
                            (sub.kind == QueryKind::What || sub.kind == QueryKind::Which ||
                             sub.kind == QueryKind::Who);
    for (std::size_t s = 0; s < works.size(); ++s) {
      Work& w = works[s];
      ClauseStructure c;
      c.cl = w.cl;
      std::vector<const Token*> rel = w.prefix;
      rel.insert(rel.end(), w.suffix.begin(), w.suffix.end());
      const bool verb_first = !rel.empty() && is_verb_pos(rel.front()->pos);
      const bool has_other = std::any_of(rel.begin(), rel.end(),
                                         [](const Token* t) { return !is_be(t->lemma); });
      for (const Token* t : rel) {
        if (has_other && is_be(t->lemma)) continue;
        c.relation.push_back(t->lemma);
        c.relation_pos.push_back(t->pos);
        c.relation_index.push_back(t->index);
      }
      c.inverse = !w.suffix.empty() && aux_only(w.prefix);
      c.inputs = std::move(w.inputs);
      std::optional<Connective> last_cc;
      for (const auto& cc : w.conns) {
        if (cc) last_cc = cc;
      }
      for (const auto& cc : w.conns) c.cc.push_back(cc.value_or(last_cc.value_or(Connective::And)));

      if (s == 0) {
        c.attach = -1;
      } else {
        const auto& prev = sub.clauses[s - 1];
        if (prev.inputs.empty()) {
          c.attach = -1;
        } else if (c.cl) {
          c.attach = prev.inputs.back().proper ? -1 : static_cast<int>(s - 1);
        } else {
          c.attach = (!sub.r1 && explicit_d && verb_first) ? -1 : static_cast<int>(s - 1);
        }
      }
      sub.clauses.push_back(std::move(c));
    }
    return split;
  }

  void finish(SubQCT& sub) {
    if (sub.desires.empty()) sub.desires.emplace_back();
    sub.desires[0] = detect_implicit_desire(sub);
    for (std::size_t i = 1; i < sub.desires.size(); ++i) {
      SubQCT one = sub;
      one.desires = {sub.desires[i]};
      sub.desires[i] = detect_implicit_desire(one);
    }
    sub.subject = resolve_r2_subject(sub);

    if (sub.clauses.empty()) throw CharacterizationFailure("no relation or input");
    for (const auto& c : sub.clauses) {
      if (c.relation.empty() && c.inputs.empty()) throw CharacterizationFailure("empty structure");
      for (const auto& in : c.inputs) {
        if (in.head.empty()) throw CharacterizationFailure("input without a head");
      }
    }
    for (const auto& d : sub.desires) {
      if (d.mode == DesireMode::Explicit && d.head.empty()) {
        throw CharacterizationFailure("desire without a head");
      }
    }
  }

  std::vector<Token> toks_;
  const Token* lead_prep_ = nullptr;
  std::vector<Segment> segments_;
  std::vector<Connective> joins_;
};

bool fits(const QCT& q, Form form) {
  if (q.subqueries.empty()) return false;
  std::size_t desires = 0, clauses = 0, inputs = 0;
  bool clausal = false;
  for (const auto& s : q.subqueries) {
    desires = std::max(desires, s.desires.size());
    clauses += s.clauses.size();
    inputs += s.input_count();
    for (const auto& c : s.clauses) clausal = clausal || c.cl.has_value();
  }
  const bool single = q.subqueries.size() == 1 && desires == 1;
  switch (form) {
    case Form::Compound:
      return q.subqueries.size() >= 2 || desires >= 2;
    case Form::Complex:
      return single && (clauses >= 2 || inputs >= 2 || clausal);
    case Form::Simple:
      return single && clauses <= 1 && inputs <= 1 && !clausal;
  }
  return false;
}

QCT characterize_as(const text::TokenSequence& seq, Form form) {
  QCT q = Parser(seq).run();
  if (!fits(q, form)) {
    throw CharacterizationFailure(std::string("does not fit the ") + std::string(to_string(form)) +
                                  " template");
  }
  q.form = form;
  return q;
}

}  // namespace

QueryKind classify_query_kind(const text::TokenSequence& seq) { return Parser(seq).first_kind(); }

Form infer_form(const QCT& q) {
  for (Form f : {Form::Compound, Form::Complex, Form::Simple}) {
    if (fits(q, f)) return f;
  }
  return Form::Simple;
}

QCT characterize(const text::TokenSequence& seq) {
  QCT q = Parser(seq).run();
  for (Form f : {Form::Compound, Form::Complex, Form::Simple}) {
    if (fits(q, f)) {
      q.form = f;
      return q;
    }
  }
  throw CharacterizationFailure("no template fits");
}

QCT characterize_simple(const text::TokenSequence& seq) { return characterize_as(seq, Form::Simple); }
QCT characterize_complex(const text::TokenSequence& seq) { return characterize_as(seq, Form::Complex); }
QCT characterize_compound(const text::TokenSequence& seq) { return characterize_as(seq, Form::Compound); }

DesireSlot detect_implicit_desire(const SubQCT& partial) {
  DesireSlot d = partial.desires.empty() ? DesireSlot{} : partial.desires.front();
  auto cleared = [](DesireMode mode) {
    DesireSlot s;
    s.mode = mode;
    return s;
  };
  switch (partial.kind) {
    case QueryKind::Where:
      return cleared(DesireMode::ImplicitLocation);
    case QueryKind::When:
      return cleared(DesireMode::ImplicitTime);
    case QueryKind::HowState:
      return cleared(DesireMode::ImplicitDefinition);
    case QueryKind::HowQuantitative:
    case QueryKind::HowComputational:
      d.mode = DesireMode::ImplicitCount;
      return d;
    default:
      if (d.head.empty()) return cleared(DesireMode::ImplicitDefinition);
      d.mode = DesireMode::Explicit;
      return d;
  }
}

DesireSlot extract_explicit_desire(const text::TokenSequence& seq,
                                   std::pair<std::size_t, std::size_t> r1,
                                   std::pair<std::size_t, std::size_t> r2) {
  DesireSlot d;
  d.mode = DesireMode::Explicit;
  const std::size_t b = r1.second;
  const std::size_t e = std::min(r2.first, seq.tokens.size());
  if (b >= e) return d;
  static_cast<NounPhrase&>(d) = make_np(seq.tokens, b, e);
  return d;
}

SubjectBinding resolve_r2_subject(const SubQCT& sub) {
  if (sub.clauses.empty() || sub.clauses.front().relation.empty()) return SubjectBinding::NoRelation;
  return sub.clauses.front().inverse ? SubjectBinding::InputIsSubject
                                     : SubjectBinding::DesireIsSubject;
}

Dependency detect_clause_dependency(const SubQCT& sub, std::size_t clause) {
  if (clause >= sub.clauses.size() || !sub.clauses[clause].cl) return Dependency::None;
  return sub.clauses[clause].attach < 0 ? Dependency::Desire : Dependency::Input;
}

}  // namespace wh2dl::qct
