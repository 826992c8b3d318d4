#include "wh2dl/translate/translator.hpp"

#include <algorithm>
#include <cctype>

#include "wh2dl/text/tagger.hpp"

namespace wh2dl::translate {

using dl::Axiom;
using dl::Concept;
using dl::Role;
using qct::ClauseStructure;
using qct::Connective;
using qct::DesireMode;
using qct::DesireSlot;
using qct::InputSlot;
using qct::QueryKind;
using qct::SubQCT;

std::string_view to_string(QueryMode m) {
  switch (m) {
    case QueryMode::TBoxStrong: return "TBoxStrong";
    case QueryMode::TBoxWeak: return "TBoxWeak";
    case QueryMode::ABoxRetrieval: return "ABoxRetrieval";
  }
  return "?";
}

std::string_view to_string(NominalMode m) {
  return m == NominalMode::PaperLiteral ? "paper-literal" : "nominal-strict";
}

std::string_view to_string(Combinator c) {
  return c == Combinator::Union ? "Union" : "Intersection";
}

std::optional<NominalMode> parse_nominal_mode(std::string_view s) {
  if (s == "paper-literal") return NominalMode::PaperLiteral;
  if (s == "nominal-strict") return NominalMode::NominalStrict;
  return std::nullopt;
}

std::vector<Axiom> TranslationResult::axioms() const {
  std::vector<Axiom> all = query_axioms;
  all.insert(all.end(), support.begin(), support.end());
  return all;
}

namespace {

bool is_temporal(std::string_view w) {
  return w == "sometimes" || w == "always" || w == "often" || w == "never";
}

bool is_be(std::string_view w) {
  return w == "is" || w == "are" || w == "was" || w == "were" || w == "be" || w == "been" ||
         w == "being" || w == "am";
}

bool is_definite(std::string_view q) {
  return q == "the" || q == "this" || q == "that" || q == "these" || q == "those";
}

bool is_kind_word(std::string_view w) { return w == "kind" || w == "type" || w == "sort"; }

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

// Splits on anything that cannot appear in a DL name.
std::vector<std::string> pieces(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      cur += c;
    } else if (!cur.empty()) {
      out.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

std::string individual_name(const InputSlot& np) {
  auto name = join(pieces(np.joined_head()), "_");
  if (dl::is_keyword(name)) name += "_Individual";
  return name;
}

// Flattens nested intersections so nothing depends on normalize() later.
Concept conj(const std::vector<Concept>& cs) {
  std::vector<Concept> flat;
  for (const auto& c : cs) {
    if (c.kind() == Concept::Kind::Intersection)
      flat.insert(flat.end(), c.operands().begin(), c.operands().end());
    else if (c.kind() != Concept::Kind::Thing || cs.size() == 1)
      flat.push_back(c);
  }
  return Concept::intersection(std::move(flat));
}

Concept disj(const std::vector<Concept>& cs) {
  std::vector<Concept> flat;
  for (const auto& c : cs) {
    if (c.kind() == Concept::Kind::Union)
      flat.insert(flat.end(), c.operands().begin(), c.operands().end());
    else
      flat.push_back(c);
  }
  return Concept::union_of(std::move(flat));
}

void push_unique(std::vector<Axiom>& dst, const Axiom& a) {
  auto s = dl::serialize(a);
  for (const auto& b : dst)
    if (dl::serialize(b) == s) return;
  dst.push_back(a);
}

void push_rule(std::vector<std::string>& rules, const std::string& r) {
  if (std::find(rules.begin(), rules.end(), r) == rules.end()) rules.push_back(r);
}

bool be_only(const ClauseStructure& c) {
  return std::all_of(c.relation.begin(), c.relation.end(), [](const std::string& w) {
    return is_be(lower(w));
  });
}

bool simple_shape(const SubQCT& sub) {
  return sub.clauses.size() == 1 && sub.clauses[0].inputs.size() <= 1 && !sub.clauses[0].cl;
}

std::optional<dl::Temporal> temporal_of(const ClauseStructure& c) {
  std::optional<dl::Temporal> t;
  for (const auto& w : c.relation) {
    auto l = lower(w);
    if (l == "never") throw UnsupportedAdverbial(l);
    if (l == "sometimes" || l == "often") t = dl::Temporal::Sometimes;
    if (l == "always") t = dl::Temporal::Always;
  }
  return t;
}

struct Superlative {
  std::size_t first = 0;  // modifier positions consumed
  std::size_t last = 0;
  MeasurableModifier mod;
  dl::Optimum dir = dl::Optimum::Max;
};

// Throws UnknownMeasurableModifier for a superlative the lexicon lacks.
std::optional<Superlative> find_superlative(const qct::NounPhrase& np, const ModifierLexicon& lex) {
  for (std::size_t i = 0; i < np.mods.size(); ++i) {
    auto m = lower(np.mods[i]);
    bool jjs = i < np.mod_pos.size() && np.mod_pos[i] == text::Pos::JJS;
    if ((m == "most" || m == "least") && i + 1 < np.mods.size()) {
      if (auto base = lex.find(lower(np.mods[i + 1])))
        return Superlative{i, i + 1, *base, m == "most" ? dl::Optimum::Max : dl::Optimum::Min};
      throw UnknownMeasurableModifier(np.mods[i + 1]);
    }
    if (jjs) {
      auto base = superlative_base(lex, m);
      if (!base) throw UnknownMeasurableModifier(m);
      auto dir = base->polarity == Polarity::Positive ? dl::Optimum::Max : dl::Optimum::Min;
      return Superlative{i, i, *base, dir};
    }
  }
  return std::nullopt;
}

template <class NP>
NP without_mods(NP np, std::size_t first, std::size_t last) {
  np.mods.erase(np.mods.begin() + first, np.mods.begin() + last + 1);
  if (np.mod_pos.size() > last)
    np.mod_pos.erase(np.mod_pos.begin() + first, np.mod_pos.begin() + last + 1);
  return np;
}

// Shared state while building one subquery.
class Builder {
 public:
  Builder(const SubQCT& sub, const Context& ctx) : sub_(sub), ctx_(ctx) {}

  std::vector<Axiom> support;
  std::vector<std::string> rules;

  Concept common(const qct::NounPhrase& np) {
    for (const auto& a : apply_modifier_rule(np.mods, np.joined_head())) push_unique(support, a);
    if (!np.mods.empty()) push_rule(rules, "modifier-chain");
    std::vector<std::string> parts = np.mods;
    parts.push_back(np.joined_head());
    return Concept::atomic(concept_name(parts));
  }

  // Proper nouns in paper-literal mode are replaced by their parent class,
  // but only where the base rules allow it (simple queries).
  Concept input(const InputSlot& in, bool allow_msp) {
    if (!in.proper) return common(in);
    if (allow_msp && ctx_.nominal == NominalMode::PaperLiteral && ctx_.hypernyms) {
      if (auto p = lexicon::getMSP(*ctx_.hypernyms, in.joined_head()))
        return Concept::atomic(concept_name({*p}));
      push_rule(rules, "nominal-fallback");
    }
    return Concept::nominal(individual_name(in));
  }

  std::optional<Concept> desire(const DesireSlot& d) {
    switch (d.mode) {
      case DesireMode::ImplicitLocation: return Concept::atomic("Location");
      case DesireMode::ImplicitTime: return Concept::atomic("Time");
      case DesireMode::ImplicitDefinition: return std::nullopt;
      case DesireMode::Explicit:
      case DesireMode::ImplicitCount:
        if (d.head.empty() || d.joined_head().empty()) return std::nullopt;
        if (d.proper) return Concept::nominal(individual_name(d));
        return common(d);
    }
    return std::nullopt;
  }

  // Conjuncts contributed by clause k to whatever it constrains.
  std::vector<Concept> restriction(std::size_t k, bool identity) {
    const auto& c = sub_.clauses.at(k);
    bool simple = simple_shape(sub_);
    std::vector<std::vector<Concept>> groups(1);
    for (std::size_t i = 0; i < c.inputs.size(); ++i) {
      if (i > 0 && i - 1 < c.cc.size() && c.cc[i - 1] == Connective::Or) groups.emplace_back();
      Concept ic = input(c.inputs[i], simple);
      if (i + 1 == c.inputs.size()) {
        std::vector<Concept> parts = {ic};
        for (std::size_t j = 0; j < sub_.clauses.size(); ++j) {
          if (sub_.clauses[j].attach != static_cast<int>(k)) continue;
          push_rule(rules, "ext-2");
          auto more = restriction(j, false);
          parts.insert(parts.end(), more.begin(), more.end());
        }
        ic = conj(parts);
      }
      groups.back().push_back(ic);
    }
    if (c.inputs.size() > 1)
      push_rule(rules, groups.size() > 1 ? "disjunctive-input" : "conjunctive-input");

    auto temporal = temporal_of(c);
    auto name = role_name(c.relation);
    if (identity || name.empty() || be_only(c)) {
      if (groups.size() == 1) return groups[0];
      std::vector<Concept> alts;
      for (auto& g : groups) alts.push_back(conj(g));
      return {disj(alts)};
    }
    bool inv = c.inverse || (k == 0 && sub_.subject == qct::SubjectBinding::InputIsSubject);
    auto role = [&](std::optional<dl::Temporal> t) {
      Role r{name, inv, t};
      return r;
    };
    std::vector<Concept> fillers;
    if (groups.size() == 1) {
      fillers = groups[0];
    } else {
      std::vector<Concept> alts;
      for (auto& g : groups) alts.push_back(conj(g));
      fillers.push_back(disj(alts));
    }
    std::vector<Concept> out;
    for (const auto& f : fillers) {
      out.push_back(Concept::exists(role(temporal), f));
      if (temporal) {
        push_rule(rules, "temporal-adverbial");
        auto some = Concept::exists(role(dl::Temporal::Sometimes), f);
        auto always = Concept::exists(role(dl::Temporal::Always), f);
        auto plain = Concept::exists(role(std::nullopt), f);
        push_unique(support, Axiom::disjoint(some, always));
        push_unique(support, Axiom::sub(some, plain));
        push_unique(support, Axiom::sub(always, plain));
      }
    }
    return out;
  }

  // D and everything attached to it. `identity_of` makes a desire-attached
  // "of" clause intersect its input directly ("kinds of animals").
  std::vector<Concept> desire_conjuncts(const std::optional<Concept>& d, bool identity_of) {
    std::vector<Concept> parts;
    if (d) parts.push_back(*d);
    for (std::size_t k = 0; k < sub_.clauses.size(); ++k) {
      const auto& c = sub_.clauses[k];
      if (c.attach != -1) continue;
      if (k > 0 && !simple_shape(sub_)) push_rule(rules, c.cl ? "ext-3.1" : "ext-3.2");
      bool ident = identity_of && c.relation.size() == 1 && lower(c.relation[0]) == "of";
      auto more = restriction(k, ident);
      parts.insert(parts.end(), more.begin(), more.end());
    }
    return parts;
  }

  TranslationResult finish(QueryMode mode, Concept desire) {
    TranslationResult r;
    r.form.mode = mode;
    r.form.desire = std::move(desire);
    if (mode == QueryMode::TBoxStrong)
      r.query_axioms.push_back(Axiom::sub(Concept::atomic(std::string(kDesireName)), r.form.desire));
    r.support = support;
    r.rules = rules;
    return r;
  }

 private:
  const SubQCT& sub_;
  const Context& ctx_;
};

void require_clause(const SubQCT& sub) {
  if (sub.clauses.empty()) throw TranslationFailure("subquery has no clause structure");
}

Concept wrap_inverse(Concept cls, const std::string& role, Concept inner) {
  return conj({std::move(cls), Concept::exists(Role::inv(role), std::move(inner))});
}

Concept wrap_inverse(const std::string& cls, const std::string& role, Concept inner) {
  return wrap_inverse(Concept::atomic(cls), role, std::move(inner));
}

const DesireSlot& first_desire(const SubQCT& sub) {
  static const DesireSlot none = [] {
    DesireSlot d;
    d.mode = DesireMode::ImplicitDefinition;
    return d;
  }();
  return sub.desires.empty() ? none : sub.desires.front();
}

Concept measured(const Superlative& s, Concept core) {
  auto value = wrap_inverse(s.mod.attribute, "has" + s.mod.attribute, std::move(core));
  return Concept::optimum(s.dir, wrap_inverse(Concept::integer(), "hasValue", value));
}

// Wraps `core` for How-state, Where and When queries without R2.
Concept wrap_kind(QueryKind kind, Concept core) {
  switch (kind) {
    case QueryKind::Where: return wrap_inverse("Location", "hasLocation", std::move(core));
    case QueryKind::When: return wrap_inverse("Time", "hasTime", std::move(core));
    case QueryKind::HowState: return wrap_inverse("State", "hasState", std::move(core));
    default: return core;
  }
}

bool has_temporal(const SubQCT& sub) {
  for (const auto& c : sub.clauses)
    for (const auto& w : c.relation)
      if (is_temporal(lower(w))) return true;
  return false;
}

bool relation_empty(const ClauseStructure& c) {
  return c.relation.empty() || be_only(c);
}

TranslationResult translate_sub(const SubQCT& in, const Context& ctx) {
  require_clause(in);
  for (const auto& c : in.clauses)
    for (const auto& w : c.relation)
      if (lower(w) == "never") throw UnsupportedAdverbial("never");

  SubQCT sub = in;
  bool reified = false;
  if (simple_shape(sub) && sub.clauses[0].inputs.empty()) {
    if (relation_empty(sub.clauses[0])) throw TranslationFailure("no input and no relation");
    sub = reify_empty_input(sub);
    reified = true;
  }
  auto tag = [&](TranslationResult r) {
    if (reified) r.rules.insert(r.rules.begin(), "reification");
    return r;
  };

  if (sub.kind == QueryKind::HowQuantitative) return tag(apply_quantitative_how(sub, ctx));
  if (sub.kind == QueryKind::HowComputational) {
    const auto& d = first_desire(sub);
    auto measure = ctx.modifiers->find(lower(d.joined_head()));
    if (!measure) throw TranslationFailure("no measurable attribute for '" + d.joined_head() + "'");
    Builder b(sub, ctx);
    auto parts = b.desire_conjuncts(std::nullopt, false);
    if (parts.empty()) throw TranslationFailure("nothing to measure");
    auto value = wrap_inverse(measure->attribute, "has" + measure->attribute, conj(parts));
    push_rule(b.rules, "computational-how");
    return tag(b.finish(QueryMode::ABoxRetrieval, wrap_inverse(Concept::integer(), "hasValue", value)));
  }

  std::vector<std::string> fallback;
  try {
    auto r = apply_superlative(sub, ctx);
    if (!r.rules.empty()) return tag(r);
  } catch (const UnknownMeasurableModifier&) {
    fallback.push_back("superlative-fallback");
  }
  auto with_fallback = [&](TranslationResult r) {
    r.rules.insert(r.rules.begin(), fallback.begin(), fallback.end());
    return tag(std::move(r));
  };

  bool simple = simple_shape(sub);
  if (simple && has_temporal(sub)) return with_fallback(apply_temporal_adverbial(sub, ctx));
  if (!simple) return with_fallback(translate_complex(sub, ctx));
  const auto& d = first_desire(sub);
  if (relation_empty(sub.clauses[0]) && d.mode == DesireMode::Explicit && !d.head.empty())
    return with_fallback(apply_desire_inclusion(sub, ctx));
  return with_fallback(apply_base_rules(sub, ctx));
}

qct::SubQCT single_desire(const SubQCT& sub, std::size_t i) {
  SubQCT part = sub;
  part.desires = {sub.desires.at(i)};
  part.dcc.clear();
  return part;
}

}  // namespace

std::string concept_name(const std::vector<std::string>& parts) {
  std::vector<std::string> out;
  for (const auto& p : parts)
    for (auto piece : pieces(p)) {
      piece[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(piece[0])));
      out.push_back(std::move(piece));
    }
  auto name = join(out, "_");
  if (name.empty()) return "Thing_Class";
  if (dl::is_keyword(name)) name += "_Class";
  return name;
}

std::string role_name(const std::vector<std::string>& relation) {
  std::vector<std::string> out;
  for (const auto& w : relation) {
    auto l = lower(w);
    if (is_temporal(l)) continue;
    for (auto& p : pieces(l)) out.push_back(std::move(p));
  }
  auto name = join(out, "_");
  if (!name.empty() && dl::is_keyword(name)) name += "_rel";
  return name;
}

std::vector<Axiom> apply_modifier_rule(const std::vector<std::string>& modifiers,
                                       const std::string& head) {
  std::vector<Axiom> out;
  std::vector<std::string> parts = {head};
  auto prev = concept_name(parts);
  for (auto it = modifiers.rbegin(); it != modifiers.rend(); ++it) {
    parts.insert(parts.begin(), *it);
    auto name = concept_name(parts);
    out.push_back(Axiom::sub(Concept::atomic(name), Concept::atomic(prev)));
    prev = name;
  }
  return out;
}

std::string gerund(std::string_view base) {
  std::string w = lower(std::string(base));
  auto vowel = [](char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; };
  if (w.size() > 2 && w.ends_with("ie")) return w.substr(0, w.size() - 2) + "ying";
  if (w.size() > 2 && w.back() == 'e' && !w.ends_with("ee") && !w.ends_with("ye") &&
      !w.ends_with("oe"))
    return w.substr(0, w.size() - 1) + "ing";
  std::size_t n = w.size();
  if (n >= 3 && !vowel(w[n - 1]) && vowel(w[n - 2]) && !vowel(w[n - 3]) &&
      std::string_view("wxy").find(w[n - 1]) == std::string_view::npos) {
    std::size_t groups = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (vowel(w[i]) && (i == 0 || !vowel(w[i - 1]))) ++groups;
    if (groups == 1) return w + w.back() + "ing";
  }
  return w + "ing";
}

qct::SubQCT reify_empty_input(const qct::SubQCT& sub) {
  if (sub.clauses.empty() || !sub.clauses[0].inputs.empty() || sub.clauses[0].relation.empty())
    return sub;
  SubQCT out = sub;
  auto& c = out.clauses[0];
  auto verb = lower(c.relation.back());
  const auto& tagger = text::default_tagger();
  std::string base;
  if (auto b = tagger.verb_base(verb))
    base = *b;
  else if (verb.size() > 3 && verb.ends_with("s") && !verb.ends_with("ss"))
    base = verb.substr(0, verb.size() - 1);
  else
    base = verb;
  InputSlot g;
  g.head = {gerund(base)};
  c.relation = {"does"};
  c.relation_pos = {text::Pos::VBZ};
  c.relation_index = {};
  c.inputs = {g};
  c.cc.clear();
  c.inverse = false;
  out.subject = qct::SubjectBinding::DesireIsSubject;
  return out;
}

TranslationResult apply_base_rules(const SubQCT& sub, const Context& ctx) {
  require_clause(sub);
  if (!simple_shape(sub) || sub.clauses[0].inputs.empty())
    throw TranslationFailure("base rules need one clause with one input");
  Builder b(sub, ctx);
  const auto& c = sub.clauses[0];
  const auto& in = c.inputs[0];
  const auto& d = first_desire(sub);

  if (relation_empty(c)) {
    if (sub.kind == QueryKind::Where || sub.kind == QueryKind::When ||
        sub.kind == QueryKind::HowState) {
      push_rule(b.rules, in.proper ? "1.2" : "1.1");
      return b.finish(QueryMode::ABoxRetrieval, wrap_kind(sub.kind, b.input(in, true)));
    }
    Concept x = b.input(in, true);
    if (!in.proper && std::any_of(in.quant.begin(), in.quant.end(),
                                  [](const std::string& q) { return is_definite(lower(q)); })) {
      b.rules.insert(b.rules.begin(), "1.1-quantified");
      return b.finish(QueryMode::ABoxRetrieval, x);
    }
    if (!in.proper && sub.kind == QueryKind::Who) {
      // Could be a definition or a retrieval; retrieval is emitted.
      b.rules.insert(b.rules.begin(), "ambiguous");
      return b.finish(QueryMode::ABoxRetrieval, x);
    }
    b.rules.insert(b.rules.begin(), in.proper ? "1.2" : "1.1");
    auto r = b.finish(QueryMode::TBoxStrong, x);
    r.query_axioms.push_back(Axiom::sub(x, Concept::atomic(std::string(kDesireName))));
    return r;
  }

  bool inverse = c.inverse || sub.subject == qct::SubjectBinding::InputIsSubject;
  std::string rule = in.proper ? (inverse ? "3.2" : "3.1") : (inverse ? "2.2" : "2.1");
  auto dc = d.mode == DesireMode::ImplicitLocation || d.mode == DesireMode::ImplicitTime ||
                    d.mode == DesireMode::Explicit
                ? b.desire(d)
                : std::nullopt;
  auto parts = b.desire_conjuncts(dc, false);
  b.rules.insert(b.rules.begin(), rule);
  Concept core = conj(parts);
  if (sub.kind == QueryKind::HowState) core = wrap_kind(sub.kind, core);
  return b.finish(QueryMode::ABoxRetrieval, core);
}

TranslationResult translate_complex(const SubQCT& sub, const Context& ctx) {
  require_clause(sub);
  Builder b(sub, ctx);
  const auto& d = first_desire(sub);
  if (d.mode == DesireMode::Explicit && d.head.size() == 1 && is_kind_word(lower(d.head[0]))) {
    auto parts = b.desire_conjuncts(std::nullopt, true);
    if (parts.empty()) throw TranslationFailure("inclusion query without input");
    b.rules.insert(b.rules.begin(), "ext-1");
    return b.finish(QueryMode::TBoxStrong, conj(parts));
  }
  bool no_r2 = std::all_of(sub.clauses.begin(), sub.clauses.end(), [](const ClauseStructure& c) {
    return c.attach != -1 || relation_empty(c);
  });
  bool wrapped = sub.kind == QueryKind::HowState ||
                 (no_r2 && (sub.kind == QueryKind::Where || sub.kind == QueryKind::When));
  auto parts = b.desire_conjuncts(wrapped ? std::nullopt : b.desire(d), false);
  if (parts.empty()) throw TranslationFailure("complex query with nothing to constrain");
  b.rules.insert(b.rules.begin(), "complex");
  Concept core = conj(parts);
  if (wrapped) core = wrap_kind(sub.kind, core);
  return b.finish(QueryMode::ABoxRetrieval, core);
}

TranslationResult apply_desire_inclusion(const SubQCT& sub, const Context& ctx) {
  require_clause(sub);
  const auto& d = first_desire(sub);
  const auto& c = sub.clauses[0];
  if (d.mode != DesireMode::Explicit || d.head.empty() || c.inputs.empty() || !relation_empty(c))
    return apply_base_rules(sub, ctx);
  Builder b(sub, ctx);
  auto parts = b.desire_conjuncts(b.desire(d), false);
  b.rules.insert(b.rules.begin(), "desire-inclusion");
  return b.finish(QueryMode::TBoxStrong, conj(parts));
}

TranslationResult apply_quantitative_how(const SubQCT& sub, const Context& ctx) {
  require_clause(sub);
  Builder b(sub, ctx);
  const auto& d = first_desire(sub);
  auto dc = b.desire(d);
  auto parts = b.desire_conjuncts(dc, false);
  if (parts.empty()) throw TranslationFailure("nothing to count");
  if (dc)
    push_unique(b.support,
                Axiom::sub(*dc, Concept::exists(Role::atomic("hasCount"), Concept::count())));
  b.rules.insert(b.rules.begin(), "quantitative-how");
  return b.finish(QueryMode::ABoxRetrieval, wrap_inverse(Concept::count(), "hasCount", conj(parts)));
}

TranslationResult apply_temporal_adverbial(const SubQCT& sub, const Context& ctx) {
  require_clause(sub);
  Builder b(sub, ctx);
  const auto& d = first_desire(sub);
  auto dc = d.mode == DesireMode::ImplicitDefinition ? std::nullopt : b.desire(d);
  auto parts = b.desire_conjuncts(dc, false);
  push_rule(b.rules, "temporal-adverbial");
  return b.finish(QueryMode::ABoxRetrieval, conj(parts));
}

namespace {

// "Which ocean is the deepest?": a bare superlative as the first input of a
// relation-less clause ranks the desire.
std::optional<Superlative> bare_superlative(const SubQCT& sub, const ModifierLexicon& lex) {
  const auto& c = sub.clauses[0];
  if (c.attach != -1 || c.inputs.size() != 1 || !relation_empty(c)) return std::nullopt;
  const auto& in = c.inputs[0];
  if (in.proper || !in.mods.empty() || in.head.size() != 1) return std::nullopt;
  auto w = lower(in.head[0]);
  if (w.size() < 5 || !w.ends_with("est")) return std::nullopt;
  auto base = superlative_base(lex, w);
  if (!base) return std::nullopt;
  return Superlative{0, 0, *base,
                     base->polarity == Polarity::Positive ? dl::Optimum::Max : dl::Optimum::Min};
}

SubQCT drop_first_clause(SubQCT sub) {
  sub.clauses.erase(sub.clauses.begin());
  for (auto& c : sub.clauses) c.attach = c.attach <= 0 ? -1 : c.attach - 1;
  return sub;
}

}  // namespace

TranslationResult apply_superlative(const SubQCT& sub, const Context& ctx) {
  require_clause(sub);
  const auto& d = first_desire(sub);
  // Implicit desire in "Who is the tallest student?": the input carries it.
  bool on_input = d.mode == DesireMode::ImplicitDefinition && simple_shape(sub) &&
                  !sub.clauses[0].inputs.empty() && relation_empty(sub.clauses[0]);
  const qct::NounPhrase& np = on_input ? sub.clauses[0].inputs[0] : d;
  auto s = find_superlative(np, *ctx.modifiers);
  SubQCT rest = sub;
  if (s) {
    if (on_input)
      rest.clauses[0].inputs[0] = without_mods(rest.clauses[0].inputs[0], s->first, s->last);
    else
      rest.desires[0] = without_mods(rest.desires[0], s->first, s->last);
  } else if (d.mode == DesireMode::Explicit && !d.head.empty()) {
    s = bare_superlative(sub, *ctx.modifiers);
    if (!s) return {};
    rest = drop_first_clause(sub);
  } else {
    return {};
  }

  Builder b(rest, ctx);
  std::vector<Concept> parts;
  if (on_input)
    parts = {b.input(rest.clauses[0].inputs[0], false)};
  else
    parts = b.desire_conjuncts(b.desire(rest.desires[0]), false);
  if (parts.empty()) throw TranslationFailure("superlative without anything to rank");
  b.rules.insert(b.rules.begin(), "superlative");
  return b.finish(QueryMode::ABoxRetrieval, measured(*s, conj(parts)));
}

SplitResult split_compound(const qct::QCT& q) {
  SplitResult r;
  if (q.subqueries.size() >= 2) {
    r.parts = q.subqueries;
    r.split = true;
    return r;
  }
  if (q.subqueries.size() == 1 && q.subqueries[0].desires.size() >= 2) {
    const auto& sub = q.subqueries[0];
    bool implicit = std::any_of(sub.desires.begin(), sub.desires.end(),
                                [](const DesireSlot& d) { return d.mode != DesireMode::Explicit; });
    if (implicit) {
      r.parts = q.subqueries;
      r.combinator = Combinator::Intersection;
      return r;
    }
    for (std::size_t i = 0; i < sub.desires.size(); ++i) r.parts.push_back(single_desire(sub, i));
    r.split = true;
    return r;
  }
  r.parts = q.subqueries;
  return r;
}

TranslationResult translate(const qct::QCT& q, const Context& ctx) {
  if (q.subqueries.empty()) throw TranslationFailure("empty QCT");
  auto split = split_compound(q);
  if (!split.split) {
    const auto& sub = split.parts.at(0);
    if (sub.desires.size() < 2) return translate_sub(sub, ctx);
    // Not splittable: every desire constrains the same clauses.
    TranslationResult r;
    std::vector<Concept> ds;
    for (std::size_t i = 0; i < sub.desires.size(); ++i) {
      auto part = translate_sub(single_desire(sub, i), ctx);
      ds.push_back(part.form.desire);
      for (const auto& a : part.support) push_unique(r.support, a);
      for (const auto& rule : part.rules) push_rule(r.rules, rule);
    }
    r.rules.insert(r.rules.begin(), "compound-not-split");
    r.form.desire = conj(ds);
    r.combinator = Combinator::Intersection;
    return r;
  }

  TranslationResult r;
  r.rules.push_back("compound-split");
  std::vector<Concept> ds;
  std::optional<QueryMode> mode;
  bool agree = true;
  for (const auto& part : split.parts) {
    auto sr = translate_sub(part, ctx);
    ds.push_back(sr.form.desire);
    if (mode && *mode != sr.form.mode) agree = false;
    mode = sr.form.mode;
    for (const auto& a : sr.support) push_unique(r.support, a);
    for (const auto& rule : sr.rules) push_rule(r.rules, rule);
    r.sub.push_back(std::move(sr));
  }
  r.form.mode = agree && mode ? *mode : QueryMode::ABoxRetrieval;
  r.form.desire = split.combinator == Combinator::Union ? disj(ds) : conj(ds);
  r.combinator = split.combinator;
  return r;
}

}  // namespace wh2dl::translate
