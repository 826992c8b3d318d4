#include <cctype>

#include "wh2dl/dl/expr.hpp"

namespace wh2dl::dl {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Expr expr() {
    Concept lhs = concept_expr();
    skip_ws();
    if (at_end()) return lhs;
    const std::size_t at = pos_;
    std::string kw = word();
    if (kw == "SubClassOf" || kw == "DisjointWith") {
      Concept rhs = concept_expr();
      finish();
      return kw == "SubClassOf" ? Axiom::sub(lhs, rhs) : Axiom::disjoint(lhs, rhs);
    }
    if (kw == "EquivalentTo") {
      if (lhs.kind() != Concept::Kind::Atomic) throw SyntaxError(0, "EquivalentTo needs a name");
      Concept rhs = concept_expr();
      finish();
      return Axiom::equiv(lhs.name(), rhs);
    }
    if (kw == "SubRoleOf") {
      if (lhs.kind() != Concept::Kind::Atomic) throw SyntaxError(0, "SubRoleOf needs a name");
      skip_ws();
      const std::size_t name_at = pos_;
      std::string rhs = word();
      if (!valid_name(rhs)) throw SyntaxError(name_at, "expected role name");
      finish();
      return Axiom::sub_role(lhs.name(), rhs);
    }
    throw SyntaxError(at, "expected axiom keyword or end of input");
  }

  void finish() {
    skip_ws();
    if (!at_end()) throw SyntaxError(pos_, "trailing input");
  }

  Concept concept_expr() {
    skip_ws();
    if (at_end()) throw SyntaxError(pos_, "expected concept");
    const std::size_t at = pos_;
    char c = s_[pos_];
    if (c == '{') {
      ++pos_;
      skip_ws();
      const std::size_t name_at = pos_;
      std::string n = word();
      if (!valid_name(n)) throw SyntaxError(name_at, "expected individual name");
      expect('}');
      return Concept::nominal(n);
    }
    if (c == '(') {
      ++pos_;
      skip_ws();
      std::string kw = peek_word();
      if (kw == "some" || kw == "all") {
        word();
        Role r = role();
        expect('.');
        Concept f = concept_expr();
        expect(')');
        return kw == "some" ? Concept::exists(r, f) : Concept::forall(r, f);
      }
      std::vector<Concept> ops{concept_expr()};
      skip_ws();
      const std::size_t op_at = pos_;
      std::string op = word();
      if (op != "and" && op != "or") throw SyntaxError(op_at, "expected 'and' or 'or'");
      ops.push_back(concept_expr());
      for (;;) {
        skip_ws();
        if (!at_end() && s_[pos_] == ')') {
          ++pos_;
          break;
        }
        const std::size_t next_at = pos_;
        std::string next = word();
        if (next != op) {
          throw SyntaxError(next_at, next.empty() ? "expected ')'" : "mixed 'and'/'or'");
        }
        ops.push_back(concept_expr());
      }
      return op == "and" ? Concept::intersection(std::move(ops))
                         : Concept::union_of(std::move(ops));
    }
    std::string w = word();
    if (w.empty()) throw SyntaxError(at, "expected concept");
    if (w == "Integer") return Concept::integer();
    if (w == "Count") return Concept::count();
    if (w == "Thing") return Concept::thing();
    if (w == "max" || w == "min") {
      expect('(');
      Concept inner = concept_expr();
      expect(')');
      return Concept::optimum(w == "max" ? Optimum::Max : Optimum::Min, inner);
    }
    if (!valid_name(w)) throw SyntaxError(at, "bad name '" + w + "'");
    return Concept::atomic(w);
  }

  Role role() {
    skip_ws();
    const std::size_t at = pos_;
    std::string w = word();
    if (w == "inv") {
      expect('(');
      Role inner = role();
      expect(')');
      if (inner.inverse) throw SyntaxError(at, "double inversion");
      inner.inverse = true;
      return inner;
    }
    if ((w == "sometimes" || w == "always") && !at_end() && s_[pos_] == ':') {
      ++pos_;
      const std::size_t name_at = pos_;
      std::string n = word();
      if (!valid_name(n)) throw SyntaxError(name_at, "expected role name");
      return Role::qualified(w == "sometimes" ? Temporal::Sometimes : Temporal::Always, n);
    }
    if (!valid_name(w)) throw SyntaxError(at, "expected role");
    return Role::atomic(w);
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  static bool word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  std::string word() {
    skip_ws();
    std::size_t start = pos_;
    while (!at_end() && word_char(s_[pos_])) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  std::string peek_word() {
    std::size_t save = pos_;
    std::string w = word();
    pos_ = save;
    return w;
  }

  void expect(char c) {
    skip_ws();
    if (at_end() || s_[pos_] != c) {
      throw SyntaxError(pos_, std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse_dl(std::string_view text) {
  Parser p(text);
  return p.expr();
}

Concept parse_concept(std::string_view text) {
  Parser p(text);
  Concept c = p.concept_expr();
  p.finish();
  return c;
}

Axiom parse_axiom(std::string_view text) {
  Expr e = parse_dl(text);
  if (auto* a = std::get_if<Axiom>(&e)) return *a;
  throw SyntaxError(text.size(), "expected axiom");
}

}  // namespace wh2dl::dl
