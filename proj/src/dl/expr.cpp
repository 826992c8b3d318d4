#include <algorithm>
#include <cctype>

#include "wh2dl/dl/expr.hpp"

namespace wh2dl::dl {

struct Concept::Node {
  Kind kind;
  std::string name;
  std::vector<Concept> operands;
  Role role;
  std::optional<Concept> filler;
  Optimum dir = Optimum::Max;
};

Concept Concept::atomic(std::string name) {
  return Concept(std::make_shared<const Node>(Node{Kind::Atomic, std::move(name), {}, {}, {}}));
}

Concept Concept::nominal(std::string individual) {
  return Concept(
      std::make_shared<const Node>(Node{Kind::Nominal, std::move(individual), {}, {}, {}}));
}

Concept Concept::intersection(std::vector<Concept> operands) {
  if (operands.empty()) return thing();
  if (operands.size() == 1) return operands.front();
  return Concept(
      std::make_shared<const Node>(Node{Kind::Intersection, {}, std::move(operands), {}, {}}));
}

Concept Concept::union_of(std::vector<Concept> operands) {
  if (operands.empty()) return thing();
  if (operands.size() == 1) return operands.front();
  return Concept(std::make_shared<const Node>(Node{Kind::Union, {}, std::move(operands), {}, {}}));
}

Concept Concept::exists(Role role, Concept filler) {
  return Concept(std::make_shared<const Node>(
      Node{Kind::Exists, {}, {}, std::move(role), std::move(filler)}));
}

Concept Concept::forall(Role role, Concept filler) {
  return Concept(std::make_shared<const Node>(
      Node{Kind::Forall, {}, {}, std::move(role), std::move(filler)}));
}

Concept Concept::integer() {
  static const Concept c(std::make_shared<const Node>(Node{Kind::Integer, {}, {}, {}, {}}));
  return c;
}

Concept Concept::count() {
  static const Concept c(std::make_shared<const Node>(Node{Kind::Count, {}, {}, {}, {}}));
  return c;
}

Concept Concept::thing() {
  static const Concept c(std::make_shared<const Node>(Node{Kind::Thing, {}, {}, {}, {}}));
  return c;
}

Concept Concept::optimum(Optimum dir, Concept inner) {
  return Concept(
      std::make_shared<const Node>(Node{Kind::Opt, {}, {}, {}, std::move(inner), dir}));
}

Concept::Kind Concept::kind() const { return node_->kind; }
const std::string& Concept::name() const { return node_->name; }
const std::vector<Concept>& Concept::operands() const { return node_->operands; }
const Role& Concept::role() const { return node_->role; }
const Concept& Concept::filler() const { return *node_->filler; }
Optimum Concept::direction() const { return node_->dir; }

bool Concept::operator==(const Concept& other) const {
  if (node_ == other.node_) return true;
  const Node& a = *node_;
  const Node& b = *other.node_;
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Kind::Atomic:
    case Kind::Nominal:
      return a.name == b.name;
    case Kind::Intersection:
    case Kind::Union:
      return a.operands == b.operands;
    case Kind::Exists:
    case Kind::Forall:
      return a.role == b.role && *a.filler == *b.filler;
    case Kind::Opt:
      return a.dir == b.dir && *a.filler == *b.filler;
    default:
      return true;
  }
}

bool is_keyword(std::string_view w) {
  return w == "and" || w == "or" || w == "some" || w == "all" || w == "inv" ||
         w == "Integer" || w == "Count" || w == "Thing" || w == "max" || w == "min" ||
         w == "sometimes" || w == "always" || w == "SubClassOf" || w == "EquivalentTo" ||
         w == "DisjointWith" || w == "SubRoleOf";
}

bool valid_name(std::string_view name) {
  if (name.empty() || is_keyword(name)) return false;
  return std::all_of(name.begin(), name.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
}

Concept normalize(const Concept& c) {
  using K = Concept::Kind;
  switch (c.kind()) {
    case K::Intersection:
    case K::Union: {
      std::vector<Concept> flat;
      for (const auto& op : c.operands()) {
        Concept n = normalize(op);
        if (n.kind() == c.kind()) {
          flat.insert(flat.end(), n.operands().begin(), n.operands().end());
        } else {
          flat.push_back(std::move(n));
        }
      }
      std::vector<std::pair<std::string, Concept>> keyed;
      keyed.reserve(flat.size());
      for (auto& f : flat) keyed.emplace_back(serialize(f), std::move(f));
      std::sort(keyed.begin(), keyed.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
      keyed.erase(std::unique(keyed.begin(), keyed.end(),
                              [](const auto& x, const auto& y) { return x.first == y.first; }),
                  keyed.end());
      std::vector<Concept> ops;
      for (auto& [key, op] : keyed) ops.push_back(std::move(op));
      return c.kind() == K::Intersection ? Concept::intersection(std::move(ops))
                                         : Concept::union_of(std::move(ops));
    }
    case K::Exists:
      return Concept::exists(c.role(), normalize(c.filler()));
    case K::Forall:
      return Concept::forall(c.role(), normalize(c.filler()));
    case K::Opt:
      return Concept::optimum(c.direction(), normalize(c.filler()));
    default:
      return c;
  }
}

Axiom normalize(const Axiom& a) {
  Axiom out = a;
  out.lhs = normalize(a.lhs);
  out.rhs = normalize(a.rhs);
  return out;
}

bool structurally_equal(const Concept& a, const Concept& b) {
  return serialize(normalize(a)) == serialize(normalize(b));
}

bool structurally_equal(const Axiom& a, const Axiom& b) {
  return serialize(normalize(a)) == serialize(normalize(b));
}

bool structurally_equal(const Expr& a, const Expr& b) {
  if (a.index() != b.index()) return false;
  if (const auto* ca = std::get_if<Concept>(&a)) return structurally_equal(*ca, std::get<Concept>(b));
  return structurally_equal(std::get<Axiom>(a), std::get<Axiom>(b));
}

namespace {

bool role_ok(const Role& r) { return valid_name(r.name); }

bool fragment(const Concept& c, bool root) {
  using K = Concept::Kind;
  switch (c.kind()) {
    case K::Atomic:
    case K::Nominal:
      return valid_name(c.name());
    case K::Intersection:
    case K::Union:
      return c.operands().size() >= 2 &&
             std::all_of(c.operands().begin(), c.operands().end(),
                         [](const Concept& op) { return fragment(op, false); });
    case K::Exists:
    case K::Forall:
      return role_ok(c.role()) && fragment(c.filler(), false);
    case K::Opt:
      return root && fragment(c.filler(), false);
    case K::Integer:
    case K::Count:
    case K::Thing:
      return true;
  }
  return false;
}

}  // namespace

bool check_fragment(const Concept& c) { return fragment(c, true); }

bool check_fragment(const Axiom& a) {
  if (a.kind == Axiom::Kind::SubRoleOf) {
    return role_ok(a.lrole) && role_ok(a.rrole) && !a.lrole.inverse && !a.rrole.inverse;
  }
  if (a.kind == Axiom::Kind::EquivalentTo && a.lhs.kind() != Concept::Kind::Atomic) return false;
  return fragment(a.lhs, false) && fragment(a.rhs, a.kind == Axiom::Kind::EquivalentTo);
}

}  // namespace wh2dl::dl
