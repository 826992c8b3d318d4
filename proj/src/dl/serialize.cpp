#include "wh2dl/dl/expr.hpp"

namespace wh2dl::dl {

std::string serialize(const Role& r) {
  std::string base = r.name;
  if (r.temporal) base = (*r.temporal == Temporal::Sometimes ? "sometimes:" : "always:") + base;
  return r.inverse ? "inv(" + base + ")" : base;
}

std::string serialize(const Concept& c) {
  using K = Concept::Kind;
  switch (c.kind()) {
    case K::Atomic:
      return c.name();
    case K::Nominal:
      return "{" + c.name() + "}";
    case K::Intersection:
    case K::Union: {
      const char* op = c.kind() == K::Intersection ? " and " : " or ";
      std::string out = "(";
      for (std::size_t i = 0; i < c.operands().size(); ++i) {
        if (i) out += op;
        out += serialize(c.operands()[i]);
      }
      return out + ")";
    }
    case K::Exists:
      return "(some " + serialize(c.role()) + " . " + serialize(c.filler()) + ")";
    case K::Forall:
      return "(all " + serialize(c.role()) + " . " + serialize(c.filler()) + ")";
    case K::Integer:
      return "Integer";
    case K::Count:
      return "Count";
    case K::Thing:
      return "Thing";
    case K::Opt:
      return (c.direction() == Optimum::Max ? "max(" : "min(") + serialize(c.filler()) + ")";
  }
  return {};
}

std::string serialize(const Axiom& a) {
  switch (a.kind) {
    case Axiom::Kind::SubClassOf:
      return serialize(a.lhs) + " SubClassOf " + serialize(a.rhs);
    case Axiom::Kind::EquivalentTo:
      return serialize(a.lhs) + " EquivalentTo " + serialize(a.rhs);
    case Axiom::Kind::DisjointWith:
      return serialize(a.lhs) + " DisjointWith " + serialize(a.rhs);
    case Axiom::Kind::SubRoleOf:
      return serialize(a.lrole) + " SubRoleOf " + serialize(a.rrole);
  }
  return {};
}

std::string serialize(const Expr& e) {
  return std::visit([](const auto& x) { return serialize(x); }, e);
}

}  // namespace wh2dl::dl
