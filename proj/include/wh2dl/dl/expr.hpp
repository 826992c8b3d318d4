#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace wh2dl::dl {

enum class Temporal { Sometimes, Always };

// NAME, inv(NAME), sometimes:NAME, always:NAME. Inversion of a temporal role
// prints as inv(sometimes:NAME).
struct Role {
  std::string name;
  bool inverse = false;
  std::optional<Temporal> temporal;

  static Role atomic(std::string name) { return Role{std::move(name), false, std::nullopt}; }
  static Role inv(std::string name) { return Role{std::move(name), true, std::nullopt}; }
  static Role qualified(Temporal t, std::string name) {
    return Role{std::move(name), false, t};
  }

  bool operator==(const Role&) const = default;
};

enum class Optimum { Max, Min };

class Concept {
 public:
  enum class Kind { Atomic, Nominal, Intersection, Union, Exists, Forall, Integer, Count, Thing, Opt };

  static Concept atomic(std::string name);
  static Concept nominal(std::string individual);
  // Fewer than two operands collapse: {} -> Thing, {c} -> c.
  static Concept intersection(std::vector<Concept> operands);
  static Concept union_of(std::vector<Concept> operands);
  static Concept exists(Role role, Concept filler);
  static Concept forall(Role role, Concept filler);
  static Concept integer();
  static Concept count();
  static Concept thing();
  // max(...) / min(...) marker around an Integer-valued concept.
  static Concept optimum(Optimum dir, Concept inner);

  Kind kind() const;
  const std::string& name() const;              // Atomic, Nominal
  const std::vector<Concept>& operands() const;  // Intersection, Union
  const Role& role() const;                      // Exists, Forall
  const Concept& filler() const;                 // Exists, Forall, Opt
  Optimum direction() const;                     // Opt

  bool operator==(const Concept& other) const;

 private:
  struct Node;
  explicit Concept(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Axiom {
  enum class Kind { SubClassOf, EquivalentTo, DisjointWith, SubRoleOf };

  Kind kind;
  Concept lhs = Concept::thing();
  Concept rhs = Concept::thing();
  Role lrole;  // SubRoleOf only
  Role rrole;

  static Axiom sub(Concept l, Concept r) { return {Kind::SubClassOf, std::move(l), std::move(r), {}, {}}; }
  static Axiom equiv(std::string name, Concept r) {
    return {Kind::EquivalentTo, Concept::atomic(std::move(name)), std::move(r), {}, {}};
  }
  static Axiom disjoint(Concept l, Concept r) {
    return {Kind::DisjointWith, std::move(l), std::move(r), {}, {}};
  }
  static Axiom sub_role(std::string l, std::string r) {
    return {Kind::SubRoleOf, Concept::thing(), Concept::thing(), Role::atomic(std::move(l)),
            Role::atomic(std::move(r))};
  }

  bool operator==(const Axiom&) const = default;
};

using Expr = std::variant<Concept, Axiom>;

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::size_t offset, const std::string& what)
      : std::runtime_error("offset " + std::to_string(offset) + ": " + what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

bool is_keyword(std::string_view word);
bool valid_name(std::string_view name);

std::string serialize(const Role& r);
std::string serialize(const Concept& c);
std::string serialize(const Axiom& a);
std::string serialize(const Expr& e);

Expr parse_dl(std::string_view text);
Concept parse_concept(std::string_view text);
Axiom parse_axiom(std::string_view text);

Concept normalize(const Concept& c);
Axiom normalize(const Axiom& a);

bool structurally_equal(const Concept& a, const Concept& b);
bool structurally_equal(const Axiom& a, const Axiom& b);
bool structurally_equal(const Expr& a, const Expr& b);

// True when only the permitted constructors appear and names are well formed.
// The optimum marker is accepted only at the root.
bool check_fragment(const Concept& c);
bool check_fragment(const Axiom& a);

}  // namespace wh2dl::dl
