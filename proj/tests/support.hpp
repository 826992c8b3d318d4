#pragma once

#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "wh2dl/dl/expr.hpp"

namespace wh2dl::testing {

inline std::string source_path(const std::string& rel) { return std::string(WH2DL_SOURCE_DIR) + "/" + rel; }

inline std::vector<nlohmann::json> read_jsonl(const std::string& rel) {
  std::ifstream in(source_path(rel));
  std::vector<nlohmann::json> out;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) out.push_back(nlohmann::json::parse(line));
  return out;
}

// Random well-formed expressions for round-trip checks.
class ExprGen {
 public:
  explicit ExprGen(unsigned seed) : rng_(seed) {}

  dl::Role role() {
    static const char* names[] = {"of", "in", "has", "located_in", "does_have", "r7"};
    dl::Role r{names[pick(6)], pick(3) == 0, std::nullopt};
    switch (pick(5)) {
      case 0: r.temporal = dl::Temporal::Sometimes; break;
      case 1: r.temporal = dl::Temporal::Always; break;
      default: break;
    }
    return r;
  }

  dl::Concept concept_at(int depth) {
    static const char* atoms[] = {"Cat", "Country", "Big_Old_Red_House", "A", "B", "State_Capital", "C3"};
    static const char* individuals[] = {"USA", "New_York", "Zzyzx", "World_War_II"};
    int leaf_only = depth <= 1;
    int choice = leaf_only ? pick(5) : pick(10);
    switch (choice) {
      case 0: case 1: return dl::Concept::atomic(atoms[pick(7)]);
      case 2: return dl::Concept::nominal(individuals[pick(4)]);
      case 3: return pick(2) ? dl::Concept::integer() : dl::Concept::count();
      case 4: return dl::Concept::thing();
      case 5: case 6: {
        std::vector<dl::Concept> ops;
        int n = 2 + pick(2);
        for (int i = 0; i < n; ++i) ops.push_back(concept_at(depth - 1));
        return choice == 5 ? dl::Concept::intersection(ops) : dl::Concept::union_of(ops);
      }
      case 7: case 8: return dl::Concept::exists(role(), concept_at(depth - 1));
      default: return dl::Concept::forall(role(), concept_at(depth - 1));
    }
  }

  // Depth counts constructors from the root; the optimum marker only wraps
  // the root.
  dl::Concept concept_expr(int max_depth) {
    auto c = concept_at(max_depth);
    if (max_depth > 1 && pick(8) == 0)
      return dl::Concept::optimum(pick(2) ? dl::Optimum::Max : dl::Optimum::Min, concept_at(max_depth - 1));
    return c;
  }

  dl::Axiom axiom(int max_depth) {
    switch (pick(4)) {
      case 0: return dl::Axiom::sub(concept_at(max_depth - 1), concept_at(max_depth - 1));
      case 1: return dl::Axiom::equiv("D_F", concept_at(max_depth - 1));
      case 2: return dl::Axiom::disjoint(concept_at(max_depth - 1), concept_at(max_depth - 1));
      default: return dl::Axiom::sub_role("located_in", "in");
    }
  }

  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

 private:
  std::mt19937 rng_;
};

inline int depth(const dl::Concept& c) {
  using K = dl::Concept::Kind;
  switch (c.kind()) {
    case K::Intersection:
    case K::Union: {
      int d = 0;
      for (const auto& o : c.operands()) d = std::max(d, depth(o));
      return d + 1;
    }
    case K::Exists:
    case K::Forall:
    case K::Opt: return depth(c.filler()) + 1;
    default: return 1;
  }
}

}  // namespace wh2dl::testing
