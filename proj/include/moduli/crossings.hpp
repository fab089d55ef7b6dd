#pragma once

#include "moduli/arith.hpp"
#include "moduli/torsor.hpp"

#include <optional>
#include <string>
#include <vector>

namespace moduli {

struct GraphMember {
  std::string id;
  Int rank = 0;
  std::optional<Int> length;
  std::optional<Int> reduced_degree;
};

struct GraphNode {
  std::string id;
  std::vector<GraphMember> members;
  std::optional<Int> length;
  std::optional<Int> reduced_degree;
  std::vector<std::string> notes;
  Int rank() const;
};

struct GraphContext {
  std::string family;
  Int N = 1;
  Int p = 0;
  int n = 0;
  bool compactified = false;
  std::optional<Int> expected_total;
};

struct ComponentGraph {
  GraphContext context;
  std::vector<GraphNode> nodes;
  std::string crossings;
  std::vector<std::string> notes;
  Int total() const;
};

inline constexpr const char* kSupersingularCrossings =
    "all components meet pairwise above the supersingular j-invariants";

// Nodes Z[b][r] for r | N' and 0 <= b <= n, where N = p^n N'.
ComponentGraph build_h1_graph(Int N, Int p, bool compactified = false);
// Nodes lambda[j], or A[i]/lambda[j] when N has a prime-to-p part.
ComponentGraph build_h_graph(Int N, Int p, bool compactified = false);

struct ConsistencyReport {
  std::vector<CheckResult> identities;
  bool passed() const;
};

ConsistencyReport consistency_check(const ComponentGraph& g);
std::string emit_dot(const ComponentGraph& g);
std::string emit_json(const ComponentGraph& g);

}  // namespace moduli
