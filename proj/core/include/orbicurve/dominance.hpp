#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "orbicurve/rational.hpp"
#include "orbicurve/weighted_curve.hpp"

namespace orbicurve {

struct DominanceNode {
  WeightedCurve curve;
  Rational chi;
  // Set when the bounds cut off quotient relations this node would have in
  // the unbounded graph; such a node is never reported as terminal.
  bool truncated = false;
};

/// Edge source -> target labeled by the acting group: target = source / G.
struct DominanceEdge {
  std::size_t source = 0;
  std::size_t target = 0;
  std::string group_label;
  Int group_order = 1;
};

class DominanceGraph {
public:
  /// Inserts the curve if not present; returns its index either way.
  std::size_t add_node(WeightedCurve curve);
  void mark_truncated(const WeightedCurve& curve);
  /// Both endpoints must already be nodes.
  void add_edge(const WeightedCurve& source, const WeightedCurve& target,
                std::string group_label, Int group_order);

  const std::vector<DominanceNode>& nodes() const { return nodes_; }
  const std::vector<DominanceEdge>& edges() const { return edges_; }
  std::optional<std::size_t> find(const WeightedCurve& curve) const;
  std::size_t out_degree(std::size_t node) const;

  /// Nodes with no outgoing edge and no bound-suppressed relations, sorted by
  /// (chi descending, weights lexicographic).
  std::vector<WeightedCurve> terminal_nodes() const;

private:
  std::vector<DominanceNode> nodes_;
  std::vector<DominanceEdge> edges_;
};

/// The positive-chi dominance graph with node families <m,m> and <2,2,m>
/// bounded by m <= n_max and the weight-multiplying rotations bounded by
/// a <= a_max. Requires n_max >= 3, a_max >= 1.
DominanceGraph build_positive_dominance(Weight n_max, Weight a_max);

/// Empty iff every edge divides chi exactly (chi_target = chi_source / |G|)
/// and the graph is acyclic.
std::vector<std::string> validate(const DominanceGraph& graph);

/// Deterministic DOT text; nodes sorted by (chi descending, weights
/// lexicographic), edge labels "G=<label>,|G|=<order>".
std::string emit_dot(const DominanceGraph& graph);

/// JSON adjacency form of the same data (versioned schema).
std::string emit_json(const DominanceGraph& graph);

} // namespace orbicurve
