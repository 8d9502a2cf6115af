#include "orbicurve/dominance.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <numeric>

#include "orbicurve/errors.hpp"
#include "orbicurve/version.hpp"

namespace orbicurve {

std::size_t DominanceGraph::add_node(WeightedCurve curve) {
  if (auto idx = find(curve)) return *idx;
  DominanceNode node{curve, euler_characteristic(curve)};
  nodes_.push_back(std::move(node));
  return nodes_.size() - 1;
}

void DominanceGraph::mark_truncated(const WeightedCurve& curve) {
  auto idx = find(curve);
  if (!idx) throw DomainError("not a node: " + curve.label());
  nodes_[*idx].truncated = true;
}

void DominanceGraph::add_edge(const WeightedCurve& source,
                              const WeightedCurve& target,
                              std::string group_label, Int group_order) {
  auto s = find(source), t = find(target);
  if (!s) throw DomainError("edge source not in graph: " + source.label());
  if (!t) throw DomainError("edge target not in graph: " + target.label());
  edges_.push_back({*s, *t, std::move(group_label), std::move(group_order)});
}

std::optional<std::size_t> DominanceGraph::find(
    const WeightedCurve& curve) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (nodes_[i].curve == curve) return i;
  return std::nullopt;
}

std::size_t DominanceGraph::out_degree(std::size_t node) const {
  std::size_t n = 0;
  for (const auto& e : edges_)
    if (e.source == node) ++n;
  return n;
}

namespace {

// chi descending, then weight lists lexicographic: the display order.
bool display_before(const DominanceNode& a, const DominanceNode& b) {
  if (a.chi != b.chi) return a.chi > b.chi;
  return a.curve.weights() < b.curve.weights();
}

std::vector<std::size_t> display_order(const DominanceGraph& g) {
  std::vector<std::size_t> order(g.nodes().size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return display_before(g.nodes()[i], g.nodes()[j]);
  });
  return order;
}

} // namespace

std::vector<WeightedCurve> DominanceGraph::terminal_nodes() const {
  std::vector<std::size_t> terminal;
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (!nodes_[i].truncated && out_degree(i) == 0) terminal.push_back(i);
  std::sort(terminal.begin(), terminal.end(), [&](std::size_t i, std::size_t j) {
    return display_before(nodes_[i], nodes_[j]);
  });
  std::vector<WeightedCurve> out;
  out.reserve(terminal.size());
  for (std::size_t i : terminal) out.push_back(nodes_[i].curve);
  return out;
}

DominanceGraph build_positive_dominance(Weight n_max, Weight a_max) {
  if (n_max < 3) throw DomainError("n_max must be >= 3");
  if (a_max < 1) throw DomainError("a_max must be >= 1");

  DominanceGraph g;
  WeightedCurve p1(0, {});
  g.add_node(p1);
  for (Weight m = 2; m <= n_max; ++m) g.add_node(WeightedCurve(0, {m, m}));
  for (Weight m = 2; m <= n_max; ++m) g.add_node(WeightedCurve(0, {2, 2, m}));
  WeightedCurve t233(0, {2, 3, 3}), t234(0, {2, 3, 4}), t235(0, {2, 3, 5});
  g.add_node(t233);
  g.add_node(t234);
  g.add_node(t235);

  // Both infinite families out of the sphere continue past any bound.
  g.mark_truncated(p1);

  for (Weight m = 2; m <= n_max; ++m) {
    WeightedCurve mm(0, {m, m}), ladder(0, {2, 2, m});
    // C_m rotation of the sphere: the two fixed poles acquire branching m.
    g.add_edge(p1, mm, "C_" + std::to_string(m), m);
    // Full dihedral action: pole pair plus two orbits of half-turn axes.
    g.add_edge(p1, ladder, "D_" + std::to_string(m), 2 * m);
    // Half-turn swapping the two weighted poles of <m,m>.
    g.add_edge(mm, ladder, "C_2", 2);
    // C_a rotation fixing both weighted poles multiplies their weights by a.
    // Every a >= 2 acts, so any bound truncates this family.
    g.mark_truncated(mm);
    for (Weight a = 2; a <= a_max; ++a) {
      if (a * m > n_max) break;
      g.add_edge(mm, WeightedCurve(0, {a * m, a * m}),
                 "C_" + std::to_string(a), a);
    }
    // Half-turn about the m-point: the two 2-points fuse, the opposite fixed
    // point becomes a fresh 2-point, and m doubles.
    if (2 * m <= n_max)
      g.add_edge(ladder, WeightedCurve(0, {2, 2, 2 * m}), "C_2", 2);
    else
      g.mark_truncated(ladder);
  }

  WeightedCurve t222(0, {2, 2, 2});
  // C_3 permuting the three 2-points cyclically.
  g.add_edge(t222, t233, "C_3", 3);
  // The full S_3 on the three 2-points.
  g.add_edge(t222, t234, "D_3", 6);
  // Half-turn swapping the two 3-points.
  g.add_edge(t233, t234, "C_2", 2);
  // Tetrahedral action: edge, face and vertex orbits give 2, 3, 3.
  g.add_edge(p1, t233, "A_4", 12);
  // Octahedral action.
  g.add_edge(p1, t234, "S_4", 24);
  // Icosahedral action.
  g.add_edge(p1, t235, "A_5", 60);
  return g;
}

std::vector<std::string> validate(const DominanceGraph& graph) {
  std::vector<std::string> violations;
  const auto& nodes = graph.nodes();
  for (const auto& e : graph.edges()) {
    Rational expected =
        riemann_hurwitz_chi(nodes[e.source].chi, e.group_order);
    if (expected != nodes[e.target].chi)
      violations.push_back(
          "edge " + nodes[e.source].curve.label() + " -> " +
          nodes[e.target].curve.label() + " (|G| = " + e.group_order.str() +
          "): quotient chi is " + expected.str() + " but target has " +
          nodes[e.target].chi.str());
  }

  // Kahn peeling; whatever survives lies on a cycle.
  std::vector<std::size_t> in_degree(nodes.size(), 0);
  for (const auto& e : graph.edges()) ++in_degree[e.target];
  std::vector<std::size_t> queue;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (in_degree[i] == 0) queue.push_back(i);
  std::size_t removed = 0;
  while (!queue.empty()) {
    std::size_t i = queue.back();
    queue.pop_back();
    ++removed;
    for (const auto& e : graph.edges())
      if (e.source == i && --in_degree[e.target] == 0) queue.push_back(e.target);
  }
  if (removed != nodes.size()) {
    std::vector<std::string> cyclic;
    for (std::size_t i = 0; i < nodes.size(); ++i)
      if (in_degree[i] > 0) cyclic.push_back(nodes[i].curve.label());
    std::sort(cyclic.begin(), cyclic.end());
    std::string line = "cycle through:";
    for (const auto& label : cyclic) line += " " + label;
    violations.push_back(std::move(line));
  }
  return violations;
}

namespace {

std::vector<std::size_t> sorted_edge_order(const DominanceGraph& g,
                                           const std::vector<std::size_t>& rank) {
  std::vector<std::size_t> order(g.edges().size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    const auto& a = g.edges()[i];
    const auto& b = g.edges()[j];
    if (rank[a.source] != rank[b.source]) return rank[a.source] < rank[b.source];
    if (rank[a.target] != rank[b.target]) return rank[a.target] < rank[b.target];
    if (a.group_order != b.group_order) return a.group_order < b.group_order;
    return a.group_label < b.group_label;
  });
  return order;
}

std::vector<std::size_t> node_ranks(const DominanceGraph& g,
                                    const std::vector<std::size_t>& order) {
  std::vector<std::size_t> rank(order.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) rank[order[pos]] = pos;
  return rank;
}

} // namespace

std::string emit_dot(const DominanceGraph& graph) {
  auto order = display_order(graph);
  auto rank = node_ranks(graph, order);
  std::string out = "digraph dominance {\n";
  for (std::size_t i : order) {
    const auto& node = graph.nodes()[i];
    out += "  \"" + node.curve.label() + "\" [chi=\"" + node.chi.str() +
           "\"];\n";
  }
  for (std::size_t i : sorted_edge_order(graph, rank)) {
    const auto& e = graph.edges()[i];
    out += "  \"" + graph.nodes()[e.source].curve.label() + "\" -> \"" +
           graph.nodes()[e.target].curve.label() + "\" [label=\"G=" +
           e.group_label + ",|G|=" + e.group_order.str() + "\"];\n";
  }
  out += "}\n";
  return out;
}

std::string emit_json(const DominanceGraph& graph) {
  auto order = display_order(graph);
  auto rank = node_ranks(graph, order);
  nlohmann::json j;
  j["schema_version"] = json_schema_version;
  j["tool_version"] = version;
  j["kind"] = "dominance-graph";
  auto& nodes = j["nodes"] = nlohmann::json::array();
  for (std::size_t i : order) {
    const auto& node = graph.nodes()[i];
    nodes.push_back({{"label", node.curve.label()},
                     {"weights", node.curve.weights()},
                     {"chi", node.chi.str()},
                     {"truncated", node.truncated}});
  }
  auto& edges = j["edges"] = nlohmann::json::array();
  for (std::size_t i : sorted_edge_order(graph, rank)) {
    const auto& e = graph.edges()[i];
    edges.push_back({{"source", graph.nodes()[e.source].curve.label()},
                     {"target", graph.nodes()[e.target].curve.label()},
                     {"group", e.group_label},
                     {"order", e.group_order.str()}});
  }
  return j.dump(2) + "\n";
}

} // namespace orbicurve
