#include "doctest.h"

#include <fstream>
#include <sstream>

#include "orbicurve/dominance.hpp"

using namespace orbicurve;

namespace {

std::string read_golden(const char* name) {
  std::ifstream in(std::string(ORBICURVE_GOLDEN_DIR) + "/" + name,
                   std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

} // namespace

TEST_CASE("graph construction basics") {
  DominanceGraph g;
  WeightedCurve line(0, {});
  WeightedCurve half(0, {2, 2});
  std::size_t a = g.add_node(line);
  CHECK(g.add_node(line) == a); // deduplicated
  g.add_node(half);
  g.add_edge(line, half, "C_2", 2);
  CHECK(g.nodes().size() == 2);
  CHECK(g.edges().size() == 1);
  CHECK(g.out_degree(*g.find(line)) == 1);
  CHECK(g.out_degree(*g.find(half)) == 0);
  CHECK_FALSE(g.find(WeightedCurve(0, {3, 3})).has_value());
  CHECK_THROWS_AS(g.add_edge(line, WeightedCurve(0, {3, 3}), "C_3", 3),
                  DomainError);
  CHECK_THROWS_AS(g.mark_truncated(WeightedCurve(0, {5, 5})), DomainError);
}

TEST_CASE("terminal nodes exclude truncated ones") {
  DominanceGraph g;
  WeightedCurve line(0, {});
  WeightedCurve quad(0, {4, 4});
  g.add_node(line);
  g.add_node(quad);
  g.add_edge(line, quad, "C_4", 4);
  CHECK(g.terminal_nodes() == std::vector<WeightedCurve>{quad});
  g.mark_truncated(quad);
  CHECK(g.terminal_nodes().empty());
}

TEST_CASE("empty graph renders an empty digraph") {
  CHECK(emit_dot(DominanceGraph()) == "digraph dominance {\n}\n");
}

TEST_CASE("single edge dot output") {
  DominanceGraph g;
  WeightedCurve line(0, {});
  WeightedCurve half(0, {2, 2});
  g.add_node(line);
  g.add_node(half);
  g.add_edge(line, half, "C_2", 2);
  CHECK(emit_dot(g) ==
        "digraph dominance {\n"
        "  \"P1\" [chi=\"2\"];\n"
        "  \"<2,2>\" [chi=\"1\"];\n"
        "  \"P1\" -> \"<2,2>\" [label=\"G=C_2,|G|=2\"];\n"
        "}\n");
}

TEST_CASE("bounded positive graph matches the frozen renderings") {
  DominanceGraph small = build_positive_dominance(6, 3);
  CHECK(small.nodes().size() == 14);
  CHECK(small.edges().size() == 26);
  CHECK(emit_dot(small) == read_golden("dominance_n6_a3.dot"));

  DominanceGraph full = build_positive_dominance(12, 6);
  CHECK(full.nodes().size() == 26);
  CHECK(full.edges().size() == 56);
  CHECK(emit_dot(full) == read_golden("dominance_n12_a6.dot"));

  // byte-identical regeneration
  CHECK(emit_dot(build_positive_dominance(12, 6)) == emit_dot(full));
}

TEST_CASE("every edge divides chi and the graph is acyclic") {
  for (Weight n = 3; n <= 12; ++n)
    for (Weight a = 1; a <= 6; ++a) {
      DominanceGraph g = build_positive_dominance(n, a);
      CHECK(validate(g).empty());
    }
}

TEST_CASE("terminal curves are the two largest platonic lines") {
  std::vector<WeightedCurve> expected = {WeightedCurve(0, {2, 3, 4}),
                                         WeightedCurve(0, {2, 3, 5})};
  for (Weight n : {6, 9, 12})
    for (Weight a : {1, 3, 6})
      CHECK(build_positive_dominance(n, a).terminal_nodes() == expected);
}

TEST_CASE("no excluded shapes appear in the graph") {
  DominanceGraph g = build_positive_dominance(12, 6);
  for (const auto& node : g.nodes()) {
    CHECK(classify(node.curve) == Trisection::Spherical);
    const auto& w = node.curve.weights();
    if (w.size() == 2) CHECK(w[0] == w[1]);
  }
}

TEST_CASE("validate reports bad quotients and cycles") {
  DominanceGraph g;
  WeightedCurve line(0, {});
  WeightedCurve wrong(0, {3, 3});
  g.add_node(line);
  g.add_node(wrong);
  g.add_edge(line, wrong, "C_2", 2); // chi 2/2 != 2/3
  auto problems = validate(g);
  REQUIRE(problems.size() == 1);
  CHECK(problems[0].find("quotient chi") != std::string::npos);

  DominanceGraph cyc;
  WeightedCurve a(0, {3, 3}), b(0, {4, 4});
  cyc.add_node(a);
  cyc.add_node(b);
  cyc.add_edge(a, b, "C_1", 1); // chi mismatch aside, the shape is cyclic
  cyc.add_edge(b, a, "C_1", 1);
  bool saw_cycle = false;
  for (const auto& p : validate(cyc))
    if (p.find("cycle") != std::string::npos) saw_cycle = true;
  CHECK(saw_cycle);
}

TEST_CASE("bound validation") {
  CHECK_THROWS_AS(build_positive_dominance(2, 1), DomainError);
  CHECK_THROWS_AS(build_positive_dominance(6, 0), DomainError);
}

TEST_CASE("json rendering carries the adjacency data") {
  std::string json = emit_json(build_positive_dominance(6, 3));
  CHECK(json.find("\"kind\": \"dominance-graph\"") != std::string::npos);
  CHECK(json.find("\"schema_version\": 1") != std::string::npos);
  CHECK(json.find("<2,3,5>") != std::string::npos);
}
