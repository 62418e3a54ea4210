#include <doctest.h>

#include <random>

#include "pmnet/discovery.hpp"
#include "pmnet/error.hpp"
#include "pmnet/graph.hpp"
#include "pmnet/synth.hpp"

using namespace pmnet;

namespace {

UndirectedGraph four_cycle() {
  return UndirectedGraph(VarSet{0, 1, 2, 3}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}

UndirectedGraph figure3_graph() {
  // Adjacent pairs of the eight-variable example, 1-based.
  const std::vector<std::pair<VarIndex, VarIndex>> edges = {
      {7, 8}, {5, 7}, {5, 6}, {4, 8}, {4, 7}, {4, 6}, {4, 5},
      {3, 8}, {3, 7}, {2, 8}, {2, 7}, {1, 8}, {1, 2}};
  UndirectedGraph g(VarSet::range(8));
  for (const auto& [a, b] : edges) g.add_edge(a - 1, b - 1);
  return g;
}

std::vector<VarSet> subsets_of(const VarSet& s) {
  std::vector<VarSet> out;
  for (std::uint32_t mask = 0; mask < (1u << s.size()); ++mask) {
    std::vector<VarIndex> m;
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (mask & (1u << k)) m.push_back(s[k]);
    }
    out.emplace_back(std::move(m));
  }
  return out;
}

}  // namespace

TEST_CASE("graph construction rules") {
  UndirectedGraph g(VarSet{0, 1, 2});
  CHECK_THROWS_AS(g.add_edge(1, 1), Error);
  CHECK_THROWS_AS(g.add_edge(0, 5), Error);
  g.add_edge(2, 0);
  CHECK(g.adjacent(0, 2));
  CHECK(g.edges().begin()->first == 0);
}

TEST_CASE("neighbors") {
  CHECK(neighbors(four_cycle(), 0) == VarSet{1, 3});
  CHECK(neighbors(UndirectedGraph(VarSet{0, 1}), 0).empty());
  CHECK(neighbors(figure3_graph(), 5) == VarSet{3, 4});
  try {
    neighbors(four_cycle(), 7);
    FAIL("unknown vertex accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownVertex);
  }
}

TEST_CASE("separation on the four-cycle") {
  const UndirectedGraph g = four_cycle();
  CHECK(separates(g, {0}, {2}, {1, 3}));
  CHECK_FALSE(separates(g, {0}, {2}, {1}));
  CHECK_FALSE(separates(g, {0}, {1}, {}));
  // Disconnected parts are separated by the empty set.
  CHECK(separates(UndirectedGraph(VarSet{0, 1}), {0}, {1}, {}));
  try {
    separates(g, {0}, {0, 2}, {1});
    FAIL("overlap accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OverlappingSets);
  }
}

TEST_CASE("separation is symmetric and monotone in C") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    UndirectedGraph g(VarSet::range(6));
    for (VarIndex a = 0; a < 6; ++a) {
      for (VarIndex b = a + 1; b < 6; ++b) {
        if (rng() % 3 == 0) g.add_edge(a, b);
      }
    }
    for (const VarSet& c : subsets_of({2, 3, 4})) {
      const bool sep = separates(g, {0}, {1, 5}, c);
      CHECK(sep == separates(g, {1, 5}, {0}, c));
      if (!sep) continue;
      for (const VarSet& bigger : subsets_of({2, 3, 4})) {
        if (c.is_subset_of(bigger)) CHECK(separates(g, {0}, {1, 5}, bigger));
      }
    }
  }
}

TEST_CASE("junction tree graphs") {
  const UndirectedGraph two = junction_tree_graph(
      ClusterTree({{0, 1, 3}, {1, 2, 3}}, {{0, 1}}));
  CHECK(two == UndirectedGraph(VarSet{0, 1, 2, 3},
                               {{0, 1}, {0, 3}, {1, 3}, {1, 2}, {2, 3}}));
  CHECK(junction_tree_graph(figure3_tree()) == figure3_graph());
  CHECK(junction_tree_graph(ClusterTree(VarSet{0, 1, 2})).edges().size() == 3);
}

TEST_CASE("exports") {
  const std::vector<std::string> names = {"X1", "X2", "X3", "X4"};
  CHECK(export_graph(four_cycle(), GraphFormat::Dot, names) ==
        "graph G {\n  \"X1\";\n  \"X2\";\n  \"X3\";\n  \"X4\";\n"
        "  \"X1\" -- \"X2\";\n  \"X1\" -- \"X4\";\n  \"X2\" -- \"X3\";\n"
        "  \"X3\" -- \"X4\";\n}\n");
  CHECK(export_graph(four_cycle(), GraphFormat::Dot, names) ==
        export_graph(four_cycle(), GraphFormat::Dot, names));
  CHECK(export_graph(UndirectedGraph(VarSet{0, 1}), GraphFormat::AdjacencyTsv,
                     names) == "\tX1\tX2\nX1\t0\t0\nX2\t0\t0\n");
  const UndirectedGraph k3(VarSet{0, 1, 2}, {{0, 1}, {0, 2}, {1, 2}});
  CHECK(export_graph(k3, GraphFormat::AdjacencyTsv, {}) ==
        "\t0\t1\t2\n0\t0\t1\t1\n1\t1\t0\t1\n2\t1\t1\t0\n");
  CHECK(parse_graph_format("dot") == GraphFormat::Dot);
  CHECK(parse_graph_format("tsv") == GraphFormat::AdjacencyTsv);
  try {
    parse_graph_format("png");
    FAIL("unknown format accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownFormat);
  }
}

TEST_CASE("graph separation implies conditional independence in the examples") {
  auto check_all = [](const JointDistribution& p) {
    const UndirectedGraph g = discover(p).graph;
    const VarSet scope = p.scope();
    std::size_t separated = 0;
    for (const VarSet& a : subsets_of(scope)) {
      if (a.empty() || a.size() > 2) continue;
      for (const VarSet& b : subsets_of(scope.minus(a))) {
        if (b.empty() || b.size() > 2 || b < a) continue;
        const VarSet c = scope.minus(a).minus(b);
        for (const VarSet& sub : subsets_of(c)) {
          if (c.size() - sub.size() > 1) continue;
          if (separates(g, a, b, sub)) {
            ++separated;
            CHECK(conditional_independence(p, a, b, sub, 1e-9));
          }
        }
      }
    }
    CHECK(separated > 0);
  };
  check_all(moussouris());
  GeneratorConfig cfg{8, std::vector<std::size_t>(8, 2), 1.0, 3};
  check_all(jt_structured_distribution(cfg, figure3_tree()));
}
