#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "knotalt/classify.hpp"
#include "knotalt/invariants.hpp"
#include "oracles.hpp"

using namespace knotalt;

namespace {

Analysis analysis_of(std::string_view text) { return analyze(parse_pd(text)); }

int degree_zero_vertices(const SpatialGraph& g) {
  int n = 0;
  for (const auto& d : check_balance(g)) n += d.in == 0 && d.out == 0;
  return n;
}

void check_cycles(const SpatialGraph& g, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> hits(g.edges.size(), 0);
  for (const auto& cyc : cycles) {
    REQUIRE_FALSE(cyc.empty());
    std::set<int> vertices;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      ++hits[cyc[i]];
      const auto& e = g.edges[cyc[i]];
      CHECK(e.to == g.edges[cyc[(i + 1) % cyc.size()]].from);
      CHECK(vertices.insert(e.from).second);
    }
  }
  for (int h : hits) CHECK(h == 1);
}

// Random multigraph with loops and parallel edges.
SignedGraph random_multigraph(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> vertices(1, 7), edges(0, 9);
  SignedGraph g;
  g.vertex_count = vertices(rng);
  std::uniform_int_distribution<int> vertex(0, g.vertex_count - 1);
  std::bernoulli_distribution coin(0.5);
  const int m = edges(rng);
  for (int i = 0; i < m; ++i)
    g.edges.push_back(SignedEdge{i, vertex(rng), vertex(rng), coin(rng) ? Sign::Positive : Sign::Negative});
  return g;
}

std::vector<std::vector<int>> block_edges(const std::vector<Block>& bs) {
  std::vector<std::vector<int>> out;
  for (const auto& b : bs) out.push_back(b.edges);
  return out;
}

}  // namespace

TEST_CASE("trefoil digraph: a signed 3-cycle on the petals, two isolated regions") {
  const auto a = analysis_of(fixture::kTrefoil);
  const auto& g = a.spatial;
  CHECK(g.vertices.size() == 5);
  REQUIRE(g.edges.size() == 3);
  for (const auto& e : g.edges) CHECK(e.sign == g.edges[0].sign);
  CHECK(degree_zero_vertices(g) == 2);
  for (const auto& d : check_balance(g)) CHECK((d == DegreePair{0, 0} || d == DegreePair{1, 1}));
  const auto cycles = cycle_decomposition(g);
  REQUIRE(cycles.size() == 1);
  CHECK(cycles[0].size() == 3);
  const auto comp = components(g);
  CHECK(std::set<int>(comp.begin(), comp.end()).size() == 3);
}

TEST_CASE("curl digraph: one loop") {
  const auto a = analysis_of(fixture::kCurl);
  const auto& g = a.spatial;
  CHECK(g.vertices.size() == 3);
  REQUIRE(g.edges.size() == 1);
  CHECK(g.edges[0].from == g.edges[0].to);
  CHECK(check_balance(g)[g.edges[0].from] == DegreePair{1, 1});
  CHECK(cycle_decomposition(g) == std::vector<std::vector<int>>{{0}});
}

TEST_CASE("unknot digraph: two isolated vertices") {
  const auto a = analysis_of("UNKNOT");
  CHECK(a.spatial.vertices.size() == 2);
  CHECK(a.spatial.edges.empty());
  CHECK(components(a.spatial) == std::vector<int>{0, 1});
  CHECK(cycle_decomposition(a.spatial).empty());
}

TEST_CASE("figure-eight digraph: four components, cycles cover the arcs") {
  const auto a = analysis_of(fixture::kFigureEight);
  std::set<int> comps;
  for (int c : components(a.spatial)) comps.insert(c);
  CHECK(comps.size() == 4);
  check_cycles(a.spatial, cycle_decomposition(a.spatial));
}

TEST_CASE("cycle decomposition on random diagrams") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 300; ++i) {
    const auto g = random_diagram(rng);
    const auto a = analyze(g.pd, ClassifyOptions{g.outer_dart});
    check_cycles(a.spatial, cycle_decomposition(a.spatial));
  }
}

TEST_CASE("cycle decomposition refuses an unbalanced digraph") {
  SpatialGraph g;
  g.vertices = {{0, Color::White}, {1, Color::Black}};
  g.edges = {{0, 0, 1, Sign::Positive}};
  CHECK_THROWS_AS(cycle_decomposition(g), ConsistencyError);
}

TEST_CASE("trefoil Seifert graph: heights 0 and 1, three like parallel edges") {
  const auto a = analysis_of(fixture::kTrefoil);
  const auto& g = a.labeled;
  CHECK(g.graph.vertex_count == 2);
  CHECK(std::multiset<int>(g.heights.begin(), g.heights.end()) == std::multiset<int>{0, 1});
  REQUIRE(g.graph.edges.size() == 3);
  for (const auto& e : g.graph.edges) {
    CHECK(std::minmax(e.u, e.v) == std::minmax(0, 1));
    CHECK(e.sign == g.graph.edges[0].sign);
  }
  REQUIRE(a.blocks.size() == 1);
  CHECK(a.blocks[0].vertices == std::vector<int>{0, 1});
  CHECK(a.blocks[0].edges == std::vector<int>{0, 1, 2});

  REQUIRE(a.subgraphs.size() == 2);
  const int low = g.heights[0] == 0 ? 0 : 1;
  CHECK(a.subgraphs[0].vertices == std::vector<int>{low});
  CHECK(a.subgraphs[0].edges.empty());
  CHECK(a.subgraphs[1].vertices == std::vector<int>{0, 1});
  CHECK(a.subgraphs[1].edges == std::vector<int>{0, 1, 2});
}

TEST_CASE("figure-eight Seifert graph: two parallel pairs of opposite sign") {
  const auto a = analysis_of(fixture::kFigureEight);
  const auto& g = a.labeled.graph;
  CHECK(g.vertex_count == 3);
  std::map<std::pair<int, int>, std::set<Sign>> by_pair;
  std::map<std::pair<int, int>, int> count;
  for (const auto& e : g.edges) {
    const auto key = std::minmax(e.u, e.v);
    by_pair[key].insert(e.sign);
    ++count[key];
  }
  REQUIRE(count.size() == 2);
  for (const auto& [k, n] : count) CHECK(n == 2);
  for (const auto& [k, s] : by_pair) CHECK(s.size() == 1);
  CHECK(*by_pair.begin()->second.begin() != *by_pair.rbegin()->second.begin());
  CHECK(a.blocks.size() == 2);
}

TEST_CASE("unknot Seifert graph and its height subgraph") {
  const auto a = analysis_of("UNKNOT");
  CHECK(a.labeled.graph.vertex_count == 1);
  CHECK(a.labeled.heights == std::vector<int>{0});
  CHECK(a.blocks.empty());
  REQUIRE(a.subgraphs.size() == 1);
  CHECK(a.subgraphs[0].vertices == std::vector<int>{0});
  CHECK(a.subgraphs[0].edges.empty());
}

TEST_CASE("10_138 has height subgraphs G0 and G1") {
  const auto a = analyze(fixture::corpus("10_138"));
  CHECK(a.subgraphs.size() == 2);
}

TEST_CASE("small graphs: bridge, loop, isolated vertex") {
  SignedGraph g{3, {{0, 0, 1, Sign::Positive}}};
  auto bs = blocks(g);
  REQUIRE(bs.size() == 1);
  CHECK(bs[0].edges == std::vector<int>{0});
  CHECK(bs[0].vertices == std::vector<int>{0, 1});

  g.edges.push_back({1, 1, 1, Sign::Negative});
  bs = blocks(g);
  REQUIRE(bs.size() == 2);
  CHECK(bs[1].edges == std::vector<int>{1});
  CHECK(bs[1].vertices == std::vector<int>{1});
}

TEST_CASE("blocks agree with the common-cycle oracle") {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 500; ++i) {
    const auto g = random_multigraph(rng);
    CHECK(same_partition(block_edges(blocks(g)), oracle::blocks_by_cycles(g)));
  }
  for (int i = 0; i < 300; ++i) {
    const auto a = analyze(random_diagram(rng).pd);
    CHECK(same_partition(block_edges(a.blocks), oracle::blocks_by_cycles(a.labeled.graph)));
  }
}

TEST_CASE("block ids follow smallest edge id") {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 200; ++i) {
    const auto bs = blocks(random_multigraph(rng));
    for (std::size_t b = 0; b < bs.size(); ++b) {
      CHECK(bs[b].id == static_cast<int>(b));
      CHECK(std::is_sorted(bs[b].edges.begin(), bs[b].edges.end()));
      if (b) CHECK(bs[b - 1].edges.front() < bs[b].edges.front());
    }
  }
}

TEST_CASE("subgraph components") {
  SignedGraph g{5, {{0, 0, 1, Sign::Positive}, {1, 2, 3, Sign::Positive}, {2, 3, 4, Sign::Negative}}};
  const std::vector<int> vertices{0, 1, 2, 3, 4};
  CHECK(subgraph_components(g, vertices, std::vector<int>{0, 2}) ==
        std::vector<std::vector<int>>{{0, 1}, {2}, {3, 4}});
}

TEST_CASE("DOT for the trefoil") {
  const auto a = analysis_of(fixture::kTrefoil);
  const auto labeled = export_dot(a.labeled, true);
  CHECK(labeled ==
        "graph labeled_seifert {\n"
        "  c0 [label=\"1\"];\n"
        "  c1 [label=\"0\"];\n"
        "  c1 -- c0 [label=\"-\", style=dashed];\n"
        "  c1 -- c0 [label=\"-\", style=dashed];\n"
        "  c1 -- c0 [label=\"-\", style=dashed];\n"
        "}\n");
  CHECK(export_dot(a.labeled, false).find("c0 [label=\"0\"]") != std::string::npos);

  const auto spatial = export_dot(a.spatial);
  CHECK(spatial.rfind("digraph spatial {\n", 0) == 0);
  CHECK(std::count(spatial.begin(), spatial.end(), '\n') == 1 + 5 + 3 + 1);
  CHECK(export_dot(a.spatial) == spatial);

  const auto g1 = export_dot(a.labeled, a.subgraphs[1]);
  CHECK(g1.rfind("graph g1 {\n", 0) == 0);
  const auto g0 = export_dot(a.labeled, a.subgraphs[0]);
  CHECK(g0 == "graph g0 {\n  c1 [label=\"0\"];\n}\n");
}

TEST_CASE("DOT for an empty graph is a valid document") {
  CHECK(export_dot(LabeledSeifertGraph{}, true) == "graph labeled_seifert {\n}\n");
  CHECK(export_dot(SpatialGraph{}) == "digraph spatial {\n}\n");
}
