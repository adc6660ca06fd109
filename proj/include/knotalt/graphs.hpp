#pragma once

#include <span>
#include <string>
#include <vector>

#include "knotalt/diagram.hpp"
#include "knotalt/seifert.hpp"

namespace knotalt {

// ---------------------------------------------------------------------------
// Enhanced checkerboard digraph: a vertex per region, an arc per crossing from
// its out-of region to its into region, signed by the crossing.

struct SpatialVertex {
  int region;
  Color color;
};

struct DirectedSignedEdge {
  int id;  // crossing
  int from;
  int to;
  Sign sign;
};

struct SpatialGraph {
  std::vector<SpatialVertex> vertices;
  std::vector<DirectedSignedEdge> edges;
};

SpatialGraph build_spatial_graph(const Diagram& dg, std::span<const Sign> signs);
inline SpatialGraph build_spatial_graph(const Diagram& dg) {
  return build_spatial_graph(dg, dg.signs);
}

struct DegreePair {
  int out = 0;
  int in = 0;
  bool operator==(const DegreePair&) const = default;
};

std::vector<DegreePair> check_balance(const SpatialGraph& g);

/// Component index of every vertex, ignoring direction. Components are
/// numbered by their smallest vertex.
std::vector<int> components(const SpatialGraph& g);

/// Splits the arcs into edge-disjoint directed cycles without repeated
/// vertices. Throws ConsistencyError if some vertex is unbalanced.
std::vector<std::vector<int>> cycle_decomposition(const SpatialGraph& g);

// ---------------------------------------------------------------------------
// Undirected signed multigraphs: the Seifert graph and its labeled variant.

struct SignedEdge {
  int id;  // crossing
  int u;
  int v;
  Sign sign;
};

struct SignedGraph {
  int vertex_count = 0;
  std::vector<SignedEdge> edges;
};

struct LabeledSeifertGraph {
  SignedGraph graph;
  std::vector<int> heights;  // per vertex (circle)
};

LabeledSeifertGraph build_labeled_seifert_graph(const SeifertDiagram& sd);

struct Block {
  int id = 0;
  std::vector<int> edges;     // edge ids, ascending
  std::vector<int> vertices;  // ascending
  bool homogeneous = true;
};

/// Maximal nonseparable subgraphs. Parallel edges share a block, a bridge is
/// its own block, a loop is its own block and isolated vertices belong to
/// none. Blocks are numbered by their smallest edge id.
std::vector<Block> blocks(const SignedGraph& g);

struct HeightSubgraph {
  int index = 0;
  std::vector<int> vertices;  // heights index-1 and index
  std::vector<int> edges;     // edge ids; none join two height index-1 vertices
};

/// One subgraph per height 0 .. max height.
std::vector<HeightSubgraph> height_subgraphs(const LabeledSeifertGraph& g);

/// Connected components of the subgraph of `g` spanned by `vertices` and
/// `edges`, each as an ascending vertex list, ordered by smallest vertex.
std::vector<std::vector<int>> subgraph_components(const SignedGraph& g,
                                                  std::span<const int> vertices,
                                                  std::span<const int> edges);

// ---------------------------------------------------------------------------
// Graphviz export. Output is deterministic: ascending vertex and edge ids.

std::string export_dot(const SpatialGraph& g);
/// `labeled` switches vertex labels from circle ids to heights.
std::string export_dot(const LabeledSeifertGraph& g, bool labeled);
std::string export_dot(const LabeledSeifertGraph& g, const HeightSubgraph& sub);

}  // namespace knotalt
