#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knotalt/diagram.hpp"
#include "knotalt/graphs.hpp"
#include "knotalt/seifert.hpp"

namespace knotalt {

// Witnesses name the lexicographically least offending object. `first` is
// its smallest edge (crossing) id, `conflicting` the smallest one of the
// other sign.

struct BlockWitness {
  int block;
  int first;
  int conflicting;
  bool operator==(const BlockWitness&) const = default;
};

struct SpaceWitness {
  int space;
  int first;
  int conflicting;
  bool operator==(const SpaceWitness&) const = default;
};

struct ComponentWitness {
  int height_index;  // -1 for a component of the checkerboard digraph
  std::vector<int> vertices;
  int first;
  int conflicting;
  bool operator==(const ComponentWitness&) const = default;
};

template <typename W>
struct Judgement {
  bool holds = true;
  std::optional<W> witness;
};

/// Every block of the Seifert graph carries a single edge sign.
Judgement<BlockWitness> is_homogeneous(const std::vector<Block>& blocks,
                                       const SignedGraph& g);

/// No space of the Seifert diagram holds markers of both signs.
Judgement<SpaceWitness> alternative_by_spaces(const SeifertDiagram& sd);

/// No connected component of the checkerboard digraph carries both signs.
/// Any two arcs of one component lie on a common walk.
Judgement<ComponentWitness> alternative_by_spatial(const SpatialGraph& g);

/// Every component of every height subgraph carries a single sign.
Judgement<ComponentWitness> alternative_by_heights(const LabeledSeifertGraph& g,
                                                   const std::vector<HeightSubgraph>& subgraphs);

struct MethodResults {
  bool spaces = true;
  bool spatial = true;
  bool heights = true;
  bool operator==(const MethodResults&) const = default;
};

struct Verdict {
  std::string name;
  bool homogeneous = true;
  bool alternative = true;
  MethodResults methods;
  std::optional<BlockWitness> block_witness;
  std::optional<SpaceWitness> space_witness;
  std::optional<ComponentWitness> spatial_witness;
  std::optional<ComponentWitness> height_witness;
};

// Test hook: compute the digraph's arc signs with a label-difference rule
// that mishandles the wrap-around edge, leaving the other two tests intact.
enum class FaultInjection { None, SpatialSignByLabels };

struct ClassifyOptions {
  std::optional<int> outer_dart;
  FaultInjection fault = FaultInjection::None;
};

/// Everything derived from one diagram with one choice of outer region.
struct Analysis {
  std::string name;
  Diagram diagram;
  SeifertDiagram seifert;
  SpatialGraph spatial;
  LabeledSeifertGraph labeled;
  std::vector<Block> blocks;
  std::vector<HeightSubgraph> subgraphs;
  Verdict verdict;
};

/// Evaluates all three alternativity tests and homogeneity without
/// cross-checking them.
Verdict evaluate(const Analysis& a);

/// Runs the pipeline without cross-checking the results.
Analysis build_analysis(const PDCode& pd, const ClassifyOptions& options = {},
                        std::string name = {});

/// Throws ConsistencyError (with a dump of the three results) if the
/// alternativity tests disagree or an alternative diagram is not homogeneous.
void cross_check(const Analysis& a);

/// build_analysis followed by cross_check.
Analysis analyze(const PDCode& pd, const ClassifyOptions& options = {}, std::string name = {});

Verdict classify(const PDCode& pd, const ClassifyOptions& options = {}, std::string name = {});

/// Sign of each crossing computed from label differences alone. Wrong at
/// crossings whose over-strand wraps from the largest label to the smallest.
std::vector<Sign> label_difference_signs(const PDCode& pd);

}  // namespace knotalt
