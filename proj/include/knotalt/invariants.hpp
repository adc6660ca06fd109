#pragma once

#include <string>
#include <vector>

#include "knotalt/classify.hpp"

namespace knotalt {

struct InvariantCheck {
  std::string name;
  bool ok = true;
  std::string detail;  // first counterexample when !ok
};

/// Structural facts every analysed diagram must satisfy: Euler count,
/// coloring, arc balance, digraph balance and components, cycle cover,
/// nesting heights, block/height-subgraph relations, and agreement of the
/// three alternativity tests.
std::vector<InvariantCheck> structural_checks(const Analysis& a);

/// Verdicts must not change when every crossing is switched or when any
/// region is taken as the outer one.
std::vector<InvariantCheck> metamorphic_checks(const PDCode& pd, const ClassifyOptions& options = {});

/// Same partition up to the order of classes and of members.
bool same_partition(std::vector<std::vector<int>> a, std::vector<std::vector<int>> b);

/// One dart per region whose corner lies in that region.
std::vector<int> outer_dart_choices(const Diagram& dg);

}  // namespace knotalt
