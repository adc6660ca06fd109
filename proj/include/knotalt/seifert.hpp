#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "knotalt/diagram.hpp"

namespace knotalt {

struct SeifertCircle {
  int id = 0;
  // Alternating outgoing/incoming darts, one pair per edge, in travel order.
  std::vector<int> darts;
  int height = 0;
};

struct SiteMarker {
  int crossing = 0;
  Sign sign = Sign::Positive;
  std::pair<int, int> circles;  // circle through the under-strand first
  int space = -1;
};

struct Space {
  int id = 0;
  std::vector<int> regions;
  int height = -1;
  std::optional<int> outer_circle;  // absent for the unbounded space
  std::vector<int> inner_circles;
};

/// Circles and spaces arranged as an alternating tree rooted at the space
/// holding the outer region.
struct NestingTree {
  int root_space = 0;
  std::vector<int> circle_parent;             // space outside each circle
  std::vector<int> circle_child;              // space inside each circle
  std::vector<int> space_parent;              // circle around each space, -1 at the root
  std::vector<std::vector<int>> space_children;
};

struct SeifertDiagram {
  std::vector<SeifertCircle> circles;
  std::vector<SiteMarker> markers;  // indexed by crossing
  std::vector<Space> spaces;
  NestingTree tree;
  std::vector<int> dart_circle;  // circle through each dart

  int circle_count() const noexcept { return static_cast<int>(circles.size()); }
  int space_count() const noexcept { return static_cast<int>(spaces.size()); }
};

/// Seifert smoothing: circles and one marker per crossing. Spaces and
/// heights are filled in by compute_spaces, build_nesting and marker_spaces.
SeifertDiagram smooth(const Diagram& dg);

/// Union-find over regions, merging each crossing's into/out-of pair.
std::vector<Space> compute_spaces(const Diagram& dg);

/// Space on each side of a circle, relative to its orientation. Throws
/// ConsistencyError if the darts of the circle disagree.
std::pair<int, int> circle_sides(const Diagram& dg, const SeifertDiagram& sd,
                                 const std::vector<Space>& spaces, int circle);

/// Assembles the circle/space incidence into the nesting tree and assigns
/// heights to circles and spaces. Stores spaces and tree in `sd`.
void build_nesting(const Diagram& dg, SeifertDiagram& sd, std::vector<Space> spaces);

void marker_spaces(const Diagram& dg, SeifertDiagram& sd);

/// smooth + compute_spaces + build_nesting + marker_spaces.
SeifertDiagram seifert_diagram(const Diagram& dg);

}  // namespace knotalt
