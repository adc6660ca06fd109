#pragma once

#include <random>
#include <vector>

#include "knotalt/pd_code.hpp"

namespace knotalt {

struct Point {
  double x = 0;
  double y = 0;
};

/// A diagram drawn from random closed polygons, together with its geometry.
struct GeometricDiagram {
  PDCode pd;
  // Polyline of each edge from its tail crossing to its head crossing,
  // indexed by label - 1.
  std::vector<std::vector<Point>> edge_paths;
  std::vector<Point> crossing_points;
  // Dart whose corner is the unbounded face of the drawing.
  int outer_dart = 0;
};

struct RandomDiagramOptions {
  int min_crossings = 1;
  int max_crossings = 8;
  int max_components = 2;
  int min_vertices = 4;
  int max_vertices = 7;
};

/// Samples closed polygons with random vertices in the unit square until
/// their self-intersections give a connected diagram within the crossing
/// bounds. Over/under is chosen uniformly at each crossing.
GeometricDiagram random_diagram(std::mt19937_64& rng, const RandomDiagramOptions& options = {});

}  // namespace knotalt
