#pragma once

// Slow, independent reimplementations used only to check the library.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "knotalt/graphs.hpp"
#include "knotalt/random_diagram.hpp"
#include "knotalt/seifert.hpp"

namespace oracle {

using namespace knotalt;

// Seifert circles traced on labels alone: arriving on the under-strand we
// leave on the outgoing over-strand, arriving on the over-strand we leave on
// the outgoing under-strand. Returns the circle index of every label.
inline std::map<Label, int> seifert_circles(const PDCode& pd) {
  std::map<Label, std::pair<int, int>> head;  // label -> (crossing, slot) where it arrives
  for (int c = 0; c < pd.crossing_count(); ++c)
    for (int s = 0; s < 4; ++s)
      if (pd.incoming[c][s]) head[pd.crossings[c][s]] = {c, s};
  std::map<Label, int> circle;
  int count = 0;
  for (const auto& [start, unused] : head) {
    if (circle.count(start)) continue;
    Label l = start;
    while (!circle.count(l)) {
      circle[l] = count;
      const auto [c, s] = head.at(l);
      int exit;
      if (s == 0) {
        exit = pd.incoming[c][1] ? 3 : 1;
      } else {
        exit = 2;
      }
      l = pd.crossings[c][exit];
    }
    ++count;
  }
  return circle;
}

inline int seifert_circle_count(const PDCode& pd) {
  if (pd.crossing_count() == 0) return pd.components;
  int top = -1;
  for (const auto& [l, c] : seifert_circles(pd)) top = std::max(top, c);
  return top + 1;
}

// Edges lying on a common simple cycle share a block. Every simple cycle is
// enumerated; isolated bridges and loops end up alone.
inline std::vector<std::vector<int>> blocks_by_cycles(const SignedGraph& g) {
  const int m = static_cast<int>(g.edges.size());
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  std::vector<int> path_edges;
  std::vector<bool> on_path(g.vertex_count, false);
  auto dfs = [&](auto&& self, int start, int v) -> void {
    for (int i = 0; i < m; ++i) {
      const auto& e = g.edges[i];
      if (e.u == e.v) continue;
      if (e.u != v && e.v != v) continue;
      if (std::find(path_edges.begin(), path_edges.end(), i) != path_edges.end()) continue;
      const int w = e.u == v ? e.v : e.u;
      if (w == start && !path_edges.empty()) {
        path_edges.push_back(i);
        for (int x : path_edges) parent[find(x)] = find(path_edges.front());
        path_edges.pop_back();
        continue;
      }
      if (on_path[w] || w < start) continue;
      on_path[w] = true;
      path_edges.push_back(i);
      self(self, start, w);
      path_edges.pop_back();
      on_path[w] = false;
    }
  };
  for (int s = 0; s < g.vertex_count; ++s) {
    on_path[s] = true;
    dfs(dfs, s, s);
    on_path[s] = false;
  }
  std::map<int, std::vector<int>> classes;
  for (int i = 0; i < m; ++i) classes[find(i)].push_back(g.edges[i].id);
  std::vector<std::vector<int>> out;
  for (auto& [root, ids] : classes) {
    std::sort(ids.begin(), ids.end());
    out.push_back(ids);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool homogeneous_by_cycles(const SignedGraph& g) {
  std::map<int, Sign> sign;
  for (const auto& e : g.edges) sign[e.id] = e.sign;
  for (const auto& block : blocks_by_cycles(g))
    for (int id : block)
      if (sign[id] != sign[block.front()]) return false;
  return true;
}

// Faces traced on labels: the corner between slots i and i+1 of a crossing
// continues, across the edge at slot i+1, at the corner after the slot where
// that edge lands. Returns the face of each corner 4c+i.
inline std::vector<int> label_faces(const PDCode& pd) {
  const int n = pd.crossing_count();
  std::map<Label, std::vector<std::pair<int, int>>> ends;
  for (int c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s) ends[pd.crossings[c][s]].push_back({c, s});
  std::vector<int> face(4 * n, -1);
  int count = 0;
  for (int start = 0; start < 4 * n; ++start) {
    if (face[start] >= 0) continue;
    int corner = start;
    while (face[corner] < 0) {
      face[corner] = count;
      const int c = corner / 4, s = (corner % 4 + 1) % 4;
      const auto& e = ends.at(pd.crossings[c][s]);
      // A curl lands on the same crossing; take the other end.
      const auto other = e[0] == std::pair{c, s} ? e[1] : e[0];
      corner = 4 * other.first + other.second;
    }
    ++count;
  }
  return face;
}

// Alternativity read straight off the definition: faces joined at each
// crossing through its into and out-of corners make up the spaces, and a
// crossing belongs to the space of its into corner.
inline bool alternative_by_faces(const PDCode& pd) {
  const int n = pd.crossing_count();
  if (n == 0) return true;
  const auto face = label_faces(pd);
  const int faces = *std::max_element(face.begin(), face.end()) + 1;
  std::vector<int> parent(faces);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  std::vector<int> into(n);
  for (int c = 0; c < n; ++c) {
    const bool over_from_3 = pd.incoming[c][3];
    // Outgoing slots are 2 and the over exit; incoming are 0 and the over entry.
    const int into_corner = over_from_3 ? 1 : 2;  // between 1,2 or between 2,3
    const int out_corner = over_from_3 ? 3 : 0;   // between 3,0 or between 0,1
    into[c] = face[4 * c + into_corner];
    parent[find(into[c])] = find(face[4 * c + out_corner]);
  }
  std::map<int, std::set<bool>> signs;
  for (int c = 0; c < n; ++c) signs[find(into[c])].insert(pd.incoming[c][3]);
  for (const auto& [space, s] : signs)
    if (s.size() > 1) return false;
  return true;
}

// Even-odd ray casting.
inline bool inside(const std::vector<Point>& poly, Point p) {
  bool in = false;
  for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
    const Point a = poly[i], b = poly[j];
    if ((a.y > p.y) != (b.y > p.y) && p.x < (b.x - a.x) * (p.y - a.y) / (b.y - a.y) + a.x) in = !in;
  }
  return in;
}

// Circle heights read off the drawing: the number of other circles whose
// polygon contains a point of this circle.
inline std::vector<int> geometric_heights(const GeometricDiagram& g, const Diagram& dg,
                                          const SeifertDiagram& sd) {
  std::vector<std::vector<Point>> polys;
  std::vector<Point> probes;
  for (const auto& circle : sd.circles) {
    std::vector<Point> poly;
    for (std::size_t i = 0; i < circle.darts.size(); i += 2) {
      const auto& path = g.edge_paths[dg.map.dart(circle.darts[i]).label - 1];
      poly.insert(poly.end(), path.begin(), path.end() - 1);
    }
    const auto& first = g.edge_paths[dg.map.dart(circle.darts[0]).label - 1];
    probes.push_back(Point{(first[0].x + first[1].x) / 2, (first[0].y + first[1].y) / 2});
    polys.push_back(std::move(poly));
  }
  std::vector<int> heights(polys.size(), 0);
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (std::size_t j = 0; j < polys.size(); ++j)
      if (i != j && inside(polys[j], probes[i])) ++heights[i];
  return heights;
}

}  // namespace oracle
