#include "knotalt/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

namespace knotalt {

std::string_view to_string(Color c) noexcept { return c == Color::White ? "white" : "black"; }

std::string_view to_string(IncidenceKind k) noexcept {
  switch (k) {
    case IncidenceKind::Into: return "into";
    case IncidenceKind::OutOf: return "out-of";
    case IncidenceKind::Sideswipe: return "sideswipe";
  }
  return "?";
}

CombinatorialMap::CombinatorialMap(PDCode pd) : pd_(std::move(pd)) {
  const int n = pd_.crossing_count();
  darts_.reserve(4 * n);
  twin_.assign(4 * n, -1);
  std::vector<std::pair<Label, int>> by_label;
  for (int c = 0; c < n; ++c) {
    for (int s = 0; s < 4; ++s) {
      const int id = 4 * c + s;
      darts_.push_back(Dart{id, c, s, pd_.crossings[c][s], pd_.incoming[c][s]});
      by_label.emplace_back(pd_.crossings[c][s], id);
    }
  }
  std::sort(by_label.begin(), by_label.end());
  for (std::size_t i = 0; i + 1 < by_label.size(); i += 2) {
    if (by_label[i].first != by_label[i + 1].first)
      throw InputError("edge label " + std::to_string(by_label[i].first) +
                       " does not appear exactly twice");
    twin_[by_label[i].second] = by_label[i + 1].second;
    twin_[by_label[i + 1].second] = by_label[i].second;
  }
}

CombinatorialMap build_map(const PDCode& pd) {
  CombinatorialMap map(pd);
  const int n = map.crossing_count();
  if (n == 0) return map;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& d : map.darts()) parent[find(d.crossing)] = find(map.twin(d.id) / 4);
  for (int c = 1; c < n; ++c) {
    if (find(c) != find(0))
      throw SplitDiagramError("split diagram: crossings 0 and " +
                              std::to_string(c) + " lie in different pieces");
  }
  return map;
}

RegionSet trace_regions(const CombinatorialMap& map) {
  RegionSet out;
  const int darts = map.dart_count();
  if (darts == 0) {
    out.regions = {Region{0, {}, Color::White, false}, Region{1, {}, Color::White, false}};
    return out;
  }
  out.corner_region.assign(darts, -1);
  for (int start = 0; start < darts; ++start) {
    if (out.corner_region[start] >= 0) continue;
    Region r;
    r.id = out.size();
    int corner = start;
    int steps = 0;
    do {
      if (++steps > darts) throw ConsistencyError("face walk does not close");
      out.corner_region[corner] = r.id;
      const int along = CombinatorialMap::rotate_ccw(corner);
      r.boundary.push_back(along);
      corner = map.twin(along);
    } while (corner != start);
    out.regions.push_back(std::move(r));
  }
  const int expected = map.crossing_count() + 2;
  if (out.size() != expected)
    throw InputError("not a planar diagram: " + std::to_string(out.size()) + " faces, expected " +
                     std::to_string(expected));
  return out;
}

int left_region(const CombinatorialMap& map, const RegionSet& regions, int d) {
  return map.dart(d).incoming ? regions.corner_region[CombinatorialMap::rotate_cw(d)]
                              : regions.corner_region[d];
}

int right_region(const CombinatorialMap& map, const RegionSet& regions, int d) {
  return map.dart(d).incoming ? regions.corner_region[d]
                              : regions.corner_region[CombinatorialMap::rotate_cw(d)];
}

void checkerboard(const CombinatorialMap& map, RegionSet& regions, int outer_region) {
  const int count = regions.size();
  for (auto& r : regions.regions) r.is_outer = r.id == outer_region;
  if (map.dart_count() == 0) {
    for (auto& r : regions.regions) r.color = r.is_outer ? Color::White : Color::Black;
    return;
  }
  std::vector<std::vector<int>> adjacent(count);
  for (const auto& d : map.darts()) {
    int l = left_region(map, regions, d.id), r = right_region(map, regions, d.id);
    adjacent[l].push_back(r);
    adjacent[r].push_back(l);
  }
  std::vector<int> color(count, -1);
  std::queue<int> todo;
  color[outer_region] = 0;
  todo.push(outer_region);
  while (!todo.empty()) {
    int r = todo.front();
    todo.pop();
    for (int s : adjacent[r]) {
      if (color[s] < 0) {
        color[s] = 1 - color[r];
        todo.push(s);
      } else if (color[s] == color[r]) {
        throw ConsistencyError("regions " + std::to_string(r) + " and " + std::to_string(s) +
                               " share an edge and a color");
      }
    }
  }
  for (auto& r : regions.regions) {
    if (color[r.id] < 0) throw ConsistencyError("region " + std::to_string(r.id) + " unreachable");
    r.color = color[r.id] == 0 ? Color::White : Color::Black;
  }
}

std::vector<CrossingIncidence> classify_incidences(const CombinatorialMap& map,
                                                   const RegionSet& regions) {
  std::vector<CrossingIncidence> out;
  out.reserve(map.dart_count());
  for (const auto& d : map.darts()) {
    // The corner is bounded by this dart and the next one counterclockwise.
    const int other = CombinatorialMap::rotate_ccw(d.id);
    const int leaving = int(!d.incoming) + int(!map.dart(other).incoming);
    const IncidenceKind kind = leaving == 2   ? IncidenceKind::Into
                               : leaving == 0 ? IncidenceKind::OutOf
                                              : IncidenceKind::Sideswipe;
    out.push_back(CrossingIncidence{d.crossing, d.id, regions.corner_region[d.id], kind});
  }
  return out;
}

ArcBalance arc_balance(int region, std::span<const CrossingIncidence> incidences) {
  ArcBalance b;
  for (const auto& inc : incidences) {
    if (inc.region != region) continue;
    switch (inc.kind) {
      case IncidenceKind::Into: b.arcs_in += 2; break;
      case IncidenceKind::OutOf: b.arcs_out += 2; break;
      case IncidenceKind::Sideswipe:
        ++b.arcs_in;
        ++b.arcs_out;
        break;
    }
  }
  return b;
}

std::optional<int> default_outer_dart(const CombinatorialMap& map) {
  std::optional<int> best;
  for (const auto& d : map.darts()) {
    if (d.incoming) continue;
    if (!best || d.label < map.dart(*best).label) best = d.id;
  }
  return best;
}

Diagram make_diagram(const PDCode& pd, std::optional<int> outer_dart) {
  Diagram dg;
  dg.map = build_map(pd);
  dg.regions = trace_regions(dg.map);
  const int n = dg.map.crossing_count();
  if (n == 0) {
    if (outer_dart) throw InputError("the crossingless unknot has no darts");
    dg.outer_region = 0;
  } else {
    if (!outer_dart) outer_dart = default_outer_dart(dg.map);
    if (*outer_dart < 0 || *outer_dart >= dg.map.dart_count())
      throw InputError("outer dart " + std::to_string(*outer_dart) + " out of range [0, " +
                       std::to_string(dg.map.dart_count()) + ")");
    dg.outer_dart = outer_dart;
    dg.outer_region = dg.regions.corner_region[*outer_dart];
  }
  checkerboard(dg.map, dg.regions, dg.outer_region);
  dg.incidences = classify_incidences(dg.map, dg.regions);
  dg.into_region.assign(n, -1);
  dg.out_of_region.assign(n, -1);
  for (const auto& inc : dg.incidences) {
    if (inc.kind == IncidenceKind::Into) dg.into_region[inc.crossing] = inc.region;
    if (inc.kind == IncidenceKind::OutOf) dg.out_of_region[inc.crossing] = inc.region;
  }
  dg.signs.reserve(n);
  for (int c = 0; c < n; ++c) dg.signs.push_back(crossing_sign(pd, c));
  return dg;
}

}  // namespace knotalt
