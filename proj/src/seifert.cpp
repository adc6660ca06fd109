#include "knotalt/seifert.hpp"

#include <numeric>
#include <queue>
#include <string>

namespace knotalt {

namespace {

// Leaving slot after entering through `in_slot` with the crossing smoothed:
// under-strand in, over-strand out, and vice versa.
int smoothed_exit(const CombinatorialMap& map, int in_dart) {
  const int base = 4 * (in_dart / 4);
  if (in_dart % 4 == 0) return map.dart(base + 1).incoming ? base + 3 : base + 1;
  return base + 2;
}

int over_in_dart(const CombinatorialMap& map, int crossing) {
  return map.dart(4 * crossing + 1).incoming ? 4 * crossing + 1 : 4 * crossing + 3;
}

std::vector<int> region_space_map(const std::vector<Space>& spaces, int region_count) {
  std::vector<int> out(region_count, -1);
  for (const auto& s : spaces)
    for (int r : s.regions) out[r] = s.id;
  return out;
}

}  // namespace

SeifertDiagram smooth(const Diagram& dg) {
  const auto& map = dg.map;
  SeifertDiagram sd;
  if (map.dart_count() == 0) {
    sd.circles.push_back(SeifertCircle{0, {}, 0});
    return sd;
  }
  sd.dart_circle.assign(map.dart_count(), -1);
  for (const auto& start : map.darts()) {
    if (start.incoming || sd.dart_circle[start.id] >= 0) continue;
    SeifertCircle circle;
    circle.id = sd.circle_count();
    int out = start.id;
    do {
      const int in = map.twin(out);
      circle.darts.push_back(out);
      circle.darts.push_back(in);
      sd.dart_circle[out] = sd.dart_circle[in] = circle.id;
      out = smoothed_exit(map, in);
    } while (out != start.id);
    sd.circles.push_back(std::move(circle));
  }
  for (int c = 0; c < map.crossing_count(); ++c) {
    SiteMarker m;
    m.crossing = c;
    m.sign = dg.signs[c];
    m.circles = {sd.dart_circle[4 * c], sd.dart_circle[over_in_dart(map, c)]};
    if (m.circles.first == m.circles.second)
      throw ConsistencyError("crossing " + std::to_string(c) + " joins circle " +
                             std::to_string(m.circles.first) + " to itself");
    sd.markers.push_back(m);
  }
  return sd;
}

std::vector<Space> compute_spaces(const Diagram& dg) {
  const int count = dg.regions.size();
  std::vector<int> parent(count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int c = 0; c < dg.crossing_count(); ++c) {
    int a = find(dg.into_region[c]), b = find(dg.out_of_region[c]);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<Space> spaces;
  std::vector<int> id_of_root(count, -1);
  for (int r = 0; r < count; ++r) {
    int root = find(r);
    if (id_of_root[root] < 0) {
      id_of_root[root] = static_cast<int>(spaces.size());
      spaces.push_back(Space{id_of_root[root], {}, -1, std::nullopt, {}});
    }
    spaces[id_of_root[root]].regions.push_back(r);
  }
  return spaces;
}

std::pair<int, int> circle_sides(const Diagram& dg, const SeifertDiagram& sd,
                                 const std::vector<Space>& spaces, int circle) {
  const auto space_of = region_space_map(spaces, dg.regions.size());
  const auto& darts = sd.circles.at(circle).darts;
  if (darts.empty()) return {space_of[0], space_of[1]};
  int left = -1, right = -1;
  for (std::size_t i = 0; i < darts.size(); i += 2) {
    const int l = space_of[left_region(dg.map, dg.regions, darts[i])];
    const int r = space_of[right_region(dg.map, dg.regions, darts[i])];
    if (i == 0) {
      left = l;
      right = r;
    } else if (l != left || r != right) {
      throw ConsistencyError("circle " + std::to_string(circle) +
                             " borders different spaces along one side");
    }
  }
  if (left == right)
    throw ConsistencyError("circle " + std::to_string(circle) + " has one space on both sides");
  return {left, right};
}

void build_nesting(const Diagram& dg, SeifertDiagram& sd, std::vector<Space> spaces) {
  const int circles = sd.circle_count();
  const int count = static_cast<int>(spaces.size());
  if (count != circles + 1)
    throw ConsistencyError(std::to_string(count) + " spaces for " + std::to_string(circles) +
                           " circles");
  std::vector<std::pair<int, int>> sides(circles);
  std::vector<std::vector<int>> touching(count);
  for (int c = 0; c < circles; ++c) {
    sides[c] = circle_sides(dg, sd, spaces, c);
    touching[sides[c].first].push_back(c);
    touching[sides[c].second].push_back(c);
  }

  NestingTree tree;
  const auto space_of = region_space_map(spaces, dg.regions.size());
  tree.root_space = space_of[dg.outer_region];
  tree.circle_parent.assign(circles, -1);
  tree.circle_child.assign(circles, -1);
  tree.space_parent.assign(count, -1);
  tree.space_children.assign(count, {});

  std::vector<bool> reached(count, false);
  std::queue<int> todo;
  reached[tree.root_space] = true;
  spaces[tree.root_space].height = -1;
  todo.push(tree.root_space);
  while (!todo.empty()) {
    const int s = todo.front();
    todo.pop();
    for (int c : touching[s]) {
      if (tree.circle_parent[c] >= 0) continue;
      const int inside = sides[c].first == s ? sides[c].second : sides[c].first;
      if (reached[inside])
        throw ConsistencyError("circle/space incidence contains a cycle at circle " +
                               std::to_string(c));
      tree.circle_parent[c] = s;
      tree.circle_child[c] = inside;
      tree.space_parent[inside] = c;
      tree.space_children[s].push_back(c);
      sd.circles[c].height = spaces[s].height + 1;
      spaces[inside].height = sd.circles[c].height;
      spaces[inside].outer_circle = c;
      spaces[s].inner_circles.push_back(c);
      reached[inside] = true;
      todo.push(inside);
    }
  }
  for (int s = 0; s < count; ++s)
    if (!reached[s]) throw ConsistencyError("space " + std::to_string(s) + " is not in the tree");
  sd.spaces = std::move(spaces);
  sd.tree = std::move(tree);
}

void marker_spaces(const Diagram& dg, SeifertDiagram& sd) {
  const auto space_of = region_space_map(sd.spaces, dg.regions.size());
  for (auto& m : sd.markers) {
    m.space = space_of[dg.into_region[m.crossing]];
    if (m.space != space_of[dg.out_of_region[m.crossing]])
      throw ConsistencyError("crossing " + std::to_string(m.crossing) +
                             " merges regions of different spaces");
  }
}

SeifertDiagram seifert_diagram(const Diagram& dg) {
  SeifertDiagram sd = smooth(dg);
  build_nesting(dg, sd, compute_spaces(dg));
  marker_spaces(dg, sd);
  return sd;
}

}  // namespace knotalt
