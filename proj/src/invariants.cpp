#include "knotalt/invariants.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace knotalt {

namespace {

class Recorder {
 public:
  // Registers `name` so it is reported even if never violated.
  void check(const std::string& name) { index(name); }

  void fail(const std::string& name, const std::string& detail) {
    auto& c = checks_[index(name)];
    if (c.ok) {
      c.ok = false;
      c.detail = detail;
    }
  }

  std::vector<InvariantCheck> take() { return std::move(checks_); }

 private:
  std::size_t index(const std::string& name) {
    for (std::size_t i = 0; i < checks_.size(); ++i)
      if (checks_[i].name == name) return i;
    checks_.push_back(InvariantCheck{name, true, {}});
    return checks_.size() - 1;
  }

  std::vector<InvariantCheck> checks_;
};

template <typename... Args>
std::string str(const Args&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}

}  // namespace

bool same_partition(std::vector<std::vector<int>> a, std::vector<std::vector<int>> b) {
  for (auto* p : {&a, &b}) {
    for (auto& cls : *p) std::sort(cls.begin(), cls.end());
    std::sort(p->begin(), p->end());
  }
  return a == b;
}

std::vector<int> outer_dart_choices(const Diagram& dg) {
  std::vector<int> out;
  for (const auto& r : dg.regions.regions)
    if (!r.boundary.empty()) out.push_back(CombinatorialMap::rotate_cw(r.boundary.front()));
  return out;
}

std::vector<InvariantCheck> structural_checks(const Analysis& a) {
  Recorder rec;
  const auto& dg = a.diagram;
  const auto& sd = a.seifert;
  const int n = dg.crossing_count();

  const std::string regions = "region count is crossings + 2";
  rec.check(regions);
  if (dg.regions.size() != n + 2) rec.fail(regions, str(dg.regions.size(), " regions"));

  const std::string coloring = "checkerboard coloring is proper";
  rec.check(coloring);
  for (const auto& d : dg.map.darts()) {
    const int l = left_region(dg.map, dg.regions, d.id), r = right_region(dg.map, dg.regions, d.id);
    if (dg.regions.regions[l].color == dg.regions.regions[r].color)
      rec.fail(coloring, str("edge ", d.label, " has one color on both sides"));
  }

  const std::string corners = "each crossing has one into and one out-of corner";
  const std::string same_color = "into and out-of regions share a color";
  rec.check(corners);
  rec.check(same_color);
  {
    std::vector<int> into(n, 0), out_of(n, 0);
    for (const auto& inc : dg.incidences) {
      if (inc.kind == IncidenceKind::Into) ++into[inc.crossing];
      if (inc.kind == IncidenceKind::OutOf) ++out_of[inc.crossing];
    }
    for (int c = 0; c < n; ++c) {
      if (into[c] != 1 || out_of[c] != 1) rec.fail(corners, str("crossing ", c));
      if (dg.regions.regions[dg.into_region[c]].color !=
          dg.regions.regions[dg.out_of_region[c]].color)
        rec.fail(same_color, str("crossing ", c));
    }
  }

  const std::string arcs = "arcs into each region equal arcs out";
  rec.check(arcs);
  for (const auto& r : dg.regions.regions) {
    const auto b = arc_balance(r.id, dg.incidences);
    if (b.arcs_in != b.arcs_out) rec.fail(arcs, str("region ", r.id, ": ", b.arcs_in, " in, ", b.arcs_out, " out"));
  }

  const std::string space_count = "spaces number circles + 1";
  rec.check(space_count);
  if (sd.space_count() != sd.circle_count() + 1)
    rec.fail(space_count, str(sd.space_count(), " spaces, ", sd.circle_count(), " circles"));

  const std::string space_heights = "space heights match their bounding circles";
  rec.check(space_heights);
  int roots = 0;
  for (const auto& s : sd.spaces) {
    if (s.height == -1) ++roots;
    if (s.outer_circle && sd.circles[*s.outer_circle].height != s.height)
      rec.fail(space_heights, str("space ", s.id));
    if (!s.outer_circle && s.height != -1) rec.fail(space_heights, str("space ", s.id));
    for (int c : s.inner_circles)
      if (sd.circles[c].height != s.height + 1) rec.fail(space_heights, str("space ", s.id, " circle ", c));
    for (int r : s.regions)
      if (dg.regions.regions[r].color != dg.regions.regions[s.regions.front()].color)
        rec.fail(space_heights, str("space ", s.id, " mixes colors"));
  }
  if (roots != 1) rec.fail(space_heights, str(roots, " unbounded spaces"));
  if (sd.spaces[sd.tree.root_space].height != -1 ||
      std::find(sd.spaces[sd.tree.root_space].regions.begin(),
                sd.spaces[sd.tree.root_space].regions.end(),
                dg.outer_region) == sd.spaces[sd.tree.root_space].regions.end())
    rec.fail(space_heights, "unbounded space does not hold the outer region");

  const std::string balance = "digraph in-degree equals out-degree";
  rec.check(balance);
  const auto degrees = check_balance(a.spatial);
  for (std::size_t v = 0; v < degrees.size(); ++v)
    if (degrees[v].in != degrees[v].out)
      rec.fail(balance, str("vertex r", v, ": out ", degrees[v].out, ", in ", degrees[v].in));

  const std::string comps = "digraph components match spaces";
  rec.check(comps);
  {
    const auto comp = components(a.spatial);
    std::map<int, std::vector<int>> by_comp;
    for (std::size_t v = 0; v < comp.size(); ++v)
      by_comp[comp[v]].push_back(a.spatial.vertices[v].region);
    std::vector<std::vector<int>> from_graph, from_spaces;
    for (auto& [k, v] : by_comp) from_graph.push_back(v);
    for (const auto& s : sd.spaces) from_spaces.push_back(s.regions);
    if (!same_partition(from_graph, from_spaces))
      rec.fail(comps, str(from_graph.size(), " components, ", from_spaces.size(), " spaces"));
  }

  const std::string cycles = "directed cycles cover every arc once";
  rec.check(cycles);
  try {
    const auto found = cycle_decomposition(a.spatial);
    std::vector<int> hits(a.spatial.edges.size(), 0);
    for (const auto& cyc : found) {
      std::set<int> seen;
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        ++hits[cyc[i]];
        const auto& e = a.spatial.edges[cyc[i]];
        const auto& next = a.spatial.edges[cyc[(i + 1) % cyc.size()]];
        if (e.to != next.from) rec.fail(cycles, str("cycle breaks after arc ", e.id));
        if (!seen.insert(e.from).second) rec.fail(cycles, str("cycle repeats vertex r", e.from));
      }
    }
    for (std::size_t e = 0; e < hits.size(); ++e)
      if (hits[e] != 1) rec.fail(cycles, str("arc ", e, " covered ", hits[e], " times"));
  } catch (const ConsistencyError& e) {
    rec.fail(cycles, e.what());
  }

  const auto& lg = a.labeled;
  const std::string partition = "height subgraphs partition the edges";
  rec.check(partition);
  std::vector<int> edge_subgraph(lg.graph.edges.size(), -1);
  {
    std::vector<int> hits(lg.graph.edges.size(), 0);
    for (const auto& sub : a.subgraphs)
      for (int e : sub.edges) {
        ++hits[e];
        edge_subgraph[e] = sub.index;
      }
    for (std::size_t e = 0; e < hits.size(); ++e)
      if (hits[e] != 1) rec.fail(partition, str("edge ", e, " in ", hits[e], " subgraphs"));
  }

  const std::string block_heights = "block vertices share a height except one a level up";
  const std::string block_sub = "each block lies in one height subgraph";
  rec.check(block_heights);
  rec.check(block_sub);
  for (const auto& b : a.blocks) {
    int top = -1;
    for (int v : b.vertices) top = std::max(top, lg.heights[v]);
    int lower = 0;
    for (int v : b.vertices) {
      if (lg.heights[v] == top - 1) ++lower;
      else if (lg.heights[v] != top) rec.fail(block_heights, str("block ", b.id, " vertex ", v));
    }
    if (lower > 1) rec.fail(block_heights, str("block ", b.id, " has ", lower, " outer vertices"));
    for (int e : b.edges)
      if (edge_subgraph[e] != edge_subgraph[b.edges.front()])
        rec.fail(block_sub, str("block ", b.id, " edges ", b.edges.front(), " and ", e));
  }

  const std::string bipartite = "seifert graph is bipartite";
  rec.check(bipartite);
  {
    std::vector<std::vector<int>> adj(lg.graph.vertex_count);
    for (const auto& e : lg.graph.edges) {
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
    std::vector<int> side(lg.graph.vertex_count, -1);
    for (int s = 0; s < lg.graph.vertex_count; ++s) {
      if (side[s] >= 0) continue;
      side[s] = 0;
      std::queue<int> todo;
      todo.push(s);
      while (!todo.empty()) {
        int v = todo.front();
        todo.pop();
        for (int w : adj[v]) {
          if (side[w] < 0) {
            side[w] = 1 - side[v];
            todo.push(w);
          } else if (side[w] == side[v]) {
            rec.fail(bipartite, str("odd cycle through circle ", v));
          }
        }
      }
    }
  }

  const std::string agree = "alternativity tests agree";
  rec.check(agree);
  const auto& m = a.verdict.methods;
  if (m.spaces != m.spatial || m.spaces != m.heights)
    rec.fail(agree, str("spaces ", m.spaces, ", digraph ", m.spatial, ", height subgraphs ", m.heights));

  const std::string implies = "alternative implies homogeneous";
  rec.check(implies);
  if (a.verdict.alternative && !a.verdict.homogeneous) rec.fail(implies, "alternative, not homogeneous");

  return rec.take();
}

std::vector<InvariantCheck> metamorphic_checks(const PDCode& pd, const ClassifyOptions& options) {
  Recorder rec;
  const std::string mirror_name = "verdicts survive switching every crossing";
  const std::string outer_name = "verdicts survive every choice of outer region";
  rec.check(mirror_name);
  rec.check(outer_name);

  auto key = [](const Verdict& v) {
    return std::tuple(v.homogeneous, v.alternative, v.methods.spaces, v.methods.spatial,
                      v.methods.heights);
  };
  const Analysis base = build_analysis(pd, options);
  const auto expected = key(base.verdict);

  ClassifyOptions plain = options;
  plain.outer_dart.reset();
  const auto mirrored = build_analysis(mirror(pd), plain);
  const auto base_default = key(build_analysis(pd, plain).verdict);
  auto describe = [](const auto& k) {
    return str(std::get<0>(k), std::get<2>(k), std::get<3>(k), std::get<4>(k));
  };
  if (key(mirrored.verdict) != base_default)
    rec.fail(mirror_name, str("verdicts (homogeneous, spaces, digraph, height subgraphs) ",
                              describe(base_default), " before switching, ", describe(key(mirrored.verdict)),
                              " after"));

  for (int dart : outer_dart_choices(base.diagram)) {
    ClassifyOptions o = options;
    o.outer_dart = dart;
    const auto other = build_analysis(pd, o);
    if (key(other.verdict) != expected) {
      rec.fail(outer_name, str("outer dart ", dart));
      break;
    }
  }
  return rec.take();
}

}  // namespace knotalt
