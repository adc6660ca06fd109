#include "knotalt/graphs.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

namespace knotalt {

SpatialGraph build_spatial_graph(const Diagram& dg, std::span<const Sign> signs) {
  SpatialGraph g;
  for (const auto& r : dg.regions.regions) g.vertices.push_back(SpatialVertex{r.id, r.color});
  for (int c = 0; c < dg.crossing_count(); ++c)
    g.edges.push_back(DirectedSignedEdge{c, dg.out_of_region[c], dg.into_region[c], signs[c]});
  return g;
}

std::vector<DegreePair> check_balance(const SpatialGraph& g) {
  std::vector<DegreePair> out(g.vertices.size());
  for (const auto& e : g.edges) {
    ++out[e.from].out;
    ++out[e.to].in;
  }
  return out;
}

std::vector<int> components(const SpatialGraph& g) {
  const int n = static_cast<int>(g.vertices.size());
  std::vector<std::vector<int>> adj(n);
  for (const auto& e : g.edges) {
    adj[e.from].push_back(e.to);
    adj[e.to].push_back(e.from);
  }
  std::vector<int> comp(n, -1);
  int next = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::queue<int> todo;
    comp[s] = next;
    todo.push(s);
    while (!todo.empty()) {
      int v = todo.front();
      todo.pop();
      for (int w : adj[v]) {
        if (comp[w] < 0) {
          comp[w] = next;
          todo.push(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

std::vector<std::vector<int>> cycle_decomposition(const SpatialGraph& g) {
  const int n = static_cast<int>(g.vertices.size());
  std::vector<std::vector<int>> out_edges(n);
  for (const auto& e : g.edges) out_edges[e.from].push_back(e.id);
  std::vector<std::size_t> cursor(n, 0);
  std::vector<bool> used(g.edges.size(), false);
  std::vector<int> position(n, -1);

  auto next_unused = [&](int v) -> int {
    auto& i = cursor[v];
    while (i < out_edges[v].size() && used[out_edges[v][i]]) ++i;
    return i < out_edges[v].size() ? out_edges[v][i] : -1;
  };

  std::vector<std::vector<int>> cycles;
  for (const auto& first : g.edges) {
    if (used[first.id]) continue;
    // Walk unused arcs; whenever the walk revisits a vertex, cut off the
    // simple cycle it just closed.
    std::vector<int> path_vertices{first.from};
    std::vector<int> path_edges;
    position[first.from] = 0;
    int e = first.id;
    while (true) {
      used[e] = true;
      path_edges.push_back(e);
      const int w = g.edges[e].to;
      if (position[w] >= 0) {
        const int at = position[w];
        cycles.emplace_back(path_edges.begin() + at, path_edges.end());
        for (std::size_t k = at + 1; k < path_vertices.size(); ++k) position[path_vertices[k]] = -1;
        path_vertices.resize(at + 1);
        path_edges.resize(at);
        if (path_edges.empty()) break;
      } else {
        position[w] = static_cast<int>(path_vertices.size());
        path_vertices.push_back(w);
      }
      e = next_unused(path_vertices.back());
      if (e < 0)
        throw ConsistencyError("vertex " + std::to_string(path_vertices.back()) +
                               " has more incoming than outgoing arcs");
    }
    position[first.from] = -1;
  }
  return cycles;
}

LabeledSeifertGraph build_labeled_seifert_graph(const SeifertDiagram& sd) {
  LabeledSeifertGraph g;
  g.graph.vertex_count = sd.circle_count();
  for (const auto& c : sd.circles) g.heights.push_back(c.height);
  for (const auto& m : sd.markers)
    g.graph.edges.push_back(SignedEdge{m.crossing, m.circles.first, m.circles.second, m.sign});
  return g;
}

std::vector<Block> blocks(const SignedGraph& g) {
  const int n = g.vertex_count;
  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (edge index, neighbour)
  std::vector<std::vector<int>> found;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const auto& e = g.edges[i];
    if (e.u == e.v) {
      found.push_back({static_cast<int>(i)});
      continue;
    }
    adj[e.u].emplace_back(static_cast<int>(i), e.v);
    adj[e.v].emplace_back(static_cast<int>(i), e.u);
  }

  std::vector<int> disc(n, -1), low(n, 0);
  int timer = 0;
  struct Frame {
    int vertex;
    int parent_edge;
    std::size_t next = 0;
  };
  std::vector<int> edge_stack;
  for (int root = 0; root < n; ++root) {
    if (disc[root] >= 0 || adj[root].empty()) continue;
    std::vector<Frame> frames{{root, -1}};
    disc[root] = low[root] = timer++;
    while (!frames.empty()) {
      Frame& f = frames.back();
      const int v = f.vertex;
      if (f.next < adj[v].size()) {
        const auto [edge, w] = adj[v][f.next++];
        // Skip only the tree edge itself, so a parallel edge back to the
        // parent counts as a back edge.
        if (edge == f.parent_edge) continue;
        if (disc[w] < 0) {
          edge_stack.push_back(edge);
          disc[w] = low[w] = timer++;
          frames.push_back(Frame{w, edge});
        } else if (disc[w] < disc[v]) {
          edge_stack.push_back(edge);
          low[v] = std::min(low[v], disc[w]);
        }
        continue;
      }
      const Frame done = f;
      frames.pop_back();
      if (frames.empty()) break;
      const int p = frames.back().vertex;
      low[p] = std::min(low[p], low[done.vertex]);
      if (low[done.vertex] >= disc[p]) {
        std::vector<int> block;
        while (true) {
          const int e = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(e);
          if (e == done.parent_edge) break;
        }
        found.push_back(std::move(block));
      }
    }
  }

  std::vector<Block> out;
  for (auto& indices : found) {
    Block b;
    for (int i : indices) {
      const auto& e = g.edges[i];
      b.edges.push_back(e.id);
      b.vertices.push_back(e.u);
      b.vertices.push_back(e.v);
      if (e.sign != g.edges[indices.front()].sign) b.homogeneous = false;
    }
    std::sort(b.edges.begin(), b.edges.end());
    std::sort(b.vertices.begin(), b.vertices.end());
    b.vertices.erase(std::unique(b.vertices.begin(), b.vertices.end()), b.vertices.end());
    out.push_back(std::move(b));
  }
  std::sort(out.begin(), out.end(),
            [](const Block& a, const Block& b) { return a.edges.front() < b.edges.front(); });
  for (std::size_t i = 0; i < out.size(); ++i) out[i].id = static_cast<int>(i);
  return out;
}

std::vector<HeightSubgraph> height_subgraphs(const LabeledSeifertGraph& g) {
  const int top = g.heights.empty() ? 0 : *std::max_element(g.heights.begin(), g.heights.end());
  std::vector<HeightSubgraph> out;
  for (int i = 0; i <= top; ++i) {
    HeightSubgraph sub;
    sub.index = i;
    for (int v = 0; v < g.graph.vertex_count; ++v)
      if (g.heights[v] == i || g.heights[v] == i - 1) sub.vertices.push_back(v);
    for (const auto& e : g.graph.edges) {
      const int hu = g.heights[e.u], hv = g.heights[e.v];
      const bool kept = (hu == i || hu == i - 1) && (hv == i || hv == i - 1);
      if (kept && !(hu == i - 1 && hv == i - 1)) sub.edges.push_back(e.id);
    }
    std::sort(sub.edges.begin(), sub.edges.end());
    out.push_back(std::move(sub));
  }
  return out;
}

std::vector<std::vector<int>> subgraph_components(const SignedGraph& g,
                                                  std::span<const int> vertices,
                                                  std::span<const int> edges) {
  std::vector<int> parent(g.vertex_count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<int> by_id(g.edges.size(), -1);
  for (std::size_t i = 0; i < g.edges.size(); ++i) by_id[g.edges[i].id] = static_cast<int>(i);
  for (int id : edges) {
    const auto& e = g.edges[by_id[id]];
    int a = find(e.u), b = find(e.v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::vector<int>> out;
  std::vector<int> slot(g.vertex_count, -1);
  for (int v : sorted) {
    const int root = find(v);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[root]].push_back(v);
  }
  return out;
}

namespace {

const char* edge_style(Sign s) { return s == Sign::Positive ? "solid" : "dashed"; }

void write_signed_edge(std::ostringstream& os, const SignedEdge& e) {
  os << "  c" << e.u << " -- c" << e.v << " [label=\"" << to_string(e.sign) << "\", style="
     << edge_style(e.sign) << "];\n";
}

}  // namespace

std::string export_dot(const SpatialGraph& g) {
  std::ostringstream os;
  os << "digraph spatial {\n";
  for (const auto& v : g.vertices) {
    os << "  r" << v.region << " [label=\"r" << v.region << "\", style=filled, fillcolor="
       << (v.color == Color::White ? "white" : "gray40") << "];\n";
  }
  for (const auto& e : g.edges) {
    os << "  r" << e.from << " -> r" << e.to << " [label=\"" << to_string(e.sign)
       << "\", style=" << edge_style(e.sign) << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string export_dot(const LabeledSeifertGraph& g, bool labeled) {
  std::ostringstream os;
  os << "graph " << (labeled ? "labeled_seifert" : "seifert") << " {\n";
  for (int v = 0; v < g.graph.vertex_count; ++v) {
    os << "  c" << v << " [label=\"" << (labeled ? g.heights[v] : v) << "\"];\n";
  }
  for (const auto& e : g.graph.edges) write_signed_edge(os, e);
  os << "}\n";
  return os.str();
}

std::string export_dot(const LabeledSeifertGraph& g, const HeightSubgraph& sub) {
  std::ostringstream os;
  os << "graph g" << sub.index << " {\n";
  for (int v : sub.vertices) os << "  c" << v << " [label=\"" << g.heights[v] << "\"];\n";
  std::vector<bool> kept(g.graph.edges.size(), false);
  for (int id : sub.edges) kept[id] = true;
  for (const auto& e : g.graph.edges)
    if (e.id < static_cast<int>(kept.size()) && kept[e.id]) write_signed_edge(os, e);
  os << "}\n";
  return os.str();
}

}  // namespace knotalt
