#include "knotalt/classify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace knotalt {

namespace {

// Given (id, sign) pairs of one object, returns the smallest id and the
// smallest id carrying the other sign, if both signs occur.
std::optional<std::pair<int, int>> mixed_pair(std::vector<std::pair<int, Sign>> items) {
  if (items.empty()) return std::nullopt;
  std::sort(items.begin(), items.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [id, sign] : items)
    if (sign != items.front().second) return std::make_pair(items.front().first, id);
  return std::nullopt;
}

}  // namespace

Judgement<BlockWitness> is_homogeneous(const std::vector<Block>& blocks, const SignedGraph& g) {
  std::map<int, Sign> sign_of;
  for (const auto& e : g.edges) sign_of[e.id] = e.sign;
  for (const auto& b : blocks) {
    std::vector<std::pair<int, Sign>> items;
    for (int id : b.edges) items.emplace_back(id, sign_of.at(id));
    if (auto pair = mixed_pair(std::move(items)))
      return {false, BlockWitness{b.id, pair->first, pair->second}};
  }
  return {};
}

Judgement<SpaceWitness> alternative_by_spaces(const SeifertDiagram& sd) {
  std::vector<std::vector<std::pair<int, Sign>>> per_space(sd.spaces.size());
  for (const auto& m : sd.markers) per_space.at(m.space).emplace_back(m.crossing, m.sign);
  for (std::size_t s = 0; s < per_space.size(); ++s) {
    if (auto pair = mixed_pair(std::move(per_space[s])))
      return {false, SpaceWitness{static_cast<int>(s), pair->first, pair->second}};
  }
  return {};
}

Judgement<ComponentWitness> alternative_by_spatial(const SpatialGraph& g) {
  const auto comp = components(g);
  const int count = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<std::vector<std::pair<int, Sign>>> per_comp(count);
  for (const auto& e : g.edges) per_comp[comp[e.from]].emplace_back(e.id, e.sign);
  for (int c = 0; c < count; ++c) {
    if (auto pair = mixed_pair(std::move(per_comp[c]))) {
      ComponentWitness w{-1, {}, pair->first, pair->second};
      for (std::size_t v = 0; v < comp.size(); ++v)
        if (comp[v] == c) w.vertices.push_back(static_cast<int>(v));
      return {false, std::move(w)};
    }
  }
  return {};
}

Judgement<ComponentWitness> alternative_by_heights(const LabeledSeifertGraph& g,
                                                   const std::vector<HeightSubgraph>& subgraphs) {
  std::map<int, const SignedEdge*> edge_of;
  for (const auto& e : g.graph.edges) edge_of[e.id] = &e;
  for (const auto& sub : subgraphs) {
    const auto comps = subgraph_components(g.graph, sub.vertices, sub.edges);
    std::vector<int> comp_of(g.graph.vertex_count, -1);
    for (std::size_t c = 0; c < comps.size(); ++c)
      for (int v : comps[c]) comp_of[v] = static_cast<int>(c);
    std::vector<std::vector<std::pair<int, Sign>>> per_comp(comps.size());
    for (int id : sub.edges) {
      const auto* e = edge_of.at(id);
      per_comp[comp_of[e->u]].emplace_back(id, e->sign);
    }
    for (std::size_t c = 0; c < comps.size(); ++c) {
      if (auto pair = mixed_pair(std::move(per_comp[c])))
        return {false, ComponentWitness{sub.index, comps[c], pair->first, pair->second}};
    }
  }
  return {};
}

std::vector<Sign> label_difference_signs(const PDCode& pd) {
  std::vector<Sign> out;
  for (const auto& t : pd.crossings) out.push_back(t[1] == t[3] + 1 ? Sign::Positive : Sign::Negative);
  return out;
}

Verdict evaluate(const Analysis& a) {
  Verdict v;
  v.name = a.name;
  const auto homogeneous = is_homogeneous(a.blocks, a.labeled.graph);
  const auto by_spaces = alternative_by_spaces(a.seifert);
  const auto by_spatial = alternative_by_spatial(a.spatial);
  const auto by_heights = alternative_by_heights(a.labeled, a.subgraphs);
  v.homogeneous = homogeneous.holds;
  v.block_witness = homogeneous.witness;
  v.methods = MethodResults{by_spaces.holds, by_spatial.holds, by_heights.holds};
  v.space_witness = by_spaces.witness;
  v.spatial_witness = by_spatial.witness;
  v.height_witness = by_heights.witness;
  v.alternative = by_spaces.holds;
  return v;
}

namespace {

std::string dump(const Analysis& a) {
  std::ostringstream os;
  const auto& v = a.verdict;
  os << "diagram '" << a.name << "' " << to_text(a.diagram.map.pd()) << "\n"
     << "  outer region " << a.diagram.outer_region << "\n"
     << "  alternative by spaces: " << v.methods.spaces << ", by digraph: " << v.methods.spatial
     << ", by height subgraphs: " << v.methods.heights << "\n"
     << "  homogeneous: " << v.homogeneous << "\n";
  for (const auto& m : a.seifert.markers)
    os << "  crossing " << m.crossing << " sign " << to_string(m.sign) << " space " << m.space
       << " arc sign " << to_string(a.spatial.edges[m.crossing].sign) << "\n";
  return os.str();
}

}  // namespace

Analysis build_analysis(const PDCode& pd, const ClassifyOptions& options, std::string name) {
  Analysis a;
  a.name = std::move(name);
  a.diagram = make_diagram(pd, options.outer_dart);
  a.seifert = seifert_diagram(a.diagram);
  if (options.fault == FaultInjection::SpatialSignByLabels) {
    const auto signs = label_difference_signs(pd);
    a.spatial = build_spatial_graph(a.diagram, signs);
  } else {
    a.spatial = build_spatial_graph(a.diagram);
  }
  a.labeled = build_labeled_seifert_graph(a.seifert);
  a.blocks = blocks(a.labeled.graph);
  a.subgraphs = height_subgraphs(a.labeled);
  a.verdict = evaluate(a);
  return a;
}

void cross_check(const Analysis& a) {
  const auto& m = a.verdict.methods;
  if (m.spaces != m.spatial || m.spaces != m.heights)
    throw ConsistencyError("alternativity tests disagree\n" + dump(a));
  if (a.verdict.alternative && !a.verdict.homogeneous)
    throw ConsistencyError("alternative diagram is not homogeneous\n" + dump(a));
}

Analysis analyze(const PDCode& pd, const ClassifyOptions& options, std::string name) {
  Analysis a = build_analysis(pd, options, std::move(name));
  cross_check(a);
  return a;
}

Verdict classify(const PDCode& pd, const ClassifyOptions& options, std::string name) {
  return analyze(pd, options, std::move(name)).verdict;
}

}  // namespace knotalt
