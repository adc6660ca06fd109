#include <doctest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "knotalt/classify.hpp"
#include "knotalt/invariants.hpp"
#include "oracles.hpp"

using namespace knotalt;

namespace {

struct Expected {
  const char* name;
  int crossings;
  int circles;
  bool homogeneous;
  bool alternative;
};

// Frozen from the label-tracing circle oracle, the common-cycle block oracle
// and the face-tracing space oracle.
const Expected kCorpus[] = {
    {"10_138", 10, 5, true, false},  {"10_161_a", 10, 5, true, true},
    {"10_161_b", 10, 3, false, false}, {"3_1", 3, 2, true, true},
    {"4_1", 4, 3, true, true},       {"5_1", 5, 2, true, true},
    {"5_2", 5, 4, true, true},       {"6_1", 6, 5, true, true},
    {"6_2", 6, 3, true, true},       {"6_3", 6, 3, true, true},
    {"8_19", 8, 3, true, true},      {"9_43_1", 9, 4, true, false},
    {"9_43_2", 9, 4, true, true},    {"hopf", 2, 2, true, true},
    {"unknot_0", 0, 1, true, true},  {"unknot_1", 1, 2, true, true},
};

Sign edge_sign(const SignedGraph& g, int id) {
  for (const auto& e : g.edges)
    if (e.id == id) return e.sign;
  FAIL("no edge " << id);
  return Sign::Positive;
}

}  // namespace

TEST_CASE("corpus verdict table") {
  const auto corpus = load_builtin_corpus();
  REQUIRE(corpus.size() == std::size(kCorpus));
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& want = kCorpus[i];
    CAPTURE(want.name);
    CHECK(corpus[i].name == want.name);
    const auto a = analyze(corpus[i].pd);
    CHECK(corpus[i].pd.crossing_count() == want.crossings);
    CHECK(a.seifert.circle_count() == want.circles);
    CHECK(a.verdict.homogeneous == want.homogeneous);
    CHECK(a.verdict.alternative == want.alternative);
  }
}

TEST_CASE("9_43: one homogeneous diagram that is not alternative, one that is") {
  const auto first = classify(fixture::corpus("9_43_1"));
  CHECK(first.homogeneous);
  CHECK_FALSE(first.alternative);
  const auto second = classify(fixture::corpus("9_43_2"));
  CHECK(second.homogeneous);
  CHECK(second.alternative);
}

TEST_CASE("10_161: two diagrams of one knot, only the first homogeneous") {
  CHECK(classify(fixture::corpus("10_161_a")).homogeneous);
  const auto b = classify(fixture::corpus("10_161_b"));
  CHECK_FALSE(b.homogeneous);
  CHECK_FALSE(b.alternative);
}

TEST_CASE("8_19 standard diagram is homogeneous") { CHECK(classify(fixture::corpus("8_19")).homogeneous); }

TEST_CASE("alternating corpus diagrams are alternative and homogeneous") {
  for (const char* name : {"3_1", "4_1", "5_1", "5_2", "6_1", "6_2", "6_3"}) {
    CAPTURE(name);
    const auto v = classify(fixture::corpus(name));
    CHECK(v.alternative);
    CHECK(v.homogeneous);
    CHECK(v.methods == MethodResults{true, true, true});
  }
}

TEST_CASE("10_138 fails alternativity in a single space") {
  const auto a = analyze(fixture::corpus("10_138"));
  REQUIRE(a.verdict.space_witness);
  const auto& w = *a.verdict.space_witness;
  std::set<Sign> signs;
  for (const auto& m : a.seifert.markers)
    if (m.space == w.space) signs.insert(m.sign);
  CHECK(signs.size() == 2);
  REQUIRE(a.verdict.height_witness);
  CHECK(a.verdict.height_witness->height_index >= 0);
  REQUIRE(a.verdict.spatial_witness);
  CHECK(a.verdict.spatial_witness->height_index == -1);
}

TEST_CASE("witnesses name offending objects with opposite signs") {
  std::mt19937_64 rng(59);
  int non_alternative = 0, non_homogeneous = 0;
  for (int i = 0; i < 400; ++i) {
    const auto g = random_diagram(rng);
    const auto a = analyze(g.pd);
    const auto& v = a.verdict;
    const auto& seifert = a.labeled.graph;

    CHECK(v.block_witness.has_value() == !v.homogeneous);
    if (v.block_witness) {
      ++non_homogeneous;
      const auto& w = *v.block_witness;
      const auto& block = a.blocks.at(w.block);
      CHECK(block.edges.front() == w.first);
      CHECK(std::count(block.edges.begin(), block.edges.end(), w.conflicting) == 1);
      CHECK(edge_sign(seifert, w.first) != edge_sign(seifert, w.conflicting));
      for (int b = 0; b < w.block; ++b) CHECK(a.blocks[b].homogeneous);
    }

    CHECK(v.space_witness.has_value() == !v.alternative);
    if (v.space_witness) {
      ++non_alternative;
      const auto& w = *v.space_witness;
      CHECK(a.seifert.markers.at(w.first).space == w.space);
      CHECK(a.seifert.markers.at(w.conflicting).space == w.space);
      CHECK(a.seifert.markers[w.first].sign != a.seifert.markers[w.conflicting].sign);
    }

    CHECK(v.spatial_witness.has_value() == !v.alternative);
    if (v.spatial_witness) {
      const auto comp = components(a.spatial);
      const auto& w = *v.spatial_witness;
      const auto& e1 = a.spatial.edges.at(w.first);
      const auto& e2 = a.spatial.edges.at(w.conflicting);
      CHECK(e1.sign != e2.sign);
      CHECK(comp[e1.from] == comp[e2.from]);
      CHECK(std::count(w.vertices.begin(), w.vertices.end(), e1.from) == 1);
    }

    CHECK(v.height_witness.has_value() == !v.alternative);
    if (v.height_witness) {
      const auto& w = *v.height_witness;
      CHECK(edge_sign(seifert, w.first) != edge_sign(seifert, w.conflicting));
      const auto& sub = a.subgraphs.at(w.height_index);
      CHECK(std::count(sub.edges.begin(), sub.edges.end(), w.first) == 1);
      CHECK(std::count(sub.edges.begin(), sub.edges.end(), w.conflicting) == 1);
    }
  }
  CHECK(non_alternative > 0);
  CHECK(non_homogeneous > 0);
}

TEST_CASE("the three alternativity tests agree and match the face oracle") {
  std::mt19937_64 rng(61);
  int alternative = 0;
  for (int i = 0; i < 600; ++i) {
    const auto g = random_diagram(rng);
    const auto a = build_analysis(g.pd, ClassifyOptions{g.outer_dart});
    const auto& m = a.verdict.methods;
    CHECK(m.spaces == m.spatial);
    CHECK(m.spaces == m.heights);
    CHECK(a.verdict.alternative == oracle::alternative_by_faces(g.pd));
    CHECK(a.verdict.homogeneous == oracle::homogeneous_by_cycles(a.labeled.graph));
    if (a.verdict.alternative) CHECK(a.verdict.homogeneous);
    alternative += a.verdict.alternative;
  }
  CHECK(alternative > 0);
  CHECK(alternative < 600);
}

TEST_CASE("an injected sign fault in one test is caught by the cross-check") {
  const ClassifyOptions faulty{std::nullopt, FaultInjection::SpatialSignByLabels};
  std::mt19937_64 rng(67);
  int caught = 0;
  for (int i = 0; i < 500; ++i) {
    const auto pd = random_diagram(rng).pd;
    try {
      analyze(pd, faulty);
    } catch (const ConsistencyError&) {
      ++caught;
    }
  }
  CHECK(caught > 0);
  // The clean pipeline never trips.
  for (const auto& in : load_builtin_corpus()) CHECK_NOTHROW(analyze(in.pd));
}

TEST_CASE("label-difference signs are wrong only at wrap-around over-strands") {
  std::mt19937_64 rng(71);
  int wrong = 0;
  for (int i = 0; i < 300; ++i) {
    const auto pd = random_diagram(rng).pd;
    const auto signs = label_difference_signs(pd);
    for (int c = 0; c < pd.crossing_count(); ++c) {
      if (signs[c] == crossing_sign(pd, c)) continue;
      ++wrong;
      const auto& t = pd.crossings[c];
      const bool in_at_3 = pd.incoming[c][3];
      // The over-strand steps from a component's last label back to its first.
      CHECK((in_at_3 ? t[1] < t[3] : t[3] < t[1]));
    }
  }
  CHECK(wrong > 0);
}

TEST_CASE("cross-check rejects doctored results") {
  auto a = build_analysis(fixture::corpus("10_138"));
  CHECK_NOTHROW(cross_check(a));
  a.verdict.methods.spatial = true;
  CHECK_THROWS_AS(cross_check(a), ConsistencyError);

  auto b = build_analysis(fixture::corpus("10_161_b"));
  b.verdict.alternative = true;
  b.verdict.methods = {true, true, true};
  CHECK_THROWS_AS(cross_check(b), ConsistencyError);
}
