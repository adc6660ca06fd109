#include "knotalt/random_diagram.hpp"

#include <algorithm>
#include <cmath>

namespace knotalt {

namespace {

double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
Point sub(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }

struct Pass {
  int component;
  int segment;
  double t;
  int crossing;
};

struct Hit {
  Point at;
  Pass first;
  Pass second;
};

bool proper_intersection(Point p, Point p2, Point q, Point q2, double& t, double& u) {
  const Point r = sub(p2, p), s = sub(q2, q);
  const double denom = cross(r, s);
  if (std::abs(denom) < 1e-12) return false;
  const Point qp = sub(q, p);
  t = cross(qp, s) / denom;
  u = cross(qp, r) / denom;
  constexpr double eps = 1e-9;
  return t > eps && t < 1 - eps && u > eps && u < 1 - eps;
}

struct Attempt {
  std::vector<std::vector<Point>> polygons;
  std::vector<Hit> hits;
};

Attempt sample(std::mt19937_64& rng, const RandomDiagramOptions& opt) {
  std::uniform_real_distribution<double> coord(0.0, 1.0);
  std::uniform_int_distribution<int> vertices(opt.min_vertices, opt.max_vertices);
  std::bernoulli_distribution two(0.25);
  Attempt a;
  const int comps = opt.max_components >= 2 && two(rng) ? 2 : 1;
  for (int c = 0; c < comps; ++c) {
    std::vector<Point> poly(vertices(rng));
    for (auto& p : poly) p = {coord(rng), coord(rng)};
    a.polygons.push_back(std::move(poly));
  }
  for (int c1 = 0; c1 < comps; ++c1) {
    const auto& P = a.polygons[c1];
    const int k1 = static_cast<int>(P.size());
    for (int i = 0; i < k1; ++i) {
      for (int c2 = c1; c2 < comps; ++c2) {
        const auto& Q = a.polygons[c2];
        const int k2 = static_cast<int>(Q.size());
        for (int j = c1 == c2 ? i + 1 : 0; j < k2; ++j) {
          if (c1 == c2 && (j == i + 1 || (i == 0 && j == k1 - 1))) continue;
          double t, u;
          if (!proper_intersection(P[i], P[(i + 1) % k1], Q[j], Q[(j + 1) % k2], t, u)) continue;
          const int id = static_cast<int>(a.hits.size());
          Point at{P[i].x + t * (P[(i + 1) % k1].x - P[i].x),
                   P[i].y + t * (P[(i + 1) % k1].y - P[i].y)};
          a.hits.push_back(Hit{at, Pass{c1, i, t, id}, Pass{c2, j, u, id}});
        }
      }
    }
  }
  return a;
}

bool acceptable(const Attempt& a, const RandomDiagramOptions& opt) {
  const int n = static_cast<int>(a.hits.size());
  if (n < std::max(1, opt.min_crossings) || n > opt.max_crossings) return false;
  if (a.polygons.size() > 1) {
    // Each closed curve is connected along itself, so two curves form a
    // connected diagram exactly when they cross each other.
    return std::any_of(a.hits.begin(), a.hits.end(),
                       [](const Hit& h) { return h.first.component != h.second.component; });
  }
  return true;
}

Point direction(const std::vector<Point>& poly, int segment) {
  return sub(poly[(segment + 1) % poly.size()], poly[segment]);
}

}  // namespace

GeometricDiagram random_diagram(std::mt19937_64& rng, const RandomDiagramOptions& opt) {
  Attempt a;
  do {
    a = sample(rng, opt);
  } while (!acceptable(a, opt));

  const int n = static_cast<int>(a.hits.size());
  GeometricDiagram g;
  for (const auto& h : a.hits) g.crossing_points.push_back(h.at);

  // Passes along each component in travel order; edges run between
  // consecutive passes and are labelled consecutively.
  struct Slot {
    Label in;
    Label out;
  };
  std::vector<Slot> first_pass(n), second_pass(n);
  std::vector<std::vector<Pass>> events(a.polygons.size());
  for (const auto& h : a.hits) {
    events[h.first.component].push_back(h.first);
    events[h.second.component].push_back(h.second);
  }
  // A pass is "first" if it is the hit's first record.
  auto is_first = [&](const Pass& p) {
    const auto& f = a.hits[p.crossing].first;
    return f.component == p.component && f.segment == p.segment && f.t == p.t;
  };
  Label base = 0;
  g.edge_paths.resize(2 * n);
  for (std::size_t c = 0; c < events.size(); ++c) {
    auto& ev = events[c];
    std::sort(ev.begin(), ev.end(), [](const Pass& x, const Pass& y) {
      return x.segment != y.segment ? x.segment < y.segment : x.t < y.t;
    });
    const int m = static_cast<int>(ev.size());
    const auto& poly = a.polygons[c];
    const int k = static_cast<int>(poly.size());
    for (int j = 0; j < m; ++j) {
      const Label out = base + j + 1;
      const Label in = base + (j - 1 + m) % m + 1;
      (is_first(ev[j]) ? first_pass : second_pass)[ev[j].crossing] = Slot{in, out};

      const int next = (j + 1) % m;
      auto& path = g.edge_paths[out - 1];
      path.push_back(a.hits[ev[j].crossing].at);
      int steps = (ev[next].segment - ev[j].segment + k) % k;
      if (next == 0 && steps == 0) steps = k;
      for (int s = 1; s <= steps; ++s) path.push_back(poly[(ev[j].segment + s) % k]);
      path.push_back(a.hits[ev[next].crossing].at);
    }
    base += m;
  }

  std::bernoulli_distribution coin(0.5);
  std::vector<Tuple> tuples(n);
  std::vector<SlotFlags> flags(n);
  for (int x = 0; x < n; ++x) {
    const auto& h = a.hits[x];
    const bool first_under = coin(rng);
    const Pass& under = first_under ? h.first : h.second;
    const Pass& over = first_under ? h.second : h.first;
    const Slot us = first_under ? first_pass[x] : second_pass[x];
    const Slot os = first_under ? second_pass[x] : first_pass[x];
    const Point u = direction(a.polygons[under.component], under.segment);
    const Point o = direction(a.polygons[over.component], over.segment);
    // Counterclockwise from the incoming under-arm (pointing along -u).
    if (cross(Point{-u.x, -u.y}, o) > 0) {
      tuples[x] = {us.in, os.out, us.out, os.in};
      flags[x] = {true, false, false, true};
    } else {
      tuples[x] = {us.in, os.in, us.out, os.out};
      flags[x] = {true, true, false, false};
    }
  }
  g.pd = make_pd(tuples, flags);

  // The leftmost polygon vertex borders the unbounded face on its -x side.
  int best_c = 0, best_v = 0;
  for (std::size_t c = 0; c < a.polygons.size(); ++c)
    for (std::size_t v = 0; v < a.polygons[c].size(); ++v)
      if (a.polygons[c][v].x < a.polygons[best_c][best_v].x) {
        best_c = static_cast<int>(c);
        best_v = static_cast<int>(v);
      }
  const auto& poly = a.polygons[best_c];
  const int k = static_cast<int>(poly.size());
  const auto& ev = events[best_c];
  const int m = static_cast<int>(ev.size());
  // The vertex ends segment best_v - 1; find the last pass before it.
  const int seg = (best_v - 1 + k) % k;
  int edge = m - 1;
  for (int j = 0; j < m; ++j)
    if (ev[j].segment <= seg) edge = j;
  Label label = 0;
  for (int c = 0; c < best_c; ++c) label += static_cast<Label>(events[c].size());
  label += edge + 1;
  // The curve turns around the leftmost vertex with the unbounded face on
  // the outside of the turn.
  const Point before = sub(poly[best_v], poly[(best_v - 1 + k) % k]);
  const Point after = sub(poly[(best_v + 1) % k], poly[best_v]);
  const bool outer_on_left = cross(before, after) < 0;
  // Left of travel is the corner of the tail dart; right of travel is the
  // corner of the head dart.
  for (int x = 0; x < n; ++x)
    for (int s = 0; s < 4; ++s)
      if (tuples[x][s] == label && flags[x][s] != outer_on_left) g.outer_dart = 4 * x + s;
  return g;
}

}  // namespace knotalt
