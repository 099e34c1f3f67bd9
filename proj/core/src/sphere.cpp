#include "eincausal/sphere.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <queue>
#include <stdexcept>

#include "eincausal/errors.hpp"

namespace eincausal {

namespace {

constexpr double kUnitNormTol = 1e-12;

double norm(std::span<const double> v) {
  double s = 0.0;
  for (double c : v) s += c * c;
  return std::sqrt(s);
}

}  // namespace

UnitPoint::UnitPoint(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.size() != 2 && coords_.size() != 3) {
    throw std::invalid_argument("UnitPoint: expected 2 or 3 coordinates, got " +
                                std::to_string(coords_.size()));
  }
  for (double c : coords_) {
    if (!std::isfinite(c)) {
      throw std::invalid_argument("UnitPoint: non-finite coordinate");
    }
  }
  const double n = norm(coords_);
  if (n < kUnitNormTol) {
    throw std::invalid_argument("UnitPoint: zero vector cannot be normalized");
  }
  if (std::abs(n - 1.0) > kUnitNormTol) {
    for (double& c : coords_) c /= n;
  }
}

UnitPoint UnitPoint::antipode() const {
  std::vector<double> c(coords_);
  for (double& x : c) x = -x;
  return UnitPoint(std::move(c));
}

double UnitPoint::dot(const UnitPoint& other) const {
  if (ambient_dim() != other.ambient_dim()) {
    throw std::invalid_argument("UnitPoint::dot: dimension mismatch");
  }
  double s = 0.0;
  for (size_t i = 0; i < coords_.size(); ++i) s += coords_[i] * other.coords_[i];
  return s;
}

double geodesic_distance(const UnitPoint& a, const UnitPoint& b) {
  // atan2 of the cross and dot products: unlike acos of the clamped dot,
  // this stays fully accurate near coincident (acos would report ~1e-8)
  // and antipodal points, and needs no clamping.
  const double dot = a.dot(b);
  double cross;
  if (a.ambient_dim() == 2) {
    cross = std::abs(a[0] * b[1] - a[1] * b[0]);
  } else {
    const double cx = a[1] * b[2] - a[2] * b[1];
    const double cy = a[2] * b[0] - a[0] * b[2];
    const double cz = a[0] * b[1] - a[1] * b[0];
    cross = std::sqrt(cx * cx + cy * cy + cz * cz);
  }
  return std::atan2(cross, dot);
}

UnitPoint trace_geodesic(const UnitPoint& a, const UnitPoint& b, double s) {
  const double dist = geodesic_distance(a, b);
  if (s < -kDefaultTol || s > dist + kDefaultTol) {
    throw std::invalid_argument("trace_geodesic: arc length out of [0, dist]");
  }
  s = std::clamp(s, 0.0, dist);
  if (s == 0.0) return a;
  if (s == dist) return b;
  if (dist > M_PI - 1e-12) {
    throw AmbiguousGeodesicError(
        "trace_geodesic: antipodal endpoints admit no unique geodesic");
  }
  // Spherical linear interpolation at arc length s.
  const double sd = std::sin(dist);
  const double wa = std::sin(dist - s) / sd;
  const double wb = std::sin(s) / sd;
  std::vector<double> c(static_cast<size_t>(a.ambient_dim()));
  for (size_t i = 0; i < c.size(); ++i) c[i] = wa * a[static_cast<int>(i)] + wb * b[static_cast<int>(i)];
  return UnitPoint(std::move(c));
}

GridSpec GridSpec::circle(int n) {
  GridSpec s;
  s.kind = Kind::circle;
  s.n = n;
  return s;
}

GridSpec GridSpec::icosphere(int subdivisions) {
  GridSpec s;
  s.kind = Kind::icosphere;
  s.subdivisions = subdivisions;
  return s;
}

GridSpec GridSpec::custom(std::vector<std::vector<double>> nodes,
                          std::vector<std::pair<int, int>> edges) {
  GridSpec s;
  s.kind = Kind::custom;
  s.nodes = std::move(nodes);
  s.edges = std::move(edges);
  return s;
}

namespace {

struct GridData {
  std::vector<UnitPoint> nodes;
  std::vector<std::pair<int, int>> edges;  // i < j
};

GridData build_circle(int n) {
  if (n < 3) throw std::invalid_argument("circle grid requires n >= 3");
  GridData g;
  g.nodes.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double theta = 2.0 * M_PI * static_cast<double>(i) / n;
    g.nodes.emplace_back(std::vector<double>{std::cos(theta), std::sin(theta)});
  }
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    g.edges.emplace_back(std::min(i, j), std::max(i, j));
  }
  return g;
}

GridData build_icosphere(int subdivisions) {
  if (subdivisions < 0) {
    throw std::invalid_argument("icosphere requires subdivisions >= 0");
  }
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<std::vector<double>> verts = {
      {-1, phi, 0}, {1, phi, 0},  {-1, -phi, 0}, {1, -phi, 0},
      {0, -1, phi}, {0, 1, phi},  {0, -1, -phi}, {0, 1, -phi},
      {phi, 0, -1}, {phi, 0, 1},  {-phi, 0, -1}, {-phi, 0, 1}};
  std::vector<std::array<int, 3>> faces = {
      {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
      {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
      {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
      {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};

  std::vector<UnitPoint> nodes;
  nodes.reserve(verts.size());
  for (auto& v : verts) nodes.emplace_back(v);

  for (int level = 0; level < subdivisions; ++level) {
    std::map<std::pair<int, int>, int> midpoint;
    auto mid = [&](int a, int b) {
      const auto key = std::minmax(a, b);
      auto it = midpoint.find(key);
      if (it != midpoint.end()) return it->second;
      std::vector<double> m(3);
      for (int k = 0; k < 3; ++k) m[static_cast<size_t>(k)] = nodes[static_cast<size_t>(a)][k] + nodes[static_cast<size_t>(b)][k];
      nodes.emplace_back(std::move(m));  // normalized by UnitPoint
      const int idx = static_cast<int>(nodes.size()) - 1;
      midpoint.emplace(key, idx);
      return idx;
    };
    std::vector<std::array<int, 3>> next;
    next.reserve(faces.size() * 4);
    for (const auto& f : faces) {
      const int a = mid(f[0], f[1]);
      const int b = mid(f[1], f[2]);
      const int c = mid(f[2], f[0]);
      next.push_back({f[0], a, c});
      next.push_back({f[1], b, a});
      next.push_back({f[2], c, b});
      next.push_back({a, b, c});
    }
    faces = std::move(next);
  }

  std::map<std::pair<int, int>, bool> edge_set;
  for (const auto& f : faces) {
    for (int k = 0; k < 3; ++k) {
      const auto key = std::minmax(f[static_cast<size_t>(k)], f[static_cast<size_t>((k + 1) % 3)]);
      edge_set.emplace(key, true);
    }
  }
  GridData g;
  g.nodes = std::move(nodes);
  g.edges.reserve(edge_set.size());
  for (const auto& [e, _] : edge_set) g.edges.push_back(e);
  return g;
}

GridData build_custom(const GridSpec& spec) {
  if (spec.nodes.size() < 2) {
    throw std::invalid_argument("custom grid requires at least 2 nodes");
  }
  GridData g;
  g.nodes.reserve(spec.nodes.size());
  for (const auto& c : spec.nodes) g.nodes.emplace_back(c);
  const int dim = g.nodes.front().ambient_dim();
  for (const auto& p : g.nodes) {
    if (p.ambient_dim() != dim) {
      throw std::invalid_argument("custom grid: mixed node dimensions");
    }
  }
  const int n = static_cast<int>(g.nodes.size());
  for (const auto& [i, j] : spec.edges) {
    if (i < 0 || j < 0 || i >= n || j >= n || i == j) {
      throw std::invalid_argument("custom grid: malformed edge");
    }
    g.edges.emplace_back(std::min(i, j), std::max(i, j));
  }
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  if (g.edges.empty()) throw std::invalid_argument("custom grid: no edges");
  return g;
}

std::optional<std::vector<int>> find_antipode_map(
    const std::vector<UnitPoint>& nodes) {
  const int n = static_cast<int>(nodes.size());
  std::vector<int> perm(static_cast<size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    const UnitPoint neg = nodes[static_cast<size_t>(i)].antipode();
    int found = -1;
    for (int j = 0; j < n; ++j) {
      if (geodesic_distance(neg, nodes[static_cast<size_t>(j)]) <= kDefaultTol) {
        found = j;
        break;
      }
    }
    if (found < 0) return std::nullopt;
    perm[static_cast<size_t>(i)] = found;
  }
  return perm;
}

}  // namespace

SphereGrid SphereGrid::build(const GridSpec& spec) {
  GridData data;
  switch (spec.kind) {
    case GridSpec::Kind::circle:
      data = build_circle(spec.n);
      break;
    case GridSpec::Kind::icosphere:
      data = build_icosphere(spec.subdivisions);
      break;
    case GridSpec::Kind::custom:
      data = build_custom(spec);
      break;
  }

  SphereGrid grid;
  grid.spec_ = spec;
  grid.nodes_ = std::move(data.nodes);
  grid.adjacency_.assign(grid.nodes_.size(), {});
  grid.edges_.reserve(data.edges.size());
  for (const auto& [i, j] : data.edges) {
    const double len = geodesic_distance(grid.nodes_[static_cast<size_t>(i)],
                                         grid.nodes_[static_cast<size_t>(j)]);
    grid.edges_.emplace_back(i, j, len);
    grid.adjacency_[static_cast<size_t>(i)].push_back({j, len});
    grid.adjacency_[static_cast<size_t>(j)].push_back({i, len});
    grid.resolution_h_ = std::max(grid.resolution_h_, len);
  }
  if (!detail::is_connected(grid.adjacency_)) {
    throw std::invalid_argument("grid: adjacency graph is not connected");
  }
  grid.antipode_ = find_antipode_map(grid.nodes_);
  return grid;
}

int SphereGrid::nearest_node(const UnitPoint& p) const {
  int best = 0;
  double best_dot = -2.0;
  for (int i = 0; i < size(); ++i) {
    const double d = p.dot(nodes_[static_cast<size_t>(i)]);
    if (d > best_dot) {
      best_dot = d;
      best = i;
    }
  }
  return best;
}

int SphereGrid::nearest_node_within(const UnitPoint& p,
                                    double max_distance) const {
  const int i = nearest_node(p);
  const double d = geodesic_distance(p, nodes_[static_cast<size_t>(i)]);
  if (d > max_distance) {
    throw ResolutionError("point lies " + std::to_string(d) +
                          " rad from the nearest grid node (limit " +
                          std::to_string(max_distance) + ")");
  }
  return i;
}

bool SphereGrid::operator==(const SphereGrid& other) const {
  if (spec_ == other.spec_) return true;
  if (size() != other.size() || edges_.size() != other.edges_.size()) {
    return false;
  }
  for (int i = 0; i < size(); ++i) {
    if (node(i).coords() != other.node(i).coords()) return false;
  }
  return edges_ == other.edges_;
}

std::vector<double> graph_distance(const SphereGrid& grid,
                                   std::span<const int> sources,
                                   std::span<const double> offsets) {
  for (int s : sources) {
    if (s < 0 || s >= grid.size()) {
      throw std::invalid_argument("graph_distance: source index out of range");
    }
  }
  return detail::multi_source_dijkstra(grid.adjacency(), sources, offsets);
}

namespace detail {

std::vector<double> multi_source_dijkstra(const Adjacency& adjacency,
                                          std::span<const int> sources,
                                          std::span<const double> offsets) {
  if (sources.empty()) {
    throw std::invalid_argument("multi_source_dijkstra: empty source set");
  }
  if (offsets.size() != sources.size()) {
    throw std::invalid_argument(
        "multi_source_dijkstra: offsets must match sources");
  }
  for (double o : offsets) {
    if (!std::isfinite(o)) {
      throw std::invalid_argument("multi_source_dijkstra: non-finite offset");
    }
  }
  const size_t n = adjacency.size();
  std::vector<double> dist(n, std::numeric_limits<double>::infinity());
  using Item = std::pair<double, int>;  // (distance, node); index breaks ties
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> queue;
  for (size_t k = 0; k < sources.size(); ++k) {
    const auto s = static_cast<size_t>(sources[k]);
    if (offsets[k] < dist[s]) {
      dist[s] = offsets[k];
      queue.emplace(dist[s], sources[k]);
    }
  }
  while (!queue.empty()) {
    const auto [d, v] = queue.top();
    queue.pop();
    if (d > dist[static_cast<size_t>(v)]) continue;
    for (const GraphEdge& e : adjacency[static_cast<size_t>(v)]) {
      const double nd = d + e.length;
      if (nd < dist[static_cast<size_t>(e.to)]) {
        dist[static_cast<size_t>(e.to)] = nd;
        queue.emplace(nd, e.to);
      }
    }
  }
  return dist;
}

bool is_connected(const Adjacency& adjacency) {
  if (adjacency.empty()) return false;
  std::vector<char> seen(adjacency.size(), 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  size_t count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (const GraphEdge& e : adjacency[static_cast<size_t>(v)]) {
      if (!seen[static_cast<size_t>(e.to)]) {
        seen[static_cast<size_t>(e.to)] = 1;
        ++count;
        stack.push_back(e.to);
      }
    }
  }
  return count == adjacency.size();
}

}  // namespace detail

}  // namespace eincausal
