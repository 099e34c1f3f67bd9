#include "eincausal/enveloping.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace eincausal {

namespace {

Adjacency build_adjacency(const std::vector<UnitPoint>& images,
                          const std::vector<std::pair<int, int>>& edges) {
  Adjacency adj(images.size());
  const int n = static_cast<int>(images.size());
  for (const auto& [i, j] : edges) {
    if (i < 0 || j < 0 || i >= n || j >= n || i == j) {
      throw std::invalid_argument("ImmersedBase: malformed edge");
    }
    const double len = geodesic_distance(images[static_cast<size_t>(i)],
                                         images[static_cast<size_t>(j)]);
    adj[static_cast<size_t>(i)].push_back({j, len});
    adj[static_cast<size_t>(j)].push_back({i, len});
  }
  return adj;
}

// Nodes within graph distance radius of v (truncated Dijkstra).
std::vector<int> graph_ball(const Adjacency& adj, int v, double radius) {
  std::vector<double> dist(adj.size(), HUGE_VAL);
  std::vector<int> reached;
  std::vector<std::pair<double, int>> heap;
  dist[static_cast<size_t>(v)] = 0.0;
  heap.emplace_back(0.0, v);
  auto cmp = std::greater<>();
  while (!heap.empty()) {
    std::pop_heap(heap.begin(), heap.end(), cmp);
    const auto [d, u] = heap.back();
    heap.pop_back();
    if (d > dist[static_cast<size_t>(u)]) continue;
    reached.push_back(u);
    for (const GraphEdge& e : adj[static_cast<size_t>(u)]) {
      const double nd = d + e.length;
      if (nd <= radius && nd < dist[static_cast<size_t>(e.to)]) {
        dist[static_cast<size_t>(e.to)] = nd;
        heap.emplace_back(nd, e.to);
        std::push_heap(heap.begin(), heap.end(), cmp);
      }
    }
  }
  return reached;
}

}  // namespace

ImmersedBase::ImmersedBase(std::vector<UnitPoint> images,
                           std::vector<std::pair<int, int>> edges,
                           double r_inj, bool truncated_ends)
    : images_(std::move(images)),
      adjacency_(build_adjacency(images_, edges)),
      r_inj_(r_inj),
      truncated_ends_(truncated_ends) {
  if (images_.empty()) {
    throw std::invalid_argument("ImmersedBase: no nodes");
  }
  if (!(r_inj_ > 0.0)) {
    throw std::invalid_argument("ImmersedBase: r_inj must be positive");
  }
  if (!detail::is_connected(adjacency_)) {
    throw std::invalid_argument("ImmersedBase: graph is not connected");
  }
  for (const auto& nbrs : adjacency_) {
    for (const GraphEdge& e : nbrs) {
      if (e.length > r_inj_) {
        throw std::invalid_argument(
            "ImmersedBase: edge longer than the injectivity scale");
      }
      max_edge_ = std::max(max_edge_, e.length);
    }
  }
  // Local injectivity: within graph distance r_inj of any node, the
  // immersion must not identify two nodes.
  for (int v = 0; v < size(); ++v) {
    const std::vector<int> ball = graph_ball(adjacency_, v, r_inj_);
    for (size_t a = 0; a < ball.size(); ++a) {
      for (size_t b = a + 1; b < ball.size(); ++b) {
        if (geodesic_distance(images_[static_cast<size_t>(ball[a])],
                              images_[static_cast<size_t>(ball[b])]) <=
            kDefaultTol) {
          throw std::invalid_argument(
              "ImmersedBase: immersion identifies nodes " +
              std::to_string(ball[a]) + " and " + std::to_string(ball[b]) +
              " inside an injectivity ball");
        }
      }
    }
  }
}

double base_distance(const ImmersedBase& base, int b1, int b2) {
  if (b1 == b2) return 0.0;
  return base_distances_from(base, b1)[static_cast<size_t>(b2)];
}

std::vector<double> base_distances_from(const ImmersedBase& base, int b) {
  const int sources[1] = {b};
  const double offsets[1] = {0.0};
  return detail::multi_source_dijkstra(base.adjacency(), sources, offsets);
}

CausalRelation e_causal_relation(const ImmersedBase& base, const EPoint& p,
                                 const EPoint& q) {
  const double dt = q.t - p.t;
  if (p.base_node == q.base_node) {
    // Fibers are inextensible timelike curves.
    if (std::abs(dt) <= kDefaultTol) return CausalRelation::equal;
    return dt > 0 ? CausalRelation::chronological_future
                  : CausalRelation::chronological_past;
  }
  const double dist = base_distance(base, p.base_node, q.base_node);
  const double band = 2.0 * base.max_edge_length();
  if (std::abs(dist - std::abs(dt)) <= band) {
    return dt > 0 ? CausalRelation::lightlike_future
                  : CausalRelation::lightlike_past;
  }
  if (dist < std::abs(dt)) {
    return dt > 0 ? CausalRelation::chronological_future
                  : CausalRelation::chronological_past;
  }
  return CausalRelation::unrelated;
}

CoverPoint develop(const ImmersedBase& base, const EPoint& p) {
  return CoverPoint(base.image(p.base_node), p.t);
}

ImmersedBase make_sphere_minus_node_base(const SphereGrid& grid, int node) {
  if (node < 0 || node >= grid.size()) {
    throw std::invalid_argument("make_sphere_minus_node_base: bad node");
  }
  std::vector<UnitPoint> images;
  std::vector<int> remap(static_cast<size_t>(grid.size()), -1);
  for (int v = 0; v < grid.size(); ++v) {
    if (v == node) continue;
    remap[static_cast<size_t>(v)] = static_cast<int>(images.size());
    images.push_back(grid.node(v));
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& [i, j, len] : grid.edges()) {
    if (i == node || j == node) continue;
    edges.emplace_back(remap[static_cast<size_t>(i)],
                       remap[static_cast<size_t>(j)]);
  }
  return ImmersedBase(std::move(images), std::move(edges), M_PI / 2.0);
}

ImmersedBase make_full_sphere_base(const SphereGrid& grid) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(grid.edges().size());
  for (const auto& [i, j, len] : grid.edges()) edges.emplace_back(i, j);
  return ImmersedBase(grid.nodes(), std::move(edges), M_PI / 2.0);
}

ImmersedBase make_helix_base(double h, int turns) {
  if (!(h > 0.0) || h >= M_PI / 4.0 || turns < 1) {
    throw std::invalid_argument("make_helix_base: need 0 < h < pi/4, turns >= 1");
  }
  const int count = static_cast<int>(std::lround(2.0 * M_PI * turns / h));
  std::vector<UnitPoint> images;
  images.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double u = -M_PI * turns + i * h;
    images.emplace_back(std::vector<double>{std::cos(u), std::sin(u)});
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<size_t>(count - 1));
  for (int i = 0; i + 1 < count; ++i) edges.emplace_back(i, i + 1);
  return ImmersedBase(std::move(images), std::move(edges), M_PI / 2.0,
                      /*truncated_ends=*/true);
}

BaseRegion::BaseRegion(std::shared_ptr<const ImmersedBase> base,
                       std::vector<int> interior)
    : base_(std::move(base)), interior_(std::move(interior)) {
  std::sort(interior_.begin(), interior_.end());
  interior_.erase(std::unique(interior_.begin(), interior_.end()),
                  interior_.end());
  if (interior_.empty()) {
    throw std::invalid_argument("BaseRegion: empty interior");
  }
  kind_.assign(static_cast<size_t>(base_->size()), 0);
  for (int v : interior_) {
    if (v < 0 || v >= base_->size()) {
      throw std::invalid_argument("BaseRegion: node index out of range");
    }
    kind_[static_cast<size_t>(v)] = 1;
  }
  for (int v = 0; v < base_->size(); ++v) {
    if (kind_[static_cast<size_t>(v)] == 1) continue;
    for (const GraphEdge& e : base_->adjacency()[static_cast<size_t>(v)]) {
      if (kind_[static_cast<size_t>(e.to)] == 1) {
        kind_[static_cast<size_t>(v)] = 2;
        boundary_.push_back(v);
        break;
      }
    }
  }
}

namespace {

void check_base_lipschitz(const BaseRegion& region, const BaseField& f,
                          std::vector<LipschitzViolation>& out) {
  if (!f.is_finite()) return;
  const ImmersedBase& base = region.base();
  const double tol = base.max_edge_length();
  auto value = [&](int node) {
    if (region.is_interior(node)) {
      const auto it = std::lower_bound(region.interior().begin(),
                                       region.interior().end(), node);
      return f.values[static_cast<size_t>(it - region.interior().begin())];
    }
    const auto it = std::lower_bound(region.boundary().begin(),
                                     region.boundary().end(), node);
    return f.trace[static_cast<size_t>(it - region.boundary().begin())];
  };
  for (int v = 0; v < base.size(); ++v) {
    if (!region.in_region(v)) continue;
    for (const GraphEdge& e : base.adjacency()[static_cast<size_t>(v)]) {
      if (e.to <= v || !region.in_region(e.to)) continue;
      const double diff = std::abs(value(v) - value(e.to));
      const double bound = e.length * (1.0 + tol);
      if (diff > bound) out.push_back({v, e.to, diff, bound});
    }
  }
}

}  // namespace

EMaximalizeResult maximalize_in_E(const BaseDomain& dom) {
  const BaseRegion& region = dom.region;
  const ImmersedBase& base = region.base();
  const bool truncated = base.truncated_ends();

  std::vector<LipschitzViolation> violations;
  check_base_lipschitz(region, dom.f_minus, violations);
  check_base_lipschitz(region, dom.f_plus, violations);
  if (!violations.empty()) {
    return EMaximalizeResult{EMaximalizeStatus::lipschitz_fail, dom, false,
                             truncated, std::move(violations)};
  }

  if (region.boundary().empty()) {
    BaseDomain full{region, BaseField{FieldInfinity::minus, {}, {}},
                    BaseField{FieldInfinity::plus, {}, {}}};
    return EMaximalizeResult{EMaximalizeStatus::full_fiber, std::move(full),
                             false, truncated, {}};
  }
  if (!dom.f_minus.is_finite() || !dom.f_plus.is_finite()) {
    throw std::invalid_argument(
        "maximalize_in_E: infinite field over a region with boundary");
  }

  std::vector<double> trace(region.boundary().size());
  for (size_t i = 0; i < trace.size(); ++i) {
    trace[i] = 0.5 * (dom.f_plus.trace[i] + dom.f_minus.trace[i]);
  }
  std::vector<double> neg_trace(trace.size());
  for (size_t i = 0; i < trace.size(); ++i) neg_trace[i] = -trace[i];

  const std::vector<double> plus_at = detail::multi_source_dijkstra(
      base.adjacency(), region.boundary(), trace);
  std::vector<double> minus_at = detail::multi_source_dijkstra(
      base.adjacency(), region.boundary(), neg_trace);
  for (double& v : minus_at) v = -v;

  BaseField f_plus, f_minus;
  f_plus.values.reserve(region.interior().size());
  f_minus.values.reserve(region.interior().size());
  double extent = 0.0;
  for (int v : region.interior()) {
    f_plus.values.push_back(plus_at[static_cast<size_t>(v)]);
    f_minus.values.push_back(minus_at[static_cast<size_t>(v)]);
    extent = std::max(extent, f_plus.values.back() - f_minus.values.back());
  }
  f_plus.trace = trace;
  f_minus.trace = std::move(trace);

  BaseDomain out{region, std::move(f_minus), std::move(f_plus)};
  return EMaximalizeResult{EMaximalizeStatus::ok, std::move(out),
                           extent >= base.r_inj(), truncated, {}};
}

}  // namespace eincausal
