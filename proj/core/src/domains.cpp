#include "eincausal/domains.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

#include "eincausal/errors.hpp"
#include "eincausal/parallel.hpp"
#include "eincausal/rng.hpp"

namespace eincausal {

namespace {
constexpr double kStrictOrderTol = 1e-12;
// Time slab used to sample points of a domain with an infinite side.
constexpr double kInfiniteSlab = M_PI;
}  // namespace

CausalDomain::CausalDomain(ScalarField f_minus, ScalarField f_plus,
                           double coincidence_tol)
    : f_minus_(std::move(f_minus)),
      f_plus_(std::move(f_plus)),
      coincidence_tol_(coincidence_tol) {
  if (!(f_minus_.region() == f_plus_.region())) {
    throw std::invalid_argument("CausalDomain: fields live on different regions");
  }
  if (f_minus_.infinity() == FieldInfinity::plus ||
      f_plus_.infinity() == FieldInfinity::minus) {
    throw std::invalid_argument(
        "CausalDomain: f- may only be -infinite and f+ only +infinite");
  }
}

std::string to_string(DiagnosticCode code) {
  switch (code) {
    case DiagnosticCode::lipschitz_fail: return "LIPSCHITZ_FAIL";
    case DiagnosticCode::order_fail: return "ORDER_FAIL";
    case DiagnosticCode::trace_mismatch: return "TRACE_MISMATCH";
    case DiagnosticCode::mixed_infinity: return "MIXED_INFINITY";
    case DiagnosticCode::curve_crossing: return "CURVE_CROSSING";
  }
  return "UNKNOWN";
}

namespace {

void append_lipschitz_issues(const ScalarField& field, const char* which,
                             const ValidationOptions& opts,
                             ValidationReport& report) {
  if (!field.is_finite()) return;
  const LipschitzReport lip =
      check_lipschitz(field, opts.lipschitz_mode, opts.lip_tol);
  for (const auto& v : lip.violations) {
    report.pass = false;
    report.issues.push_back({DiagnosticCode::lipschitz_fail, v.node_a, v.node_b,
                             v.difference,
                             std::string(which) + " violates the 1-Lipschitz bound"});
  }
}

}  // namespace

ValidationReport validate_domain(const CausalDomain& dom,
                                 const ValidationOptions& opts) {
  ValidationReport report;
  const Region& region = dom.region();
  const ScalarField& fm = dom.f_minus();
  const ScalarField& fp = dom.f_plus();

  const bool any_infinite = !fm.is_finite() || !fp.is_finite();
  if (any_infinite && !region.boundary().empty()) {
    report.pass = false;
    report.issues.push_back({DiagnosticCode::mixed_infinity, -1, -1, 0.0,
                             "infinite field over a region with boundary"});
  }

  append_lipschitz_issues(fm, "f-", opts, report);
  append_lipschitz_issues(fp, "f+", opts, report);

  if (fm.is_finite() && fp.is_finite()) {
    for (size_t i = 0; i < region.interior().size(); ++i) {
      const double lo = fm.interior_value(static_cast<int>(i));
      const double hi = fp.interior_value(static_cast<int>(i));
      if (!(lo < hi - kStrictOrderTol)) {
        report.pass = false;
        report.issues.push_back({DiagnosticCode::order_fail,
                                 region.interior()[i], -1, hi - lo,
                                 "f- must be strictly below f+"});
      }
    }
    for (size_t i = 0; i < region.boundary().size(); ++i) {
      const double tm = fm.trace_value(static_cast<int>(i));
      const double tp = fp.trace_value(static_cast<int>(i));
      if (std::abs(tp - tm) > dom.coincidence_tol()) {
        report.pass = false;
        report.issues.push_back({DiagnosticCode::trace_mismatch,
                                 region.boundary()[i], -1, tp - tm,
                                 "boundary traces of f+ and f- must coincide"});
      }
    }
  }
  return report;
}

bool contains(const CausalDomain& dom, const CoverPoint& p) {
  const SphereGrid& grid = dom.region().grid();
  const int node = grid.nearest_node_within(p.x, grid.resolution() / 2.0);
  if (!dom.region().is_interior(node)) return false;
  return dom.f_minus().value(node) < p.t && p.t < dom.f_plus().value(node);
}

namespace {

// Candidate time interval of the domain over a node, clipped to a slab
// when a side is infinite. Returns false if empty.
bool fiber_interval(const CausalDomain& dom, int node, double& lo, double& hi) {
  if (!dom.region().is_interior(node)) return false;
  lo = dom.f_minus().value(node);
  hi = dom.f_plus().value(node);
  if (lo == -HUGE_VAL) lo = std::max(lo, -kInfiniteSlab);
  if (hi == HUGE_VAL) hi = std::min(hi, kInfiniteSlab);
  return lo < hi;
}

// Distances from every grid node, cached per point.
std::vector<double> distances_from(const SphereGrid& grid, const UnitPoint& x) {
  std::vector<double> d(static_cast<size_t>(grid.size()));
  for (int v = 0; v < grid.size(); ++v) {
    d[static_cast<size_t>(v)] = geodesic_distance(grid.node(v), x);
  }
  return d;
}

// In-domain test with a boundary band: interior fibers widen by band,
// boundary fibers collapse to the trace +/- band, exterior fails.
bool in_domain_banded(const CausalDomain& dom, int node, double t,
                      double band) {
  const Region& region = dom.region();
  if (region.is_interior(node)) {
    return t > dom.f_minus().value(node) - band &&
           t < dom.f_plus().value(node) + band;
  }
  if (region.is_boundary(node)) {
    if (!dom.f_plus().is_finite()) return false;
    return std::abs(t - dom.f_plus().value(node)) <= band;
  }
  return false;
}

}  // namespace

std::optional<DiamondWitness> causal_convexity_oracle(const CausalDomain& dom,
                                                      int sample_count,
                                                      uint64_t seed) {
  const SphereGrid& grid = dom.region().grid();
  const Region& region = dom.region();
  if (region.empty()) return std::nullopt;
  const double band = grid.resolution();
  const double step = grid.resolution() / 2.0;
  const int n_interior = static_cast<int>(region.interior().size());

  std::vector<std::optional<DiamondWitness>> results(
      static_cast<size_t>(sample_count));
  parallel_for(static_cast<size_t>(sample_count), [&](size_t task) {
    Rng rng(split_seed(seed, task));
    // Sample p in the domain, then q in its chronological future.
    for (int attempt = 0; attempt < 64; ++attempt) {
      const int xp = region.interior()[static_cast<size_t>(
          rng.uniform_int(0, n_interior - 1))];
      double lo, hi;
      if (!fiber_interval(dom, xp, lo, hi)) continue;
      const CoverPoint p(grid.node(xp), rng.uniform(lo, hi));
      const auto dist_p = distances_from(grid, p.x);

      const int xq = region.interior()[static_cast<size_t>(
          rng.uniform_int(0, n_interior - 1))];
      double qlo, qhi;
      if (!fiber_interval(dom, xq, qlo, qhi)) continue;
      qlo = std::max(qlo, p.t + dist_p[static_cast<size_t>(xq)] + 1e-6);
      if (qlo >= qhi) continue;
      const CoverPoint q(grid.node(xq), rng.uniform(qlo, qhi));
      const auto dist_q = distances_from(grid, q.x);

      // Exhaustive scan of the diamond J(p, q) over all grid fibers.
      for (int x = 0; x < grid.size(); ++x) {
        const double a = p.t + dist_p[static_cast<size_t>(x)];
        const double b = q.t - dist_q[static_cast<size_t>(x)];
        if (a > b) continue;
        const int steps = static_cast<int>(std::floor((b - a) / step));
        for (int k = 0; k <= steps + 1; ++k) {
          const double t = k <= steps ? a + k * step : b;
          if (!in_domain_banded(dom, x, t, band)) {
            results[task] = DiamondWitness{p, q, CoverPoint(grid.node(x), t)};
            return;
          }
        }
      }
      return;  // pair scanned clean
    }
  });

  for (auto& r : results) {
    if (r.has_value()) return r;
  }
  return std::nullopt;
}

SurfaceGraph::SurfaceGraph(ScalarField h) : h_(std::move(h)) {
  if (!h_.is_finite()) {
    throw std::invalid_argument("SurfaceGraph: h must be finite");
  }
}

namespace {

// A discrete causal curve: nodes adjacent in the grid, times strictly
// increasing by at least the traversed edge length.
struct DiscreteCurve {
  std::vector<int> nodes;
  std::vector<double> times;
};

// Extends a curve forward (dir=+1) or backward (dir=-1) from (node, t)
// until it decisively leaves the domain or the region footprint.
void extend_curve(const CausalDomain& dom, Rng& rng, int dir, int node,
                  double t, DiscreteCurve& out) {
  const SphereGrid& grid = dom.region().grid();
  const Region& region = dom.region();
  const double margin = 3.0 * grid.resolution();
  const int max_steps = 16 * grid.size();
  for (int step = 0; step < max_steps; ++step) {
    if (!region.in_region(node)) break;
    const double bound = dir > 0 ? dom.f_plus().value(node)
                                 : dom.f_minus().value(node);
    if (region.is_boundary(node)) {
      if (!dom.f_plus().is_finite()) break;
      if (dir * (t - dom.f_plus().value(node)) > margin) break;
    } else if (std::isfinite(bound) && dir * (t - bound) > margin) {
      break;
    } else if (!std::isfinite(bound) && std::abs(t) > 2.0 * kInfiniteSlab) {
      break;  // infinite side: stop after clearing the sampling slab
    }
    const auto& nbrs = grid.adjacency()[static_cast<size_t>(node)];
    if (rng.bernoulli(0.35)) {
      // timelike dwell on the fiber
      t += dir * rng.uniform(0.3, 1.0) * grid.resolution();
    } else {
      const GraphEdge e = nbrs[static_cast<size_t>(
          rng.uniform_int(0, static_cast<int>(nbrs.size()) - 1))];
      const double speed = rng.bernoulli(0.5) ? 1.0 : rng.uniform(1.0, 1.8);
      t += dir * e.length * speed;
      node = e.to;
    }
    out.nodes.push_back(node);
    out.times.push_back(t);
  }
}

DiscreteCurve random_causal_curve(const CausalDomain& dom, Rng& rng, int node,
                                  double t) {
  DiscreteCurve past, future;
  extend_curve(dom, rng, -1, node, t, past);
  extend_curve(dom, rng, +1, node, t, future);
  DiscreteCurve curve;
  curve.nodes.reserve(past.nodes.size() + future.nodes.size() + 1);
  for (size_t i = past.nodes.size(); i-- > 0;) {
    curve.nodes.push_back(past.nodes[i]);
    curve.times.push_back(past.times[i]);
  }
  curve.nodes.push_back(node);
  curve.times.push_back(t);
  curve.nodes.insert(curve.nodes.end(), future.nodes.begin(),
                     future.nodes.end());
  curve.times.insert(curve.times.end(), future.times.begin(),
                     future.times.end());
  return curve;
}

// Band-tolerant crossing count of a curve against the graph of h:
// transitions between strictly-below-band and strictly-above-band,
// with a band touch alone counting as a single crossing.
int count_crossings(const DiscreteCurve& curve, const ScalarField& h,
                    double band, bool* touched_band = nullptr) {
  int crossings = 0;
  int last_sign = 0;
  bool touched = false;
  const Region& region = h.region();
  for (size_t k = 0; k < curve.nodes.size(); ++k) {
    const int node = curve.nodes[k];
    if (!region.in_region(node)) continue;
    const double s = curve.times[k] - h.value(node);
    const int sign = s > band ? 1 : (s < -band ? -1 : 0);
    if (sign == 0) {
      touched = true;
      continue;
    }
    if (last_sign != 0 && sign != last_sign) ++crossings;
    last_sign = sign;
  }
  if (crossings == 0 && touched) crossings = 1;
  if (touched_band != nullptr) *touched_band = touched;
  return crossings;
}

std::vector<CoverPoint> curve_points(const DiscreteCurve& curve,
                                     const SphereGrid& grid) {
  std::vector<CoverPoint> pts;
  pts.reserve(curve.nodes.size());
  for (size_t k = 0; k < curve.nodes.size(); ++k) {
    pts.emplace_back(grid.node(curve.nodes[k]), curve.times[k]);
  }
  return pts;
}

}  // namespace

ValidationReport validate_cauchy_surface(const CausalDomain& dom,
                                         const SurfaceGraph& s,
                                         const SurfaceValidationOptions& opts) {
  if (!(s.region() == dom.region())) {
    throw std::invalid_argument(
        "validate_cauchy_surface: surface region differs from the domain");
  }
  ValidationReport report;
  const Region& region = dom.region();
  const ScalarField& h = s.h();

  const LipschitzReport lip =
      check_lipschitz(h, opts.validation.lipschitz_mode, opts.validation.lip_tol);
  for (const auto& v : lip.violations) {
    report.pass = false;
    report.issues.push_back({DiagnosticCode::lipschitz_fail, v.node_a, v.node_b,
                             v.difference, "h violates the 1-Lipschitz bound"});
  }

  for (size_t i = 0; i < region.interior().size(); ++i) {
    const int node = region.interior()[i];
    const double hv = h.interior_value(static_cast<int>(i));
    if (!(dom.f_minus().value(node) < hv - kStrictOrderTol) ||
        !(hv < dom.f_plus().value(node) - kStrictOrderTol)) {
      report.pass = false;
      report.issues.push_back({DiagnosticCode::order_fail, node, -1, hv,
                               "h must satisfy f- < h < f+"});
    }
  }
  if (dom.f_plus().is_finite()) {
    for (size_t i = 0; i < region.boundary().size(); ++i) {
      const double diff = h.trace_value(static_cast<int>(i)) -
                          dom.f_plus().trace_value(static_cast<int>(i));
      if (std::abs(diff) > dom.coincidence_tol()) {
        report.pass = false;
        report.issues.push_back({DiagnosticCode::trace_mismatch,
                                 region.boundary()[i], -1, diff,
                                 "h trace must match the boundary trace"});
      }
    }
  }
  if (!report.pass) return report;

  // Causal-curve oracle: every sampled inextensible causal curve through
  // the domain must cross the graph exactly once (band-tolerant).
  const SphereGrid& grid = region.grid();
  const double band = grid.resolution();
  const int n_interior = static_cast<int>(region.interior().size());
  if (n_interior == 0) return report;
  std::vector<int> bad(static_cast<size_t>(opts.curve_trials), -1);
  parallel_for(static_cast<size_t>(opts.curve_trials), [&](size_t task) {
    Rng rng(split_seed(opts.seed, task));
    const int node = region.interior()[static_cast<size_t>(
        rng.uniform_int(0, n_interior - 1))];
    double lo, hi;
    if (!fiber_interval(dom, node, lo, hi)) return;
    const double t = rng.uniform(lo, hi);
    const DiscreteCurve curve = random_causal_curve(dom, rng, node, t);
    if (count_crossings(curve, h, band) != 1) {
      bad[task] = node;
    }
  });
  for (size_t task = 0; task < bad.size(); ++task) {
    if (bad[task] >= 0) {
      report.pass = false;
      report.issues.push_back(
          {DiagnosticCode::curve_crossing, bad[task], -1,
           static_cast<double>(task),
           "a causal test curve does not cross the graph exactly once"});
    }
  }
  return report;
}

DevelopmentResult cauchy_development_of_graph(const SurfaceGraph& s) {
  const Region& region = s.region();
  if (region.boundary().empty()) {
    CausalDomain full(ScalarField::infinite(region, FieldInfinity::minus),
                      ScalarField::infinite(region, FieldInfinity::plus));
    return DevelopmentResult{std::move(full), true, false};
  }
  std::vector<Site> sites;
  sites.reserve(region.boundary().size());
  for (size_t i = 0; i < region.boundary().size(); ++i) {
    sites.push_back({region.boundary()[i], s.h().trace_value(static_cast<int>(i))});
  }
  ScalarField f_plus = lower_envelope(sites, region, EnvelopeMetric::exact);
  ScalarField f_minus = upper_envelope(sites, region, EnvelopeMetric::exact);
  bool touches = false;
  for (size_t i = 0; i < region.interior().size() && !touches; ++i) {
    const double hv = s.h().interior_value(static_cast<int>(i));
    touches = f_plus.interior_value(static_cast<int>(i)) <= hv + kStrictOrderTol ||
              f_minus.interior_value(static_cast<int>(i)) >= hv - kStrictOrderTol;
  }
  CausalDomain dev(std::move(f_minus), std::move(f_plus));
  return DevelopmentResult{std::move(dev), false, touches};
}

namespace {

// Past- (dir=-1) or future-directed (dir=+1) null curve from (node, t)
// along the shortest grid path toward the boundary node minimizing
// trace + path length (dir=-1) or maximizing trace - path length (dir=+1).
std::optional<DiscreteCurve> targeted_escape(const CausalDomain& dom,
                                             const ScalarField& h, int node,
                                             double t, int dir, double band) {
  const SphereGrid& grid = dom.region().grid();
  const Region& region = dom.region();
  if (region.boundary().empty()) return std::nullopt;

  // Single-source shortest paths from the probe node with parents.
  const size_t n = static_cast<size_t>(grid.size());
  std::vector<double> dist(n, std::numeric_limits<double>::infinity());
  std::vector<int> parent(n, -1);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> queue;
  dist[static_cast<size_t>(node)] = 0.0;
  queue.emplace(0.0, node);
  while (!queue.empty()) {
    const auto [d, v] = queue.top();
    queue.pop();
    if (d > dist[static_cast<size_t>(v)]) continue;
    for (const GraphEdge& e : grid.adjacency()[static_cast<size_t>(v)]) {
      if (d + e.length < dist[static_cast<size_t>(e.to)]) {
        dist[static_cast<size_t>(e.to)] = d + e.length;
        parent[static_cast<size_t>(e.to)] = v;
        queue.emplace(dist[static_cast<size_t>(e.to)], e.to);
      }
    }
  }

  int best = -1;
  double best_key = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < region.boundary().size(); ++i) {
    const int b = region.boundary()[i];
    const double trace = dom.f_plus().is_finite()
                             ? dom.f_plus().trace_value(static_cast<int>(i))
                             : 0.0;
    const double key = dir < 0 ? trace + dist[static_cast<size_t>(b)]
                               : -(trace - dist[static_cast<size_t>(b)]);
    if (key < best_key) {
      best_key = key;
      best = b;
    }
  }
  if (best < 0) return std::nullopt;

  std::vector<int> path;
  for (int v = best; v != -1; v = parent[static_cast<size_t>(v)]) {
    path.push_back(v);
  }
  std::reverse(path.begin(), path.end());  // node .. best

  DiscreteCurve curve;
  curve.nodes.push_back(node);
  curve.times.push_back(t);
  double cur_t = t;
  for (size_t k = 1; k < path.size(); ++k) {
    const double len =
        geodesic_distance(grid.node(path[k - 1]), grid.node(path[k]));
    cur_t += dir * len;
    curve.nodes.push_back(path[k]);
    curve.times.push_back(cur_t);
  }
  if (dir < 0) {
    std::reverse(curve.nodes.begin(), curve.nodes.end());
    std::reverse(curve.times.begin(), curve.times.end());
  }
  // The escape is only valid if it never meets the graph band.
  if (count_crossings(curve, h, band) != 0) return std::nullopt;
  return curve;
}

}  // namespace

std::optional<DevelopmentWitness> development_curve_oracle(
    const SurfaceGraph& s, const CausalDomain& result, int trials,
    uint64_t seed, int probe_points) {
  const SphereGrid& grid = result.region().grid();
  const Region& region = result.region();
  const double band = grid.resolution();
  const int n_interior = static_cast<int>(region.interior().size());
  if (n_interior == 0) return std::nullopt;
  const bool finite = result.f_plus().is_finite() && result.f_minus().is_finite();

  std::vector<std::optional<DevelopmentWitness>> results(
      static_cast<size_t>(probe_points));
  parallel_for(static_cast<size_t>(probe_points), [&](size_t task) {
    Rng rng(split_seed(seed, task));
    const int node = region.interior()[static_cast<size_t>(
        rng.uniform_int(0, n_interior - 1))];
    double lo, hi;
    if (!fiber_interval(result, node, lo, hi)) return;

    // Inside probe: every causal curve through the point must cross the
    // graph of s. The targeted null descent/ascent is the sharpest test
    // curve: it is exactly the escape route a point outside the true
    // development would have.
    const double t_in = rng.uniform(lo, hi);
    const double h_at = s.h().value(node);
    if (std::abs(t_in - h_at) > band) {
      const int escape_dir = t_in > h_at ? -1 : +1;
      if (auto esc = targeted_escape(result, s.h(), node, t_in, escape_dir, band)) {
        results[task] = DevelopmentWitness{CoverPoint(grid.node(node), t_in),
                                           true, curve_points(*esc, grid)};
        return;
      }
    }
    for (int trial = 0; trial < trials; ++trial) {
      const DiscreteCurve curve = random_causal_curve(result, rng, node, t_in);
      if (count_crossings(curve, s.h(), band) != 1) {
        results[task] =
            DevelopmentWitness{CoverPoint(grid.node(node), t_in), true,
                               curve_points(curve, grid)};
        return;
      }
    }
    if (!finite) return;  // no outside to probe on an infinite side

    // Outside probe beyond the exempt band: an escaping causal curve
    // missing the graph must exist.
    const int dir = rng.bernoulli(0.5) ? +1 : -1;
    const double offset = rng.uniform(0.0, 6.0 * band);
    if (offset <= 3.0 * band) return;  // band-exempt shell
    const double t_out = dir > 0 ? result.f_plus().value(node) + offset
                                 : result.f_minus().value(node) - offset;
    if (targeted_escape(result, s.h(), node, t_out, dir, band).has_value()) {
      return;
    }
    for (int trial = 0; trial < trials; ++trial) {
      const DiscreteCurve curve =
          random_causal_curve(result, rng, node, t_out);
      if (count_crossings(curve, s.h(), band) == 0) return;
    }
    results[task] = DevelopmentWitness{CoverPoint(grid.node(node), t_out),
                                       false,
                                       {}};
  });

  for (auto& r : results) {
    if (r.has_value()) return r;
  }
  return std::nullopt;
}

std::vector<ConjugateWitness> detect_conjugate_pairs(const CausalDomain& dom) {
  const SphereGrid& grid = dom.region().grid();
  if (!grid.antipode_map().has_value()) {
    throw NotApplicableError(
        "detect_conjugate_pairs: grid is not antipode-closed");
  }
  const auto& antipode = *grid.antipode_map();
  const Region& region = dom.region();
  std::vector<ConjugateWitness> witnesses;
  for (int x : region.interior()) {
    const int a = antipode[static_cast<size_t>(x)];
    if (a <= x || !region.is_interior(a)) continue;
    const double lo =
        std::max(dom.f_minus().value(x), dom.f_minus().value(a) - M_PI);
    const double hi =
        std::min(dom.f_plus().value(x), dom.f_plus().value(a) - M_PI);
    if (lo < hi - kStrictOrderTol) {
      double t;
      if (lo == -HUGE_VAL && hi == HUGE_VAL) {
        t = 0.0;
      } else if (lo == -HUGE_VAL) {
        t = hi - 1.0;
      } else if (hi == HUGE_VAL) {
        t = lo + 1.0;
      } else {
        t = 0.5 * (lo + hi);
      }
      witnesses.push_back({x, t});
    }
  }
  return witnesses;
}

std::vector<int> shadow(const CoverPoint& p, const SurfaceGraph& s,
                        double tol) {
  const SphereGrid& grid = s.region().grid();
  const int node = grid.nearest_node_within(p.x, grid.resolution() / 2.0);
  if (!s.region().in_region(node)) {
    throw std::invalid_argument("shadow: point does not lie over the surface");
  }
  const double diff = p.t - s.h().value(node);
  if (std::abs(diff) <= tol) return {node};

  std::vector<int> nodes(s.region().interior());
  nodes.insert(nodes.end(), s.region().boundary().begin(),
               s.region().boundary().end());
  std::sort(nodes.begin(), nodes.end());

  std::vector<int> result;
  for (int x : nodes) {
    const double hx = s.h().value(x);
    const double dist = geodesic_distance(grid.node(x), p.x);
    const double reach = diff > 0 ? p.t - hx : hx - p.t;
    if (dist <= reach + tol) result.push_back(x);
  }
  return result;
}

ShadowComparison shadows_distinguish(const CoverPoint& p, const CoverPoint& q,
                                     const SurfaceGraph& s, double tol) {
  const SphereGrid& grid = s.region().grid();
  const auto side = [&](const CoverPoint& pt) {
    const int node = grid.nearest_node_within(pt.x, grid.resolution() / 2.0);
    if (!s.region().in_region(node)) {
      throw std::invalid_argument(
          "shadows_distinguish: point does not lie over the surface");
    }
    const double diff = pt.t - s.h().value(node);
    return diff > tol ? 1 : (diff < -tol ? -1 : 0);
  };
  const int side_p = side(p);
  const int side_q = side(q);
  if (side_p == 0 || side_p != side_q) {
    throw std::invalid_argument(
        "shadows_distinguish: points must lie strictly on the same side of "
        "the graph");
  }
  ShadowComparison cmp;
  const int region_nodes = static_cast<int>(s.region().interior().size() +
                                            s.region().boundary().size());
  cmp.compact_region_warning = region_nodes == grid.size();
  cmp.distinct = shadow(p, s, tol) != shadow(q, s, tol);
  return cmp;
}

}  // namespace eincausal
