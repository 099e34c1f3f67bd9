#include "eincausal/maximality.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "eincausal/errors.hpp"

namespace eincausal {

namespace {

bool has_conjugate_pairs(const CausalDomain& dom) {
  if (!dom.region().grid().antipode_map().has_value()) {
    // Not decidable on this grid; the envelope machinery proceeds.
    return false;
  }
  return !detect_conjugate_pairs(dom).empty();
}

// The common boundary trace; the midpoint keeps maximalize exactly
// symmetric under time reflection.
std::vector<Site> boundary_sites(const CausalDomain& dom) {
  const Region& region = dom.region();
  std::vector<Site> sites;
  sites.reserve(region.boundary().size());
  for (size_t i = 0; i < region.boundary().size(); ++i) {
    const double trace =
        0.5 * (dom.f_plus().trace_value(static_cast<int>(i)) +
               dom.f_minus().trace_value(static_cast<int>(i)));
    sites.push_back({region.boundary()[i], trace});
  }
  return sites;
}

}  // namespace

std::pair<ScalarField, ScalarField> eikonal_envelopes(const CausalDomain& dom) {
  if (has_conjugate_pairs(dom)) {
    throw NotApplicableError(
        "eikonal_envelopes: domain contains conjugate pairs");
  }
  const Region& region = dom.region();
  if (region.boundary().empty()) {
    return {ScalarField::infinite(region, FieldInfinity::minus),
            ScalarField::infinite(region, FieldInfinity::plus)};
  }
  const std::vector<Site> sites = boundary_sites(dom);
  return {upper_envelope(sites, region), lower_envelope(sites, region)};
}

std::string to_string(MaximalityKind k) {
  switch (k) {
    case MaximalityKind::maximal: return "maximal";
    case MaximalityKind::extendable: return "extendable";
    case MaximalityKind::full_space: return "full_space";
  }
  return "maximal";
}

MaximalityVerdict is_maximal(const CausalDomain& dom, double tol) {
  const Region& region = dom.region();
  if (tol < 0.0) tol = region.grid().resolution();
  MaximalityVerdict verdict;
  if (dom.is_full_space() && region.covers_grid()) {
    verdict.kind = MaximalityKind::maximal;  // already the whole cover
    return verdict;
  }
  if (has_conjugate_pairs(dom) || region.boundary().empty()) {
    verdict.kind = MaximalityKind::full_space;
    return verdict;
  }
  auto [g_minus, g_plus] = eikonal_envelopes(dom);
  double dev = 0.0;
  for (size_t i = 0; i < region.interior().size(); ++i) {
    dev = std::max(dev, std::abs(dom.f_plus().interior_value(static_cast<int>(i)) -
                                 g_plus.interior_value(static_cast<int>(i))));
    dev = std::max(dev, std::abs(dom.f_minus().interior_value(static_cast<int>(i)) -
                                 g_minus.interior_value(static_cast<int>(i))));
  }
  verdict.max_deviation = dev;
  verdict.kind =
      dev <= tol ? MaximalityKind::maximal : MaximalityKind::extendable;
  verdict.g_minus = std::move(g_minus);
  verdict.g_plus = std::move(g_plus);
  return verdict;
}

MaximalizeResult maximalize(const CausalDomain& dom) {
  const Region& region = dom.region();
  if (has_conjugate_pairs(dom) || region.boundary().empty()) {
    if (dom.is_full_space() && region.covers_grid()) {
      return MaximalizeResult{dom, true};
    }
    std::vector<int> all(static_cast<size_t>(region.grid().size()));
    for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    Region whole(region.grid_ptr(), std::move(all));
    CausalDomain full(ScalarField::infinite(whole, FieldInfinity::minus),
                      ScalarField::infinite(whole, FieldInfinity::plus));
    return MaximalizeResult{std::move(full), true};
  }

  const std::vector<Site> sites = boundary_sites(dom);
  ScalarField g_plus = lower_envelope(sites, region);
  ScalarField g_minus = upper_envelope(sites, region);
  // Keep the input's common trace on both sides so a second pass reuses
  // identical sites: the operator is bitwise idempotent.
  std::vector<double> trace(region.boundary().size());
  for (size_t i = 0; i < trace.size(); ++i) trace[i] = sites[i].value;
  ScalarField f_plus = ScalarField::finite(
      region, g_plus.interior_values(), trace);
  ScalarField f_minus = ScalarField::finite(
      region, g_minus.interior_values(), std::move(trace));
  return MaximalizeResult{
      CausalDomain(std::move(f_minus), std::move(f_plus),
                   dom.coincidence_tol()),
      false};
}

namespace {

int nearest_region_node(const Region& region, const UnitPoint& p) {
  const SphereGrid& grid = region.grid();
  int best = -1;
  double best_dot = -2.0;
  auto consider = [&](int v) {
    const double d = p.dot(grid.node(v));
    if (d > best_dot) {
      best_dot = d;
      best = v;
    }
  };
  for (int v : region.interior()) consider(v);
  for (int v : region.boundary()) consider(v);
  return best;
}

}  // namespace

GeodesicCertificate geodesic_certificate(const ScalarField& field, int node,
                                         EikonalDirection direction) {
  if (!field.is_finite()) {
    throw std::invalid_argument("geodesic_certificate: field is infinite");
  }
  const Region& region = field.region();
  if (!region.is_interior(node)) {
    throw std::invalid_argument("geodesic_certificate: node is not interior");
  }
  if (region.boundary().empty()) {
    throw std::invalid_argument("geodesic_certificate: region has no boundary");
  }
  const SphereGrid& grid = region.grid();
  const double h = grid.resolution();
  const int sign = direction == EikonalDirection::future ? +1 : -1;

  // Sites ordered by envelope key; smallest node index breaks ties.
  struct Candidate {
    double key;
    int node;
    double trace;
    double dist;
  };
  std::vector<Candidate> candidates;
  candidates.reserve(region.boundary().size());
  for (size_t i = 0; i < region.boundary().size(); ++i) {
    const int b = region.boundary()[i];
    const double trace = field.trace_value(static_cast<int>(i));
    const double dist = geodesic_distance(grid.node(node), grid.node(b));
    candidates.push_back({sign * trace + dist, b, trace, dist});
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& a, const Candidate& b) {
              return a.key != b.key ? a.key < b.key : a.node < b.node;
            });

  // Samples the arc from the node to the site; for an antipodal site the
  // arc is routed through `via` (the antipode lies on every great circle
  // through the node, and the unit-rate law holds along each of them).
  const double f_at = field.value(node);
  auto evaluate = [&](const Candidate& c, int via) {
    GeodesicCertificate cert;
    cert.site_node = c.node;
    const int steps = std::max(1, static_cast<int>(std::ceil(c.dist / h)));
    const double leg = via < 0 ? c.dist
                               : geodesic_distance(grid.node(node), grid.node(via));
    double residual = 0.0;
    for (int k = 0; k <= steps; ++k) {
      const double s = c.dist * static_cast<double>(k) / steps;
      const UnitPoint x =
          s <= leg || via < 0
              ? trace_geodesic(grid.node(node),
                               grid.node(via < 0 ? c.node : via), std::min(s, leg))
              : trace_geodesic(grid.node(via), grid.node(c.node), s - leg);
      const double expected = f_at - sign * s;
      const int near = nearest_region_node(region, x);
      residual = std::max(residual, std::abs(field.value(near) - expected));
      cert.path.emplace_back(x, expected);
    }
    cert.residual = residual;
    cert.pass = residual <= 2.0 * h;
    return cert;
  };

  for (const Candidate& c : candidates) {
    if (c.dist >= M_PI - 1e-12) continue;  // ambiguous arc, try the next site
    return evaluate(c, -1);
  }
  // Every optimal site is antipodal (a single-site cone): route through
  // the smallest-index region node off the polar axis.
  for (int via : region.interior()) {
    const double leg = geodesic_distance(grid.node(node), grid.node(via));
    if (leg > 1e-9 && leg < M_PI - 1e-9) {
      return evaluate(candidates.front(), via);
    }
  }
  throw AmbiguousGeodesicError(
      "geodesic_certificate: no unambiguous arc to any optimal site");
}

LocalityReport is_locally_eikonal(const ScalarField& field, double ball_radius,
                                  EikonalDirection direction) {
  if (!field.is_finite()) {
    throw std::invalid_argument("is_locally_eikonal: field is infinite");
  }
  const Region& region = field.region();
  const SphereGrid& grid = region.grid();
  const double h = grid.resolution();
  if (ball_radius < 2.0 * h) {
    throw std::invalid_argument(
        "is_locally_eikonal: ball_radius below 2 * resolution_h");
  }

  // Greedy maximal h-separated center set, ascending node index.
  std::vector<int> centers;
  for (int v : region.interior()) {
    bool separated = true;
    for (int c : centers) {
      if (geodesic_distance(grid.node(v), grid.node(c)) < h) {
        separated = false;
        break;
      }
    }
    if (separated) centers.push_back(v);
  }

  LocalityReport report;
  for (int c : centers) {
    std::vector<int> ball;
    for (int v : region.interior()) {
      if (geodesic_distance(grid.node(v), grid.node(c)) < ball_radius) {
        ball.push_back(v);
      }
    }
    if (ball.empty()) continue;
    Region sub(region.grid_ptr(), std::move(ball));
    if (sub.boundary().empty()) continue;  // ball swallowed the region
    std::vector<Site> sites;
    sites.reserve(sub.boundary().size());
    for (int b : sub.boundary()) sites.push_back({b, field.value(b)});
    const ScalarField local = direction == EikonalDirection::future
                                  ? lower_envelope(sites, sub)
                                  : upper_envelope(sites, sub);
    for (size_t i = 0; i < sub.interior().size(); ++i) {
      const double dev = std::abs(local.interior_value(static_cast<int>(i)) -
                                  field.value(sub.interior()[i]));
      if (dev > report.max_deviation) report.max_deviation = dev;
      if (dev > 2.0 * h && report.pass) {
        report.pass = false;
        report.witness_center = c;
      }
    }
  }
  return report;
}

}  // namespace eincausal
