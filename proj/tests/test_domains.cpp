#include "eincausal/domains.hpp"

#include <cmath>
#include <doctest.h>

#include "eincausal/duality.hpp"
#include "eincausal/errors.hpp"
#include "eincausal/rng.hpp"
#include "support/test_util.hpp"

using namespace eincausal;
using eincausal::testing::band_domain;
using eincausal::testing::circle_grid;
using eincausal::testing::circle_node;
using eincausal::testing::half_circle_surface;
using eincausal::testing::icosphere_grid;
using eincausal::testing::minkowski_chart;
using eincausal::testing::random_validated_domain;

namespace {

bool has_code(const ValidationReport& report, DiagnosticCode code) {
  for (const auto& issue : report.issues) {
    if (issue.code == code) return true;
  }
  return false;
}

SurfaceGraph midpoint_surface(const CausalDomain& dom) {
  const Region& region = dom.region();
  std::vector<double> values(region.interior().size());
  for (size_t i = 0; i < values.size(); ++i) {
    values[i] = 0.5 * (dom.f_plus().interior_value(static_cast<int>(i)) +
                       dom.f_minus().interior_value(static_cast<int>(i)));
  }
  std::vector<double> trace(region.boundary().size());
  for (size_t i = 0; i < trace.size(); ++i) {
    trace[i] = 0.5 * (dom.f_plus().trace_value(static_cast<int>(i)) +
                      dom.f_minus().trace_value(static_cast<int>(i)));
  }
  return SurfaceGraph(
      ScalarField::finite(region, std::move(values), std::move(trace)));
}

}  // namespace

TEST_CASE("minkowski chart validates") {
  const auto grid = circle_grid(64);
  const CausalDomain chart = minkowski_chart(grid, 0);
  CHECK(validate_domain(chart).pass);
}

TEST_CASE("validation diagnostics carry codes") {
  const auto grid = circle_grid(64);
  const CausalDomain chart = minkowski_chart(grid, 0);
  const Region& region = chart.region();

  // a bump of 1.0 on one node of f+ breaks the Lipschitz bound
  std::vector<double> bumped = chart.f_plus().interior_values();
  bumped[10] += 1.0;
  const CausalDomain broken(
      chart.f_minus(),
      ScalarField::finite(region, std::move(bumped),
                          chart.f_plus().boundary_trace()));
  const ValidationReport lip = validate_domain(broken);
  CHECK_FALSE(lip.pass);
  CHECK(has_code(lip, DiagnosticCode::lipschitz_fail));

  // shifted trace on f+ only: TRACE_MISMATCH
  const CausalDomain shifted(
      chart.f_minus(),
      ScalarField::finite(region, chart.f_plus().interior_values(), {0.5}),
      0.1);
  const ValidationReport tr = validate_domain(shifted);
  CHECK_FALSE(tr.pass);
  CHECK(has_code(tr, DiagnosticCode::trace_mismatch));

  // f- above f+: ORDER_FAIL
  const CausalDomain inverted(chart.f_plus(), chart.f_plus());
  CHECK(has_code(validate_domain(inverted), DiagnosticCode::order_fail));

  // one infinite side over a region with boundary: MIXED_INFINITY
  const CausalDomain mixed(ScalarField::infinite(region, FieldInfinity::minus),
                           chart.f_plus());
  CHECK(has_code(validate_domain(mixed), DiagnosticCode::mixed_infinity));
}

TEST_CASE("band and full-space domains validate") {
  const auto grid = circle_grid(32);
  CHECK(validate_domain(band_domain(grid, 0.0, M_PI)).pass);

  std::vector<int> all(32);
  for (int i = 0; i < 32; ++i) all[static_cast<size_t>(i)] = i;
  const Region whole(grid, all);
  const CausalDomain full(ScalarField::infinite(whole, FieldInfinity::minus),
                          ScalarField::infinite(whole, FieldInfinity::plus));
  CHECK(validate_domain(full).pass);
  CHECK(full.is_full_space());
}

TEST_CASE("containment uses the nearest node and strict fibers") {
  const auto grid = circle_grid(8);
  const CausalDomain chart = minkowski_chart(grid, 0);
  const UnitPoint quarter({0.0, 1.0});  // d = pi/2 from the apex
  CHECK(contains(chart, CoverPoint(quarter, 0.0)));
  CHECK_FALSE(contains(chart, CoverPoint(quarter, M_PI / 2)));  // boundary
  CHECK_FALSE(contains(chart, CoverPoint(grid->node(0), 0.0)));  // over apex

  // a face center of the coarse icosphere is deeper than resolution/2
  const auto ico = icosphere_grid(0);
  const CausalDomain ico_chart = minkowski_chart(ico, 0);
  std::vector<double> center(3, 0.0);
  for (int v : {0, 11, 5}) {
    for (int k = 0; k < 3; ++k) center[static_cast<size_t>(k)] += ico->node(v)[k];
  }
  CHECK_THROWS_AS(contains(ico_chart, CoverPoint(UnitPoint(center), 0.0)),
                  ResolutionError);
}

TEST_CASE("causal convexity oracle") {
  const auto grid = circle_grid(64);
  SUBCASE("minkowski chart passes") {
    CHECK_FALSE(
        causal_convexity_oracle(minkowski_chart(grid, 0), 100, 5).has_value());
  }
  SUBCASE("full space passes trivially") {
    std::vector<int> all(64);
    for (int i = 0; i < 64; ++i) all[static_cast<size_t>(i)] = i;
    const Region whole(grid, all);
    const CausalDomain full(ScalarField::infinite(whole, FieldInfinity::minus),
                            ScalarField::infinite(whole, FieldInfinity::plus));
    CHECK_FALSE(causal_convexity_oracle(full, 50, 5).has_value());
  }
  SUBCASE("union of two far-apart cones is caught") {
    // f+ = max of the two cones: the fibers over each apex pinch to a
    // single point, but the union keeps them tall. Not causally convex.
    const int apex_a = 0;
    const int apex_b = 32;
    std::vector<int> interior;
    for (int v = 0; v < grid->size(); ++v) {
      if (v != apex_a && v != apex_b) interior.push_back(v);
    }
    const Region region(grid, interior);
    std::vector<double> up(region.interior().size());
    std::vector<double> down(region.interior().size());
    for (size_t i = 0; i < up.size(); ++i) {
      const UnitPoint& x = grid->node(region.interior()[i]);
      up[i] = std::max(geodesic_distance(x, grid->node(apex_a)),
                       geodesic_distance(x, grid->node(apex_b)));
      down[i] = -up[i];
    }
    std::vector<double> trace_up(region.boundary().size());
    std::vector<double> trace_down(region.boundary().size());
    for (size_t i = 0; i < trace_up.size(); ++i) {
      const UnitPoint& x = grid->node(region.boundary()[i]);
      trace_up[i] = std::max(geodesic_distance(x, grid->node(apex_a)),
                             geodesic_distance(x, grid->node(apex_b)));
      trace_down[i] = -trace_up[i];
    }
    const CausalDomain bad(
        ScalarField::finite(region, std::move(down), std::move(trace_down)),
        ScalarField::finite(region, std::move(up), std::move(trace_up)));
    CHECK(has_code(validate_domain(bad), DiagnosticCode::trace_mismatch));
    CHECK(causal_convexity_oracle(bad, 200, 5).has_value());
  }
}

TEST_CASE("cauchy surface validation") {
  const auto grid = circle_grid(64);
  const CausalDomain chart = minkowski_chart(grid, 0);

  SUBCASE("midpoint surface passes with the curve oracle") {
    const SurfaceGraph mid = midpoint_surface(chart);
    const ValidationReport report = validate_cauchy_surface(chart, mid);
    CHECK(report.pass);
  }
  SUBCASE("h touching f+ is an order failure") {
    const SurfaceGraph top(chart.f_plus());
    CHECK(has_code(validate_cauchy_surface(chart, top),
                   DiagnosticCode::order_fail));
  }
  SUBCASE("slope-2 graph is a Lipschitz failure") {
    const CausalDomain band = band_domain(grid, 0.0, M_PI);
    const Region& region = band.region();
    std::vector<double> saw(region.interior().size());
    const double step = 2.0 * grid->resolution();  // slope 2 per edge
    for (size_t i = 0; i < saw.size(); ++i) {
      saw[i] = 0.5 + (i % 2 == 0 ? 0.0 : step);
    }
    const SurfaceGraph zigzag(
        ScalarField::finite(region, std::move(saw), {}));
    CHECK(has_code(validate_cauchy_surface(band, zigzag),
                   DiagnosticCode::lipschitz_fail));
  }
}

TEST_CASE("cauchy development of a graph") {
  SUBCASE("boundaryless graph develops to the full space") {
    const auto grid = circle_grid(32);
    std::vector<int> all(32);
    for (int i = 0; i < 32; ++i) all[static_cast<size_t>(i)] = i;
    const Region whole(grid, all);
    const SurfaceGraph s(ScalarField::finite(
        whole, std::vector<double>(whole.interior().size(), 0.0), {}));
    const DevelopmentResult dev = cauchy_development_of_graph(s);
    CHECK(dev.full_space);
    CHECK(dev.domain.is_full_space());
  }
  SUBCASE("half circle at height 0 develops to the double cone") {
    const auto grid = circle_grid(128);
    const SurfaceGraph s = half_circle_surface(grid);
    const DevelopmentResult dev = cauchy_development_of_graph(s);
    CHECK_FALSE(dev.full_space);
    for (int v : dev.domain.region().interior()) {
      const double theta = std::atan2(grid->node(v)[1], grid->node(v)[0]);
      const double expected = M_PI / 2 - std::abs(theta);
      CHECK(dev.domain.f_plus().value(v) ==
            doctest::Approx(expected).epsilon(1e-9));
      CHECK(dev.domain.f_minus().value(v) ==
            doctest::Approx(-expected).epsilon(1e-9));
    }
    CHECK(validate_domain(dev.domain).pass);
  }
  SUBCASE("null cone graphs degenerate on one side") {
    // h = t0 + d(x, x0) on a cap around x0 (a future light cone). The
    // upper envelope of its trace reproduces the cone: the development
    // degenerates to the graph on the past side, f- = h. The time mirror
    // h = t0 - d gives f+ = h.
    const auto grid = circle_grid(128);
    const int apex = 0;
    std::vector<int> cap;
    for (int v = 0; v < grid->size(); ++v) {
      if (geodesic_distance(grid->node(v), grid->node(apex)) < 0.5) {
        cap.push_back(v);
      }
    }
    const Region region(grid, cap);
    const double t0 = 0.25;
    std::vector<double> values(region.interior().size());
    std::vector<double> trace(region.boundary().size());
    for (size_t i = 0; i < values.size(); ++i) {
      values[i] = t0 + geodesic_distance(grid->node(region.interior()[i]),
                                         grid->node(apex));
    }
    for (size_t i = 0; i < trace.size(); ++i) {
      trace[i] = t0 + geodesic_distance(grid->node(region.boundary()[i]),
                                        grid->node(apex));
    }
    const SurfaceGraph cone(
        ScalarField::finite(region, values, trace));
    const DevelopmentResult dev = cauchy_development_of_graph(cone);
    CHECK(dev.touches_graph);
    for (size_t i = 0; i < region.interior().size(); ++i) {
      CHECK(dev.domain.f_minus().interior_value(static_cast<int>(i)) ==
            doctest::Approx(values[i]).epsilon(1e-9));
    }

    std::vector<double> mirrored(values.size());
    for (size_t i = 0; i < values.size(); ++i) mirrored[i] = -values[i];
    std::vector<double> mirrored_trace(trace.size());
    for (size_t i = 0; i < trace.size(); ++i) mirrored_trace[i] = -trace[i];
    const SurfaceGraph past_cone(ScalarField::finite(
        region, std::move(mirrored), std::move(mirrored_trace)));
    const DevelopmentResult mirror_dev = cauchy_development_of_graph(past_cone);
    for (size_t i = 0; i < region.interior().size(); ++i) {
      CHECK(mirror_dev.domain.f_plus().interior_value(static_cast<int>(i)) ==
            doctest::Approx(-values[i]).epsilon(1e-9));
    }
  }
}

TEST_CASE("development commutes with time reflection exactly") {
  const auto grid = circle_grid(64);
  Rng rng(71);
  const SurfaceGraph s = [&] {
    std::vector<int> interior;
    for (int v = 0; v < grid->size(); ++v) {
      if (grid->node(v)[0] > kDefaultTol) interior.push_back(v);
    }
    Region region(grid, std::move(interior));
    std::vector<Site> sites;
    for (int k = 0; k < 4; ++k) {
      sites.push_back({region.interior()[static_cast<size_t>(rng.uniform_int(
                          0, static_cast<int>(region.interior().size()) - 1))],
                       rng.uniform(-0.3, 0.3)});
    }
    for (int b : region.boundary()) sites.push_back({b, 0.0});
    return SurfaceGraph(lower_envelope(sites, region));
  }();

  std::vector<double> neg_values(s.h().interior_values());
  for (double& v : neg_values) v = -v;
  std::vector<double> neg_trace(s.h().boundary_trace());
  for (double& v : neg_trace) v = -v;
  const SurfaceGraph reflected(ScalarField::finite(
      s.region(), std::move(neg_values), std::move(neg_trace)));

  const DevelopmentResult dev = cauchy_development_of_graph(s);
  const DevelopmentResult mirror = cauchy_development_of_graph(reflected);
  for (size_t i = 0; i < s.region().interior().size(); ++i) {
    const int idx = static_cast<int>(i);
    CHECK(mirror.domain.f_plus().interior_value(idx) ==
          -dev.domain.f_minus().interior_value(idx));
    CHECK(mirror.domain.f_minus().interior_value(idx) ==
          -dev.domain.f_plus().interior_value(idx));
  }
}

TEST_CASE("development curve oracle") {
  const auto grid = circle_grid(128);
  const SurfaceGraph s = half_circle_surface(grid);
  const DevelopmentResult dev = cauchy_development_of_graph(s);

  SUBCASE("the development itself passes") {
    CHECK_FALSE(
        development_curve_oracle(s, dev.domain, 50, 17, 30).has_value());
  }
  SUBCASE("an inflated claim is refuted") {
    const Region& region = dev.domain.region();
    std::vector<double> up = dev.domain.f_plus().interior_values();
    for (double& v : up) v += 0.5;
    std::vector<double> up_trace = dev.domain.f_plus().boundary_trace();
    for (double& v : up_trace) v += 0.5;
    const CausalDomain inflated(
        dev.domain.f_minus(),
        ScalarField::finite(region, std::move(up), std::move(up_trace)));
    const auto witness = development_curve_oracle(s, inflated, 50, 17, 30);
    REQUIRE(witness.has_value());
    CHECK(witness->claimed_inside);
  }
  SUBCASE("full-space development passes vacuously outside") {
    std::vector<int> all(grid->size());
    for (int i = 0; i < grid->size(); ++i) all[static_cast<size_t>(i)] = i;
    const Region whole(grid, all);
    const SurfaceGraph flat(ScalarField::finite(
        whole, std::vector<double>(whole.interior().size(), 0.0), {}));
    const DevelopmentResult full = cauchy_development_of_graph(flat);
    CHECK_FALSE(
        development_curve_oracle(flat, full.domain, 40, 23, 20).has_value());
  }
}

TEST_CASE("conjugate pair detection") {
  const auto grid = circle_grid(64);
  SUBCASE("band taller than pi has witnesses") {
    const CausalDomain tall = band_domain(grid, 0.0, M_PI + 0.2);
    const auto witnesses = detect_conjugate_pairs(tall);
    REQUIRE_FALSE(witnesses.empty());
    // interval overlap (0, 0.2), witness at its midpoint
    CHECK(witnesses.front().t == doctest::Approx(0.1));
  }
  SUBCASE("de sitter band has none") {
    CHECK(detect_conjugate_pairs(band_domain(grid, 0.0, M_PI)).empty());
  }
  SUBCASE("minkowski chart has none") {
    CHECK(detect_conjugate_pairs(minkowski_chart(grid, 0)).empty());
  }
  SUBCASE("full space has witnesses") {
    std::vector<int> all(64);
    for (int i = 0; i < 64; ++i) all[static_cast<size_t>(i)] = i;
    const Region whole(grid, all);
    const CausalDomain full(ScalarField::infinite(whole, FieldInfinity::minus),
                            ScalarField::infinite(whole, FieldInfinity::plus));
    CHECK_FALSE(detect_conjugate_pairs(full).empty());
  }
  SUBCASE("odd circles are not antipode-closed") {
    const auto odd = circle_grid(9);
    CHECK_THROWS_AS(detect_conjugate_pairs(band_domain(odd, 0.0, 4.0)),
                    NotApplicableError);
  }
}

TEST_CASE("shadows") {
  const auto grid = circle_grid(128);
  std::vector<int> all(grid->size());
  for (int i = 0; i < grid->size(); ++i) all[static_cast<size_t>(i)] = i;
  const Region whole(grid, all);
  const SurfaceGraph s(ScalarField::finite(
      whole, std::vector<double>(whole.interior().size(), 0.0), {}));

  SUBCASE("shadow of a future point is the causal ball") {
    const auto nodes = shadow(CoverPoint(grid->node(0), M_PI / 2), s);
    for (int v : nodes) {
      CHECK(geodesic_distance(grid->node(v), grid->node(0)) <=
            M_PI / 2 + 1e-9);
    }
    // count: nodes within pi/2 of node 0 on circle{128}: 2*32 + 1
    CHECK(nodes.size() == 65);
  }
  SUBCASE("a point on the graph shadows to itself") {
    const auto nodes = shadow(CoverPoint(grid->node(5), 0.0), s);
    CHECK(nodes == std::vector<int>{5});
  }
  SUBCASE("shadow saturates at dt = pi") {
    const auto nodes = shadow(CoverPoint(grid->node(0), M_PI), s);
    CHECK(nodes.size() == static_cast<size_t>(grid->size()));
  }
}

TEST_CASE("shadows distinguish points over a proper subregion") {
  const auto grid = circle_grid(128);
  const SurfaceGraph s = half_circle_surface(grid);

  const CoverPoint p(grid->node(0), 0.4);
  const CoverPoint q(grid->node(4), 0.4);  // 4 edges away in space
  const ShadowComparison cmp = shadows_distinguish(p, q, s);
  CHECK(cmp.distinct);
  CHECK_FALSE(cmp.compact_region_warning);

  const ShadowComparison same = shadows_distinguish(p, p, s);
  CHECK_FALSE(same.distinct);

  // whole-grid region: warning emitted alongside the verdict
  std::vector<int> all(grid->size());
  for (int i = 0; i < grid->size(); ++i) all[static_cast<size_t>(i)] = i;
  const SurfaceGraph compact(ScalarField::finite(
      Region(grid, all), std::vector<double>(static_cast<size_t>(grid->size()), 0.0),
      {}));
  CHECK(shadows_distinguish(CoverPoint(grid->node(0), 0.4),
                            CoverPoint(grid->node(4), 0.4), compact)
            .compact_region_warning);

  CHECK_THROWS_AS(
      shadows_distinguish(p, CoverPoint(grid->node(4), -0.4), s),
      std::invalid_argument);
}

TEST_CASE("shadow monotonicity along causal pairs") {
  const auto grid = circle_grid(128);
  const SurfaceGraph s = half_circle_surface(grid);
  Rng rng(83);
  const auto& interior = s.region().interior();
  for (int trial = 0; trial < 100; ++trial) {
    const int np = interior[static_cast<size_t>(
        rng.uniform_int(0, static_cast<int>(interior.size()) - 1))];
    const int nq = interior[static_cast<size_t>(
        rng.uniform_int(0, static_cast<int>(interior.size()) - 1))];
    const CoverPoint p(grid->node(np), rng.uniform(0.05, 0.5));
    const double d = geodesic_distance(grid->node(np), grid->node(nq));
    const CoverPoint q(grid->node(nq), p.t + d + rng.uniform(0.001, 0.5));
    REQUIRE(is_causal_future(causal_relation(p, q)));
    const auto sp = shadow(p, s);
    const auto sq = shadow(q, s);
    for (int v : sp) {
      CHECK(std::binary_search(sq.begin(), sq.end(), v));
    }
  }
}

TEST_CASE("closure and boundary-disjointness of validated domains") {
  const auto grid = circle_grid(64);
  Rng rng(97);
  const double band = grid->resolution();
  for (int trial = 0; trial < 5; ++trial) {
    const CausalDomain dom = random_validated_domain(grid, rng);
    REQUIRE(validate_domain(dom).pass);
    const Region& region = dom.region();

    // closure: diamonds between boundary-graph points stay inside
    for (int rep = 0; rep < 10; ++rep) {
      const int xa = region.interior()[static_cast<size_t>(rng.uniform_int(
          0, static_cast<int>(region.interior().size()) - 1))];
      const int xb = region.interior()[static_cast<size_t>(rng.uniform_int(
          0, static_cast<int>(region.interior().size()) - 1))];
      const CoverPoint p(grid->node(xa), dom.f_minus().value(xa));
      const CoverPoint q(grid->node(xb), dom.f_plus().value(xb));
      if (causal_relation(p, q) != CausalRelation::chronological_future) {
        continue;
      }
      for (int v = 0; v < grid->size(); ++v) {
        const double lo =
            p.t + geodesic_distance(grid->node(v), p.x) + band / 2;
        const double hi =
            q.t - geodesic_distance(grid->node(v), q.x) - band / 2;
        for (double t = lo; t <= hi; t += band) {
          const bool inside_banded =
              region.is_interior(v)
                  ? (t > dom.f_minus().value(v) - band &&
                     t < dom.f_plus().value(v) + band)
                  : (region.is_boundary(v) &&
                     std::abs(t - dom.f_plus().value(v)) <= band);
          CHECK(inside_banded);
        }
      }
    }

    // boundary disjointness: J+ of an upper-graph point misses the domain
    for (int rep = 0; rep < 10; ++rep) {
      const int x = region.interior()[static_cast<size_t>(rng.uniform_int(
          0, static_cast<int>(region.interior().size()) - 1))];
      const CoverPoint p(grid->node(x), dom.f_plus().value(x));
      for (int v = 0; v < grid->size(); ++v) {
        if (!region.is_interior(v)) continue;
        const double start = p.t + geodesic_distance(grid->node(v), p.x);
        for (double t = start; t <= start + 1.0; t += 0.25) {
          const bool strictly_inside = t > dom.f_minus().value(v) + band &&
                                       t < dom.f_plus().value(v) - band;
          CHECK_FALSE(strictly_inside);
        }
      }
    }
  }
}

TEST_CASE("validated domains admit the midpoint Cauchy surface") {
  const auto grid = circle_grid(64);
  Rng rng(101);
  for (int trial = 0; trial < 3; ++trial) {
    const CausalDomain dom = random_validated_domain(grid, rng);
    REQUIRE(validate_domain(dom).pass);
    SurfaceValidationOptions opts;
    opts.curve_trials = 40;
    opts.seed = 7 + static_cast<uint64_t>(trial);
    CHECK(validate_cauchy_surface(dom, midpoint_surface(dom), opts).pass);
  }
}
