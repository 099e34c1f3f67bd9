#include "eincausal/maximality.hpp"

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
using eincausal::testing::icosphere_grid;
using eincausal::testing::minkowski_chart;
using eincausal::testing::random_validated_domain;

namespace {

// The thin strip of the is_maximal example: U = half circle,
// f+ = c * (pi/2 - |theta|), f- = -f+, trace 0 at +-pi/2.
CausalDomain thin_strip(std::shared_ptr<const SphereGrid> grid, double c) {
  std::vector<int> interior;
  for (int v = 0; v < grid->size(); ++v) {
    if (grid->node(v)[0] > kDefaultTol) interior.push_back(v);
  }
  Region region(grid, std::move(interior));
  std::vector<double> up(region.interior().size());
  std::vector<double> down(region.interior().size());
  for (size_t i = 0; i < up.size(); ++i) {
    const double theta = std::atan2(grid->node(region.interior()[i])[1],
                                    grid->node(region.interior()[i])[0]);
    up[i] = c * (M_PI / 2 - std::abs(theta));
    down[i] = -up[i];
  }
  std::vector<double> zero(region.boundary().size(), 0.0);
  ScalarField f_plus = ScalarField::finite(region, std::move(up), zero);
  ScalarField f_minus =
      ScalarField::finite(region, std::move(down), std::move(zero));
  return CausalDomain(std::move(f_minus), std::move(f_plus));
}

}  // namespace

TEST_CASE("eikonal envelopes of the minkowski chart are its own cones") {
  const auto grid = circle_grid(64);
  const CausalDomain chart = minkowski_chart(grid, 0);
  const auto [g_minus, g_plus] = eikonal_envelopes(chart);
  CHECK(g_plus == chart.f_plus());
  CHECK(g_minus == chart.f_minus());
}

TEST_CASE("eikonal envelopes on the half-circle strip") {
  const auto grid = circle_grid(128);
  const CausalDomain strip = thin_strip(grid, 0.3);
  const auto [g_minus, g_plus] = eikonal_envelopes(strip);
  for (int v : strip.region().interior()) {
    const double theta = std::atan2(grid->node(v)[1], grid->node(v)[0]);
    CHECK(g_plus.value(v) ==
          doctest::Approx(M_PI / 2 - std::abs(theta)).epsilon(1e-9));
  }
  CHECK(g_minus.value(circle_node(*grid, 0.0)) ==
        doctest::Approx(-M_PI / 2).epsilon(1e-9));
}

TEST_CASE("empty boundary yields infinite envelope flags") {
  const auto grid = circle_grid(32);
  const auto [g_minus, g_plus] = eikonal_envelopes(band_domain(grid, 0.0, 1.0));
  CHECK(g_minus.infinity() == FieldInfinity::minus);
  CHECK(g_plus.infinity() == FieldInfinity::plus);
}

TEST_CASE("conjugate pairs make the envelopes inapplicable") {
  const auto grid = circle_grid(32);
  CHECK_THROWS_AS(eikonal_envelopes(band_domain(grid, 0.0, M_PI + 0.2)),
                  NotApplicableError);
}

TEST_CASE("is_maximal verdicts") {
  const auto grid = circle_grid(64);
  CHECK(is_maximal(minkowski_chart(grid, 0)).kind == MaximalityKind::maximal);
  CHECK(is_maximal(band_domain(grid, 0.0, M_PI)).kind ==
        MaximalityKind::full_space);
  const MaximalityVerdict strip = is_maximal(thin_strip(grid, 0.3));
  CHECK(strip.kind == MaximalityKind::extendable);
  REQUIRE(strip.g_plus.has_value());
  for (int v : strip.g_plus->region().interior()) {
    const double theta = std::atan2(grid->node(v)[1], grid->node(v)[0]);
    CHECK(strip.g_plus->value(v) ==
          doctest::Approx(M_PI / 2 - std::abs(theta)).epsilon(1e-9));
  }

  std::vector<int> all(64);
  for (int i = 0; i < 64; ++i) all[static_cast<size_t>(i)] = i;
  const Region whole(grid, all);
  const CausalDomain full(ScalarField::infinite(whole, FieldInfinity::minus),
                          ScalarField::infinite(whole, FieldInfinity::plus));
  CHECK(is_maximal(full).kind == MaximalityKind::maximal);
}

TEST_CASE("maximalize fixed points and flags") {
  const auto grid = circle_grid(64);

  SUBCASE("the minkowski chart is a bitwise fixed point") {
    const CausalDomain chart = minkowski_chart(grid, 0);
    const MaximalizeResult out = maximalize(chart);
    CHECK_FALSE(out.full_space);
    CHECK(out.domain == chart);
  }
  SUBCASE("de sitter extends to the full space") {
    const MaximalizeResult out = maximalize(band_domain(grid, 0.0, M_PI));
    CHECK(out.full_space);
    CHECK(out.domain.is_full_space());
    CHECK(out.domain.region().covers_grid());
    CHECK(validate_domain(out.domain).pass);
  }
  SUBCASE("the thin strip extends to the dual of its boundary sites") {
    const MaximalizeResult out = maximalize(thin_strip(grid, 0.3));
    CHECK_FALSE(out.full_space);
    CHECK(validate_domain(out.domain).pass);
    CHECK(is_maximal(out.domain).kind == MaximalityKind::maximal);

    const CausalDomain dual = dual_by_formula(
        AchronalSet(grid, {{circle_node(*grid, M_PI / 2), 0.0},
                           {circle_node(*grid, -M_PI / 2), 0.0}}));
    // the strip is one connected component of the dual: bitwise field
    // agreement over the strip region
    for (int v : out.domain.region().interior()) {
      CHECK(out.domain.f_plus().value(v) == dual.f_plus().value(v));
      CHECK(out.domain.f_minus().value(v) == dual.f_minus().value(v));
    }
  }
}

TEST_CASE("maximalize is bitwise idempotent") {
  Rng rng(103);
  for (const auto& grid : {circle_grid(64), icosphere_grid(1)}) {
    for (int trial = 0; trial < 8; ++trial) {
      const CausalDomain dom = random_validated_domain(grid, rng);
      const MaximalizeResult once = maximalize(dom);
      const MaximalizeResult twice = maximalize(once.domain);
      CHECK(once.full_space == twice.full_space);
      CHECK(once.domain == twice.domain);
      CHECK(validate_domain(once.domain).pass);
    }
  }
}

TEST_CASE("envelopes dominate validated domains") {
  Rng rng(107);
  const auto grid = circle_grid(64);
  for (int trial = 0; trial < 8; ++trial) {
    const CausalDomain dom = random_validated_domain(grid, rng);
    if (!detect_conjugate_pairs(dom).empty() ||
        dom.region().boundary().empty()) {
      continue;
    }
    const auto [g_minus, g_plus] = eikonal_envelopes(dom);
    for (size_t i = 0; i < dom.region().interior().size(); ++i) {
      const int idx = static_cast<int>(i);
      CHECK(dom.f_plus().interior_value(idx) <=
            g_plus.interior_value(idx) + 1e-9);
      CHECK(dom.f_minus().interior_value(idx) >=
            g_minus.interior_value(idx) - 1e-9);
    }
  }
}

TEST_CASE("maximalize is monotone under domain inclusion") {
  Rng rng(109);
  const auto grid = circle_grid(64);
  const double tol = grid->resolution();
  for (int trial = 0; trial < 6; ++trial) {
    // B = dual of a site set; A = dual of a superset, shrunk inward
    const AchronalSet base_set = eincausal::testing::random_acausal_set(grid, 4, rng);
    const CausalDomain big = dual_by_formula(base_set);

    std::vector<Site> more = base_set.sites();
    for (int k = 0; k < 2; ++k) {
      for (int attempt = 0; attempt < 32; ++attempt) {
        const int node = rng.uniform_int(0, grid->size() - 1);
        if (!big.region().is_interior(node)) continue;
        const double lo = big.f_minus().value(node);
        const double hi = big.f_plus().value(node);
        if (hi - lo < 0.2) continue;
        const double margin = 0.05 * (hi - lo);
        more.push_back({node, rng.uniform(lo + margin, hi - margin)});
        break;
      }
    }
    const AchronalSet superset(grid, more);
    if (!check_achronal(superset).pass) continue;
    const CausalDomain small = dual_by_formula(superset);

    const MaximalizeResult max_a = maximalize(small);
    const MaximalizeResult max_b = maximalize(big);
    REQUIRE_FALSE(max_a.full_space);
    REQUIRE_FALSE(max_b.full_space);
    for (int v : max_a.domain.region().interior()) {
      REQUIRE(max_b.domain.region().is_interior(v));
      CHECK(max_a.domain.f_plus().value(v) <=
            max_b.domain.f_plus().value(v) + tol);
      CHECK(max_a.domain.f_minus().value(v) >=
            max_b.domain.f_minus().value(v) - tol);
    }
  }
}

TEST_CASE("geodesic certificates") {
  const auto grid = circle_grid(128);
  const double h = grid->resolution();

  SUBCASE("minkowski cone certifies at every node") {
    const CausalDomain chart = minkowski_chart(grid, 0);
    for (int v : chart.region().interior()) {
      const GeodesicCertificate cert =
          geodesic_certificate(chart.f_plus(), v, EikonalDirection::future);
      CHECK(cert.pass);
      CHECK(cert.residual <= 2 * h);
      CHECK(cert.site_node == 0);
      const GeodesicCertificate mirror =
          geodesic_certificate(chart.f_minus(), v, EikonalDirection::past);
      CHECK(mirror.pass);
    }
  }
  SUBCASE("a constant field with nonconstant trace fails") {
    // constant 0.8 over the half circle but trace 0: not eikonal
    std::vector<int> interior;
    for (int v = 0; v < grid->size(); ++v) {
      if (grid->node(v)[0] > kDefaultTol) interior.push_back(v);
    }
    Region region(grid, std::move(interior));
    const ScalarField flat = ScalarField::finite(
        region, std::vector<double>(region.interior().size(), 0.8),
        std::vector<double>(region.boundary().size(), 0.0));
    const GeodesicCertificate cert = geodesic_certificate(
        flat, circle_node(*grid, 0.0), EikonalDirection::future);
    CHECK_FALSE(cert.pass);
    CHECK(cert.residual > 2 * h);
  }
  SUBCASE("boundary-adjacent nodes pass trivially") {
    const CausalDomain chart = minkowski_chart(grid, 0);
    const GeodesicCertificate cert =
        geodesic_certificate(chart.f_plus(), 1, EikonalDirection::future);
    CHECK(cert.pass);
    CHECK(cert.path.size() <= 2);
  }
}

TEST_CASE("local eikonality") {
  const auto grid = circle_grid(128);
  const double h = grid->resolution();
  const CausalDomain chart = minkowski_chart(grid, 0);

  SUBCASE("globally eikonal fields are locally eikonal") {
    const LocalityReport report =
        is_locally_eikonal(chart.f_plus(), 8 * h, EikonalDirection::future);
    CHECK(report.pass);
    CHECK(is_locally_eikonal(chart.f_minus(), 8 * h, EikonalDirection::past)
              .pass);
  }
  SUBCASE("a hand-edited bump is localized") {
    std::vector<double> bumped = chart.f_plus().interior_values();
    const int victim = chart.region().interior_index(circle_node(*grid, M_PI / 2));
    REQUIRE(victim >= 0);
    bumped[static_cast<size_t>(victim)] -= 6 * h;  // dent inside one ball
    const ScalarField dented = ScalarField::finite(
        chart.region(), std::move(bumped), chart.f_plus().boundary_trace());
    const LocalityReport report =
        is_locally_eikonal(dented, 8 * h, EikonalDirection::future);
    CHECK_FALSE(report.pass);
    CHECK(report.witness_center >= 0);
    // the witness ball sees the bump through its interior or its trace,
    // so its center sits within ball_radius + one edge of the dent
    CHECK(geodesic_distance(grid->node(report.witness_center),
                            grid->node(circle_node(*grid, M_PI / 2))) <
          9 * h + 1e-9);
  }
  SUBCASE("constant fields fail away from the boundary") {
    std::vector<int> interior;
    for (int v = 0; v < grid->size(); ++v) {
      if (grid->node(v)[0] > kDefaultTol) interior.push_back(v);
    }
    Region region(grid, std::move(interior));
    const ScalarField flat = ScalarField::finite(
        region, std::vector<double>(region.interior().size(), 0.4),
        std::vector<double>(region.boundary().size(), 0.4));
    CHECK_FALSE(
        is_locally_eikonal(flat, 8 * h, EikonalDirection::future).pass);
  }
  SUBCASE("tiny radii are rejected") {
    CHECK_THROWS_AS(
        is_locally_eikonal(chart.f_plus(), h, EikonalDirection::future),
        std::invalid_argument);
  }
}

TEST_CASE("maximalize outputs certify at every node") {
  Rng rng(113);
  const auto grid = circle_grid(64);
  for (int trial = 0; trial < 4; ++trial) {
    const CausalDomain dom = random_validated_domain(grid, rng);
    const MaximalizeResult out = maximalize(dom);
    if (out.full_space) continue;
    for (int v : out.domain.region().interior()) {
      CHECK(geodesic_certificate(out.domain.f_plus(), v,
                                 EikonalDirection::future)
                .pass);
      CHECK(geodesic_certificate(out.domain.f_minus(), v,
                                 EikonalDirection::past)
                .pass);
    }
  }
}
