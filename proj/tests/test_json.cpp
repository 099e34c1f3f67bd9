#include "eincausal/json_io.hpp"

#include <cmath>
#include <doctest.h>

#include "eincausal/maximality.hpp"
#include "eincausal/rng.hpp"
#include "support/test_util.hpp"

using namespace eincausal;
using eincausal::testing::circle_grid;
using eincausal::testing::minkowski_chart;
using eincausal::testing::random_validated_domain;

TEST_CASE("grid spec round trip") {
  for (const std::string text :
       {R"({"kind":"circle","n":256})",
        R"({"kind":"icosphere","subdivisions":3})"}) {
    const GridSpec spec = grid_spec_from_json(text);
    CHECK(grid_spec_from_json(to_json(spec)) == spec);
  }
  const GridSpec custom = grid_spec_from_json(
      R"({"kind":"custom","nodes":[[1,0],[0,1],[-1,0]],"edges":[[0,1],[1,2],[2,0]]})");
  CHECK(grid_spec_from_json(to_json(custom)) == custom);
  CHECK_THROWS_AS(grid_spec_from_json(R"({"kind":"torus"})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(grid_spec_from_json("not json"), std::invalid_argument);
}

TEST_CASE("cover point round trip") {
  const CoverPoint p = cover_point_from_json(R"({"x":[0.6,0.8],"t":1.25})");
  CHECK(p.t == 1.25);
  const CoverPoint q = cover_point_from_json(to_json(p));
  CHECK(q.x.coords() == p.x.coords());
  CHECK(q.t == p.t);
}

TEST_CASE("field round trip preserves values bitwise") {
  const auto grid = circle_grid(32);
  Rng rng(151);
  std::vector<int> interior;
  for (int v = 0; v < 32; ++v) {
    if (grid->node(v)[0] > 0) interior.push_back(v);
  }
  Region region(grid, interior);
  std::vector<double> values(region.interior().size());
  for (double& v : values) v = rng.uniform(-1.0, 1.0);
  std::vector<double> trace(region.boundary().size());
  for (double& v : trace) v = rng.uniform(-1.0, 1.0);
  const ScalarField field = ScalarField::finite(region, values, trace);

  const ScalarField back = field_from_json(to_json(field), grid);
  CHECK(back == field);

  const ScalarField inf = ScalarField::infinite(region, FieldInfinity::minus);
  CHECK(field_from_json(to_json(inf), grid) == inf);
}

TEST_CASE("domain round trip re-validates and compares equal") {
  Rng rng(157);
  const auto grid = circle_grid(64);
  for (int trial = 0; trial < 5; ++trial) {
    const CausalDomain dom = random_validated_domain(grid, rng);
    const std::string text = to_json(dom);
    const CausalDomain back = domain_from_json(text);
    CHECK(back == dom);
    CHECK(validate_domain(back).pass);
    // byte-identical re-emission
    CHECK(to_json(back) == text);
  }
  // full-space domains round trip through the "inf" form
  const MaximalizeResult full =
      maximalize(eincausal::testing::band_domain(grid, 0.0, M_PI));
  CHECK(domain_from_json(to_json(full.domain)) == full.domain);
}

TEST_CASE("surface and achronal set round trip") {
  const auto grid = circle_grid(64);
  const SurfaceGraph s = eincausal::testing::half_circle_surface(grid);
  const SurfaceGraph back = surface_from_json(to_json(s));
  CHECK(back.h() == s.h());

  const AchronalSet set(grid, {{0, 0.25}, {16, -0.5}});
  const AchronalSet round = achronal_set_from_json(to_json(set));
  CHECK(round.sites().size() == 2);
  CHECK(round.sites()[0].node == 0);
  CHECK(round.sites()[0].value == 0.25);
  CHECK(round.grid() == set.grid());
}

TEST_CASE("base and base-domain round trip") {
  const ImmersedBase helix = make_helix_base(M_PI / 16, 2);
  const auto back = base_from_json(to_json(helix));
  CHECK(back->size() == helix.size());
  CHECK(back->r_inj() == helix.r_inj());
  CHECK(back->truncated_ends());
  for (int v = 0; v < helix.size(); ++v) {
    CHECK(back->image(v).coords() == helix.image(v).coords());
  }

  std::vector<int> interior;
  for (int v = 10; v < 20; ++v) interior.push_back(v);
  BaseRegion region(back, interior);
  BaseDomain dom{region,
                 BaseField{FieldInfinity::none,
                           std::vector<double>(region.interior().size(), -0.1),
                           std::vector<double>(region.boundary().size(), 0.0)},
                 BaseField{FieldInfinity::none,
                           std::vector<double>(region.interior().size(), 0.1),
                           std::vector<double>(region.boundary().size(), 0.0)}};
  const BaseDomain round = base_domain_from_json(to_json(dom), back);
  CHECK(round.f_plus == dom.f_plus);
  CHECK(round.f_minus == dom.f_minus);
  CHECK(round.region == dom.region);

  const EPoint p = epoint_from_json(R"({"node":3,"t":-0.5})");
  CHECK(p.base_node == 3);
  CHECK(epoint_from_json(to_json(p)).t == p.t);
}

TEST_CASE("emission is deterministic") {
  Rng rng(163);
  const auto grid = circle_grid(64);
  const CausalDomain dom = random_validated_domain(grid, rng);
  CHECK(to_json(dom) == to_json(dom));
  const CausalDomain copy = domain_from_json(to_json(dom));
  CHECK(to_json(copy) == to_json(dom));
}
