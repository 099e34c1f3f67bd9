#pragma once

#include <memory>
#include <span>
#include <vector>

#include "eincausal/sphere.hpp"

namespace eincausal {

/// A discrete region of a grid: an interior node set U_h together with
/// its boundary trace set. The boundary is the set of exterior nodes
/// adjacent to the interior; explicit constructions (duals) may carry
/// extra isolated boundary nodes, which must still be exterior.
class Region {
 public:
  /// Boundary computed as the exterior-adjacent node set.
  Region(std::shared_ptr<const SphereGrid> grid, std::vector<int> interior);
  /// Explicit boundary; must contain every exterior-adjacent node and be
  /// disjoint from the interior. Throws std::invalid_argument otherwise.
  Region(std::shared_ptr<const SphereGrid> grid, std::vector<int> interior,
         std::vector<int> boundary);

  const SphereGrid& grid() const { return *grid_; }
  const std::shared_ptr<const SphereGrid>& grid_ptr() const { return grid_; }

  /// Sorted interior node indices.
  const std::vector<int>& interior() const { return interior_; }
  /// Sorted boundary node indices.
  const std::vector<int>& boundary() const { return boundary_; }

  bool is_interior(int node) const { return kind_[static_cast<size_t>(node)] == 1; }
  bool is_boundary(int node) const { return kind_[static_cast<size_t>(node)] == 2; }
  bool in_region(int node) const { return kind_[static_cast<size_t>(node)] != 0; }

  /// Position of node within interior() (or boundary()), -1 if absent.
  int interior_index(int node) const;
  int boundary_index(int node) const;

  /// Empty interior marks the degenerate empty domain (duals of
  /// space-filling achronal sets).
  bool empty() const { return interior_.empty(); }
  bool covers_grid() const {
    return static_cast<int>(interior_.size()) == grid_->size();
  }

  bool operator==(const Region& other) const;

 private:
  void index_nodes();

  std::shared_ptr<const SphereGrid> grid_;
  std::vector<int> interior_;
  std::vector<int> boundary_;
  std::vector<char> kind_;  // 0 exterior, 1 interior, 2 boundary
  std::vector<int> interior_pos_;
  std::vector<int> boundary_pos_;
};

enum class FieldInfinity { none, plus, minus };

/// An extended-real function sampled on a region: finite values per
/// interior node plus an explicit boundary trace, or identically +/-
/// infinity (infinity is all-or-nothing; an infinite field carries no
/// trace).
class ScalarField {
 public:
  static ScalarField finite(Region region, std::vector<double> interior_values,
                            std::vector<double> boundary_trace);
  static ScalarField infinite(Region region, FieldInfinity sign);

  const Region& region() const { return region_; }
  bool is_finite() const { return inf_ == FieldInfinity::none; }
  FieldInfinity infinity() const { return inf_; }

  /// Value at an interior or boundary node. For infinite fields returns
  /// +/-HUGE_VAL; throws std::invalid_argument off-region.
  double value(int node) const;
  /// Interior value by position in region().interior().
  double interior_value(int pos) const { return values_[static_cast<size_t>(pos)]; }
  double trace_value(int pos) const { return trace_[static_cast<size_t>(pos)]; }

  const std::vector<double>& interior_values() const { return values_; }
  const std::vector<double>& boundary_trace() const { return trace_; }

  /// Same region and bitwise-equal values/trace.
  bool operator==(const ScalarField& other) const;

 private:
  ScalarField(Region region, FieldInfinity inf, std::vector<double> values,
              std::vector<double> trace);

  Region region_;
  FieldInfinity inf_;
  std::vector<double> values_;
  std::vector<double> trace_;
};

enum class LipschitzMode { edgewise, all_pairs };

struct LipschitzViolation {
  int node_a = 0;
  int node_b = 0;
  double difference = 0.0;
  double bound = 0.0;
};

struct LipschitzReport {
  bool pass = true;
  std::vector<LipschitzViolation> violations;
};

/// 1-Lipschitz validation of a finite field, including the boundary
/// trace. Edgewise compares along grid edges against length*(1+lip_tol);
/// all_pairs uses exact geodesic distances over all region node pairs.
/// Throws NotApplicableError on infinite fields. lip_tol < 0 selects the
/// default: resolution_h for edgewise, 1e-9 for all_pairs.
LipschitzReport check_lipschitz(const ScalarField& field, LipschitzMode mode,
                                double lip_tol = -1.0);

/// A weighted source of an envelope: the graph point (node, value).
struct Site {
  int node = 0;
  double value = 0.0;
};

enum class EnvelopeMetric { exact, graph };

/// McShane-type lower envelope g(x) = min over sites of
/// (value + distance(x, site)). Exact mode is the brute-force oracle
/// over geodesic distances; graph mode propagates multi-source shortest
/// paths and over-estimates. Empty sites produce the field == +infinity.
ScalarField lower_envelope(std::span<const Site> sites, const Region& targets,
                           EnvelopeMetric metric = EnvelopeMetric::exact);

/// Mirror of lower_envelope: g(x) = max over sites of (value - distance).
/// Empty sites produce the field == -infinity. Exactly anti-symmetric to
/// lower_envelope under value negation.
ScalarField upper_envelope(std::span<const Site> sites, const Region& targets,
                           EnvelopeMetric metric = EnvelopeMetric::exact);

}  // namespace eincausal
