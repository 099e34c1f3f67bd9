#pragma once

#include <memory>
#include <vector>

#include "eincausal/cover.hpp"
#include "eincausal/fields.hpp"

namespace eincausal {

/// A graph immersed into the sphere: the discrete leaf space B with its
/// developing map (per-node sphere image). Edge lengths are the exact
/// geodesic distances of the endpoint images; r_inj declares the scale
/// below which the immersion is injective. The enveloping space over B
/// is E = B x R.
class ImmersedBase {
 public:
  /// Validates connectivity, edge length <= r_inj, and local
  /// injectivity (pairwise distinct images within graph distance r_inj
  /// of every node). Throws std::invalid_argument on failure.
  ImmersedBase(std::vector<UnitPoint> images,
               std::vector<std::pair<int, int>> edges, double r_inj,
               bool truncated_ends = false);

  int size() const { return static_cast<int>(images_.size()); }
  const UnitPoint& image(int node) const {
    return images_[static_cast<size_t>(node)];
  }
  const Adjacency& adjacency() const { return adjacency_; }
  double r_inj() const { return r_inj_; }
  /// Discretization scale of the base (maximum edge length).
  double max_edge_length() const { return max_edge_; }
  /// The base is a truncated window of an infinite cover (helix); its
  /// endpoints absorb envelope propagation.
  bool truncated_ends() const { return truncated_ends_; }

 private:
  std::vector<UnitPoint> images_;
  Adjacency adjacency_;
  double r_inj_;
  double max_edge_ = 0.0;
  bool truncated_ends_;
};

/// A point of the enveloping space E = B x R in the trivialization.
struct EPoint {
  int base_node = 0;
  double t = 0.0;
};

/// Shortest-path distance in the weighted base graph; the discrete
/// pull-back of the sphere metric through the immersion.
double base_distance(const ImmersedBase& base, int b1, int b2);
/// All distances from one node (single Dijkstra sweep).
std::vector<double> base_distances_from(const ImmersedBase& base, int b);

/// Causality in E: the sphere distance of the cover is replaced by the
/// base path metric, with a lightlike band of 2 * max_edge_length
/// absorbing the path-vs-geodesic slack. Fibers are timelike: points on
/// the same fiber are always chronologically related.
CausalRelation e_causal_relation(const ImmersedBase& base, const EPoint& p,
                                 const EPoint& q);

/// The projection E -> cover: (b, t) -> (image(b), t).
CoverPoint develop(const ImmersedBase& base, const EPoint& p);

/// The complement of one fiber: the enveloping space of Minkowski
/// spacetime. Nodes keep the grid order with `node` removed.
ImmersedBase make_sphere_minus_node_base(const SphereGrid& grid, int node);
/// The whole grid as its own base: the enveloping space of De Sitter.
ImmersedBase make_full_sphere_base(const SphereGrid& grid);
/// A segment of length 2*pi*turns immersed onto the circle with step h:
/// node i at angle -pi*turns + i*h. Non-injective for turns >= 1.
ImmersedBase make_helix_base(double h, int turns);

/// A region of the base: interior node set plus its exterior-adjacent
/// boundary.
class BaseRegion {
 public:
  BaseRegion(std::shared_ptr<const ImmersedBase> base,
             std::vector<int> interior);

  const ImmersedBase& base() const { return *base_; }
  const std::shared_ptr<const ImmersedBase>& base_ptr() const { return base_; }
  const std::vector<int>& interior() const { return interior_; }
  const std::vector<int>& boundary() const { return boundary_; }
  bool is_interior(int node) const { return kind_[static_cast<size_t>(node)] == 1; }
  bool in_region(int node) const { return kind_[static_cast<size_t>(node)] != 0; }

  bool operator==(const BaseRegion& other) const {
    return base_ == other.base_ && interior_ == other.interior_;
  }

 private:
  std::shared_ptr<const ImmersedBase> base_;
  std::vector<int> interior_;
  std::vector<int> boundary_;
  std::vector<char> kind_;
};

/// A sampled extended-real function on a base region; layout mirrors
/// ScalarField (values over interior(), trace over boundary()).
struct BaseField {
  FieldInfinity inf = FieldInfinity::none;
  std::vector<double> values;
  std::vector<double> trace;

  bool is_finite() const { return inf == FieldInfinity::none; }
  bool operator==(const BaseField&) const = default;
};

/// A causally convex domain of E over a base region.
struct BaseDomain {
  BaseRegion region;
  BaseField f_minus;
  BaseField f_plus;
};

enum class EMaximalizeStatus { ok, full_fiber, lipschitz_fail };

struct EMaximalizeResult {
  EMaximalizeStatus status = EMaximalizeStatus::ok;
  BaseDomain domain;
  /// Domain time-extent reaches the declared injectivity scale; the
  /// conjugate-free assumption may fail.
  bool time_extent_warning = false;
  /// The base is a truncated cover; envelopes near the cut ends absorb.
  bool truncated_ends = false;
  std::vector<LipschitzViolation> violations;
};

/// Maximalization in the enveloping space: replaces f+- by the envelopes
/// of the boundary trace computed with base_distance. An empty boundary
/// yields full fibers over the region. Fields failing the edgewise
/// 1-Lipschitz bound (w.r.t. base edges) abort with diagnostics.
EMaximalizeResult maximalize_in_E(const BaseDomain& dom);

}  // namespace eincausal
