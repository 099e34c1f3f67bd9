#pragma once

#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace eincausal {

/// Absolute tolerance separating the causal relation classes. All inputs
/// are O(1) radians, so a single absolute tolerance is meaningful.
inline constexpr double kDefaultTol = 1e-9;

/// A point of the round sphere S^{n-1}, n-1 in {1,2}, stored as a unit
/// vector in R^n. Inputs are normalized on construction.
class UnitPoint {
 public:
  /// Throws std::invalid_argument unless coords has length 2 or 3 and
  /// nonzero norm.
  explicit UnitPoint(std::vector<double> coords);

  /// Ambient dimension n (2 or 3); the sphere dimension is n-1.
  int ambient_dim() const { return static_cast<int>(coords_.size()); }
  int sphere_dim() const { return ambient_dim() - 1; }

  double operator[](int i) const { return coords_[static_cast<size_t>(i)]; }
  const std::vector<double>& coords() const { return coords_; }

  UnitPoint antipode() const;

  /// Euclidean inner product; throws on dimension mismatch.
  double dot(const UnitPoint& other) const;

 private:
  std::vector<double> coords_;
};

/// Geodesic distance on the round sphere, arccos of the clamped inner
/// product. Radians in [0, pi]. Throws std::invalid_argument on
/// dimension mismatch.
double geodesic_distance(const UnitPoint& a, const UnitPoint& b);

/// Point at arc length s from a along the minimizing great circle toward
/// b. Requires 0 <= s <= geodesic_distance(a, b). Throws
/// AmbiguousGeodesicError for antipodal endpoints with 0 < s < pi.
UnitPoint trace_geodesic(const UnitPoint& a, const UnitPoint& b, double s);

struct GraphEdge {
  int to;
  double length;
};
/// adjacency[v] lists the weighted edges out of v; symmetric by
/// construction everywhere in this library.
using Adjacency = std::vector<std::vector<GraphEdge>>;

/// Generating recipe of a grid. Serialized form:
///   {"kind":"circle","n":256}
///   {"kind":"icosphere","subdivisions":3}
///   {"kind":"custom","nodes":[[..],..],"edges":[[i,j],..]}
struct GridSpec {
  enum class Kind { circle, icosphere, custom };

  Kind kind = Kind::circle;
  int n = 0;             // circle: node count
  int subdivisions = 0;  // icosphere
  std::vector<std::vector<double>> nodes;     // custom
  std::vector<std::pair<int, int>> edges;     // custom

  static GridSpec circle(int n);
  static GridSpec icosphere(int subdivisions);
  static GridSpec custom(std::vector<std::vector<double>> nodes,
                         std::vector<std::pair<int, int>> edges);

  bool operator==(const GridSpec&) const = default;
};

/// Discretized round sphere: indexed unit points, adjacency with exact
/// geodesic edge lengths, and the generating recipe. Node indexing is
/// 0-based and stable across runs. Immutable after construction.
class SphereGrid {
 public:
  /// Deterministic for a fixed spec. Throws std::invalid_argument on
  /// malformed specs (circle n < 3, bad custom data, disconnected).
  static SphereGrid build(const GridSpec& spec);

  int size() const { return static_cast<int>(nodes_.size()); }
  /// Sphere dimension (1 or 2).
  int dim() const { return nodes_.front().sphere_dim(); }

  const UnitPoint& node(int i) const { return nodes_[static_cast<size_t>(i)]; }
  const std::vector<UnitPoint>& nodes() const { return nodes_; }
  const Adjacency& adjacency() const { return adjacency_; }
  /// Undirected edge list, i < j, with exact geodesic lengths.
  const std::vector<std::tuple<int, int, double>>& edges() const {
    return edges_;
  }

  /// Maximum edge length in radians.
  double resolution() const { return resolution_h_; }
  const GridSpec& spec() const { return spec_; }

  /// Antipodal node permutation when the grid is antipode-closed
  /// (circle with even n, icospheres), otherwise nullopt.
  const std::optional<std::vector<int>>& antipode_map() const {
    return antipode_;
  }

  /// Index of the node closest to p (smallest index on ties).
  int nearest_node(const UnitPoint& p) const;
  /// Like nearest_node but throws ResolutionError when the nearest node
  /// is farther than max_distance.
  int nearest_node_within(const UnitPoint& p, double max_distance) const;

  bool operator==(const SphereGrid& other) const;

 private:
  SphereGrid() = default;

  GridSpec spec_;
  std::vector<UnitPoint> nodes_;
  Adjacency adjacency_;
  std::vector<std::tuple<int, int, double>> edges_;
  double resolution_h_ = 0.0;
  std::optional<std::vector<int>> antipode_;
};

/// Multi-source shortest-path distances: for every node v, the minimum
/// over sources s of offsets[s] + (shortest path length s -> v). Ties
/// broken by smallest node index; deterministic. Throws
/// std::invalid_argument on an empty source set or non-finite offsets.
std::vector<double> graph_distance(const SphereGrid& grid,
                                   std::span<const int> sources,
                                   std::span<const double> offsets);

namespace detail {
/// Dijkstra over an explicit adjacency; shared by SphereGrid and the
/// immersed-base machinery.
std::vector<double> multi_source_dijkstra(const Adjacency& adjacency,
                                          std::span<const int> sources,
                                          std::span<const double> offsets);
bool is_connected(const Adjacency& adjacency);
}  // namespace detail

}  // namespace eincausal
