#include "eincausal/fields.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "eincausal/errors.hpp"
#include "eincausal/parallel.hpp"

namespace eincausal {

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

void check_node_range(const std::vector<int>& nodes, int grid_size,
                      const char* what) {
  for (int n : nodes) {
    if (n < 0 || n >= grid_size) {
      throw std::invalid_argument(std::string(what) +
                                  ": node index out of range");
    }
  }
}

std::vector<int> exterior_adjacent(const SphereGrid& grid,
                                   const std::vector<char>& interior_mask) {
  std::vector<int> boundary;
  for (int v = 0; v < grid.size(); ++v) {
    if (interior_mask[static_cast<size_t>(v)]) continue;
    for (const GraphEdge& e : grid.adjacency()[static_cast<size_t>(v)]) {
      if (interior_mask[static_cast<size_t>(e.to)]) {
        boundary.push_back(v);
        break;
      }
    }
  }
  return boundary;
}

}  // namespace

Region::Region(std::shared_ptr<const SphereGrid> grid,
               std::vector<int> interior)
    : grid_(std::move(grid)), interior_(sorted_unique(std::move(interior))) {
  check_node_range(interior_, grid_->size(), "Region interior");
  std::vector<char> mask(static_cast<size_t>(grid_->size()), 0);
  for (int v : interior_) mask[static_cast<size_t>(v)] = 1;
  boundary_ = exterior_adjacent(*grid_, mask);
  index_nodes();
}

Region::Region(std::shared_ptr<const SphereGrid> grid,
               std::vector<int> interior, std::vector<int> boundary)
    : grid_(std::move(grid)),
      interior_(sorted_unique(std::move(interior))),
      boundary_(sorted_unique(std::move(boundary))) {
  check_node_range(interior_, grid_->size(), "Region interior");
  check_node_range(boundary_, grid_->size(), "Region boundary");
  std::vector<char> mask(static_cast<size_t>(grid_->size()), 0);
  for (int v : interior_) mask[static_cast<size_t>(v)] = 1;
  for (int v : boundary_) {
    if (mask[static_cast<size_t>(v)]) {
      throw std::invalid_argument("Region: boundary meets interior");
    }
  }
  for (int v : exterior_adjacent(*grid_, mask)) {
    if (!std::binary_search(boundary_.begin(), boundary_.end(), v)) {
      throw std::invalid_argument(
          "Region: boundary misses an exterior node adjacent to the interior");
    }
  }
  index_nodes();
}

void Region::index_nodes() {
  kind_.assign(static_cast<size_t>(grid_->size()), 0);
  interior_pos_.assign(static_cast<size_t>(grid_->size()), -1);
  boundary_pos_.assign(static_cast<size_t>(grid_->size()), -1);
  for (size_t i = 0; i < interior_.size(); ++i) {
    kind_[static_cast<size_t>(interior_[i])] = 1;
    interior_pos_[static_cast<size_t>(interior_[i])] = static_cast<int>(i);
  }
  for (size_t i = 0; i < boundary_.size(); ++i) {
    kind_[static_cast<size_t>(boundary_[i])] = 2;
    boundary_pos_[static_cast<size_t>(boundary_[i])] = static_cast<int>(i);
  }
}

int Region::interior_index(int node) const {
  return interior_pos_[static_cast<size_t>(node)];
}

int Region::boundary_index(int node) const {
  return boundary_pos_[static_cast<size_t>(node)];
}

bool Region::operator==(const Region& other) const {
  return *grid_ == *other.grid_ && interior_ == other.interior_ &&
         boundary_ == other.boundary_;
}

ScalarField::ScalarField(Region region, FieldInfinity inf,
                         std::vector<double> values, std::vector<double> trace)
    : region_(std::move(region)),
      inf_(inf),
      values_(std::move(values)),
      trace_(std::move(trace)) {}

ScalarField ScalarField::finite(Region region,
                                std::vector<double> interior_values,
                                std::vector<double> boundary_trace) {
  if (interior_values.size() != region.interior().size()) {
    throw std::invalid_argument("ScalarField: interior value count mismatch");
  }
  if (boundary_trace.size() != region.boundary().size()) {
    throw std::invalid_argument("ScalarField: boundary trace count mismatch");
  }
  for (double v : interior_values) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument(
          "ScalarField: non-finite interior value in a finite field");
    }
  }
  for (double v : boundary_trace) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("ScalarField: non-finite boundary trace");
    }
  }
  return ScalarField(std::move(region), FieldInfinity::none,
                     std::move(interior_values), std::move(boundary_trace));
}

ScalarField ScalarField::infinite(Region region, FieldInfinity sign) {
  if (sign == FieldInfinity::none) {
    throw std::invalid_argument("ScalarField::infinite: sign required");
  }
  return ScalarField(std::move(region), sign, {}, {});
}

double ScalarField::value(int node) const {
  if (inf_ == FieldInfinity::plus) return HUGE_VAL;
  if (inf_ == FieldInfinity::minus) return -HUGE_VAL;
  if (const int p = region_.interior_index(node); p >= 0) {
    return values_[static_cast<size_t>(p)];
  }
  if (const int p = region_.boundary_index(node); p >= 0) {
    return trace_[static_cast<size_t>(p)];
  }
  throw std::invalid_argument("ScalarField::value: node outside the region");
}

bool ScalarField::operator==(const ScalarField& other) const {
  return region_ == other.region_ && inf_ == other.inf_ &&
         values_ == other.values_ && trace_ == other.trace_;
}

LipschitzReport check_lipschitz(const ScalarField& field, LipschitzMode mode,
                                double lip_tol) {
  if (!field.is_finite()) {
    throw NotApplicableError("check_lipschitz: field is infinite");
  }
  const Region& region = field.region();
  const SphereGrid& grid = region.grid();
  if (lip_tol < 0.0) {
    lip_tol = mode == LipschitzMode::edgewise ? grid.resolution() : 1e-9;
  }
  LipschitzReport report;
  auto test_pair = [&](int a, int b, double dist) {
    const double diff = std::abs(field.value(a) - field.value(b));
    const double bound = dist * (1.0 + lip_tol);
    if (diff > bound) {
      report.pass = false;
      report.violations.push_back({a, b, diff, bound});
    }
  };
  if (mode == LipschitzMode::edgewise) {
    for (const auto& [i, j, len] : grid.edges()) {
      if (region.in_region(i) && region.in_region(j)) test_pair(i, j, len);
    }
  } else {
    std::vector<int> nodes(region.interior());
    nodes.insert(nodes.end(), region.boundary().begin(),
                 region.boundary().end());
    std::sort(nodes.begin(), nodes.end());
    for (size_t a = 0; a < nodes.size(); ++a) {
      for (size_t b = a + 1; b < nodes.size(); ++b) {
        test_pair(nodes[a], nodes[b],
                  geodesic_distance(grid.node(nodes[a]), grid.node(nodes[b])));
      }
    }
  }
  return report;
}

namespace {

// sign +1: min over sites of (value + dist); sign -1: max of (value - dist),
// computed as the exact negation of the +1 case so the two envelopes are
// bitwise mirror images.
ScalarField envelope(std::span<const Site> sites, const Region& targets,
                     EnvelopeMetric metric, int sign) {
  if (sites.empty()) {
    return ScalarField::infinite(
        targets, sign > 0 ? FieldInfinity::plus : FieldInfinity::minus);
  }
  const SphereGrid& grid = targets.grid();
  for (const Site& s : sites) {
    if (s.node < 0 || s.node >= grid.size()) {
      throw std::invalid_argument("envelope: site node out of range");
    }
    if (!std::isfinite(s.value)) {
      throw std::invalid_argument("envelope: non-finite site value");
    }
  }

  std::vector<double> at_node(static_cast<size_t>(grid.size()));
  if (metric == EnvelopeMetric::graph) {
    std::vector<int> source_nodes(sites.size());
    std::vector<double> offsets(sites.size());
    for (size_t k = 0; k < sites.size(); ++k) {
      source_nodes[k] = sites[k].node;
      offsets[k] = sign > 0 ? sites[k].value : -sites[k].value;
    }
    at_node = detail::multi_source_dijkstra(grid.adjacency(), source_nodes,
                                            offsets);
  } else {
    parallel_for(static_cast<size_t>(grid.size()), [&](size_t v) {
      double best = HUGE_VAL;
      for (const Site& s : sites) {
        const double dist =
            geodesic_distance(grid.node(static_cast<int>(v)), grid.node(s.node));
        const double cand = (sign > 0 ? s.value : -s.value) + dist;
        if (cand < best) best = cand;
      }
      at_node[v] = best;
    });
  }
  if (sign < 0) {
    for (double& v : at_node) v = -v;
  }

  std::vector<double> values(targets.interior().size());
  std::vector<double> trace(targets.boundary().size());
  for (size_t i = 0; i < values.size(); ++i) {
    values[i] = at_node[static_cast<size_t>(targets.interior()[i])];
  }
  for (size_t i = 0; i < trace.size(); ++i) {
    trace[i] = at_node[static_cast<size_t>(targets.boundary()[i])];
  }
  return ScalarField::finite(targets, std::move(values), std::move(trace));
}

}  // namespace

ScalarField lower_envelope(std::span<const Site> sites, const Region& targets,
                           EnvelopeMetric metric) {
  return envelope(sites, targets, metric, +1);
}

ScalarField upper_envelope(std::span<const Site> sites, const Region& targets,
                           EnvelopeMetric metric) {
  return envelope(sites, targets, metric, -1);
}

}  // namespace eincausal
