#pragma once

#include <memory>
#include <vector>

#include "eincausal/domains.hpp"

namespace eincausal {

/// A closed achronal set given site-wise: the graph of a 1-Lipschitz
/// function over a finite node set Lambda_0.
class AchronalSet {
 public:
  AchronalSet(std::shared_ptr<const SphereGrid> grid, std::vector<Site> sites);

  const SphereGrid& grid() const { return *grid_; }
  const std::shared_ptr<const SphereGrid>& grid_ptr() const { return grid_; }
  /// Sites sorted by node index, duplicates removed.
  const std::vector<Site>& sites() const { return sites_; }

 private:
  std::shared_ptr<const SphereGrid> grid_;
  std::vector<Site> sites_;
};

struct PairDiagnostic {
  int node_a = -1;
  int node_b = -1;
  double distance = 0.0;
  double time_gap = 0.0;
};

struct AchronalityReport {
  bool pass = true;
  std::vector<PairDiagnostic> violations;
};

/// Achronal: no site pair chronologically related (d >= |dv| - 1e-12).
AchronalityReport check_achronal(const AchronalSet& set);
/// Acausal: no site pair causally related (strict d > |dv|).
AchronalityReport check_acausal(const AchronalSet& set, double tol = kDefaultTol);

/// The dual by the inf/sup envelope formula: the domain over the
/// complement of Lambda_0 with f+ the lower and f- the upper envelope of
/// the sites, Lambda_0 carried as the boundary trace. Throws
/// std::invalid_argument for empty or non-achronal input.
CausalDomain dual_by_formula(const AchronalSet& set);

struct SampledPoint {
  int node = -1;
  double t = 0.0;
};

/// The dual by definition: exhaustive scan of (node, k * time_step) over
/// the slab [min f - pi, max f + pi], keeping the points non-causally
/// related to every site.
std::vector<SampledPoint> dual_by_definition(const AchronalSet& set,
                                             double time_step,
                                             double tol = kDefaultTol);

/// Klein-model membership test: q_form(to_klein p, to_klein site) < 0
/// for all sites.
bool klein_dual_test(const AchronalSet& set, const CoverPoint& p);

}  // namespace eincausal
