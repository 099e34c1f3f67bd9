#include "eincausal/duality.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace eincausal {

AchronalSet::AchronalSet(std::shared_ptr<const SphereGrid> grid,
                         std::vector<Site> sites)
    : grid_(std::move(grid)), sites_(std::move(sites)) {
  for (const Site& s : sites_) {
    if (s.node < 0 || s.node >= grid_->size()) {
      throw std::invalid_argument("AchronalSet: site node out of range");
    }
    if (!std::isfinite(s.value)) {
      throw std::invalid_argument("AchronalSet: non-finite site value");
    }
  }
  std::sort(sites_.begin(), sites_.end(), [](const Site& a, const Site& b) {
    return a.node != b.node ? a.node < b.node : a.value < b.value;
  });
  sites_.erase(std::unique(sites_.begin(), sites_.end(),
                           [](const Site& a, const Site& b) {
                             return a.node == b.node && a.value == b.value;
                           }),
               sites_.end());
}

namespace {

AchronalityReport check_pairs(const AchronalSet& set, bool strict, double tol) {
  AchronalityReport report;
  const auto& sites = set.sites();
  for (size_t i = 0; i < sites.size(); ++i) {
    for (size_t j = i + 1; j < sites.size(); ++j) {
      const double dist = geodesic_distance(set.grid().node(sites[i].node),
                                            set.grid().node(sites[j].node));
      const double gap = std::abs(sites[i].value - sites[j].value);
      const bool ok = strict ? dist > gap + tol : dist >= gap - 1e-12;
      if (!ok) {
        report.pass = false;
        report.violations.push_back(
            {sites[i].node, sites[j].node, dist, gap});
      }
    }
  }
  return report;
}

}  // namespace

AchronalityReport check_achronal(const AchronalSet& set) {
  return check_pairs(set, false, 0.0);
}

AchronalityReport check_acausal(const AchronalSet& set, double tol) {
  return check_pairs(set, true, tol);
}

CausalDomain dual_by_formula(const AchronalSet& set) {
  if (set.sites().empty()) {
    throw std::invalid_argument("dual_by_formula: empty achronal set");
  }
  if (!check_achronal(set).pass) {
    throw std::invalid_argument("dual_by_formula: set is not achronal");
  }
  const SphereGrid& grid = set.grid();
  std::vector<char> is_site(static_cast<size_t>(grid.size()), 0);
  for (const Site& s : set.sites()) is_site[static_cast<size_t>(s.node)] = 1;
  std::vector<int> interior;
  std::vector<int> boundary;
  for (int v = 0; v < grid.size(); ++v) {
    (is_site[static_cast<size_t>(v)] ? boundary : interior).push_back(v);
  }
  Region region(set.grid_ptr(), std::move(interior), std::move(boundary));
  ScalarField f_plus = lower_envelope(set.sites(), region);
  ScalarField f_minus = upper_envelope(set.sites(), region);
  return CausalDomain(std::move(f_minus), std::move(f_plus));
}

std::vector<SampledPoint> dual_by_definition(const AchronalSet& set,
                                             double time_step, double tol) {
  if (set.sites().empty()) {
    throw std::invalid_argument("dual_by_definition: empty achronal set");
  }
  if (time_step <= 0.0) {
    throw std::invalid_argument("dual_by_definition: time_step must be > 0");
  }
  const SphereGrid& grid = set.grid();
  double lo = HUGE_VAL, hi = -HUGE_VAL;
  for (const Site& s : set.sites()) {
    lo = std::min(lo, s.value);
    hi = std::max(hi, s.value);
  }
  lo -= M_PI;
  hi += M_PI;

  std::vector<SampledPoint> kept;
  const int k_min = static_cast<int>(std::ceil(lo / time_step));
  const int k_max = static_cast<int>(std::floor(hi / time_step));
  for (int v = 0; v < grid.size(); ++v) {
    std::vector<double> dist(set.sites().size());
    for (size_t i = 0; i < set.sites().size(); ++i) {
      dist[i] = geodesic_distance(grid.node(v),
                                  grid.node(set.sites()[i].node));
    }
    for (int k = k_min; k <= k_max; ++k) {
      const double t = k * time_step;
      bool unrelated_to_all = true;
      for (size_t i = 0; i < set.sites().size() && unrelated_to_all; ++i) {
        unrelated_to_all =
            dist[i] > std::abs(t - set.sites()[i].value) + tol;
      }
      if (unrelated_to_all) kept.push_back({v, t});
    }
  }
  return kept;
}

bool klein_dual_test(const AchronalSet& set, const CoverPoint& p) {
  const KleinVector kp = to_klein(p);
  for (const Site& s : set.sites()) {
    const KleinVector ks =
        to_klein(CoverPoint(set.grid().node(s.node), s.value));
    if (!(q_form(kp, ks) < 0.0)) return false;
  }
  return true;
}

}  // namespace eincausal
