#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eincausal/cover.hpp"
#include "eincausal/fields.hpp"

namespace eincausal {

/// A causally convex open domain Omega = {(x,t) : f-(x) < t < f+(x)}
/// over a grid region. Structural sanity is enforced at construction;
/// the semantic invariants (Lipschitz bounds, ordering, trace
/// coincidence) are checked by validate_domain.
class CausalDomain {
 public:
  CausalDomain(ScalarField f_minus, ScalarField f_plus,
               double coincidence_tol = kDefaultTol);

  const Region& region() const { return f_plus_.region(); }
  const ScalarField& f_minus() const { return f_minus_; }
  const ScalarField& f_plus() const { return f_plus_; }
  double coincidence_tol() const { return coincidence_tol_; }

  /// Both fields infinite: the domain is the whole cover over its region.
  bool is_full_space() const {
    return !f_minus_.is_finite() && !f_plus_.is_finite();
  }

  bool operator==(const CausalDomain& other) const {
    return f_minus_ == other.f_minus_ && f_plus_ == other.f_plus_;
  }

 private:
  ScalarField f_minus_;
  ScalarField f_plus_;
  double coincidence_tol_;
};

enum class DiagnosticCode {
  lipschitz_fail,
  order_fail,
  trace_mismatch,
  mixed_infinity,
  curve_crossing,
};

std::string to_string(DiagnosticCode code);

struct Diagnostic {
  DiagnosticCode code;
  int node_a = -1;
  int node_b = -1;
  double value = 0.0;
  std::string detail;
};

struct ValidationReport {
  bool pass = true;
  std::vector<Diagnostic> issues;
};

struct ValidationOptions {
  LipschitzMode lipschitz_mode = LipschitzMode::edgewise;
  double lip_tol = -1.0;  // negative: per-mode default
};

/// Checks every CausalDomain invariant: 1-Lipschitz fields, strict
/// ordering f- < f+ at interior nodes, boundary trace coincidence, and
/// rejection of a single infinite side against a nonempty boundary.
ValidationReport validate_domain(const CausalDomain& dom,
                                 const ValidationOptions& opts = {});

/// Membership test. p.x is matched to the nearest grid node within
/// resolution_h / 2 (ResolutionError beyond that).
bool contains(const CausalDomain& dom, const CoverPoint& p);

struct DiamondWitness {
  CoverPoint p;
  CoverPoint q;
  CoverPoint r;  // in the diamond J(p, q) but outside the domain
};

/// Brute-force causal-convexity check: samples chronological pairs
/// p, q inside the domain and scans all grid nodes x time steps of the
/// diamond J+(p) cap J-(q); every sample must lie in the domain up to a
/// boundary band of width resolution_h. Deterministic in (seed).
std::optional<DiamondWitness> causal_convexity_oracle(const CausalDomain& dom,
                                                      int sample_count,
                                                      uint64_t seed);

/// The graph of a finite 1-Lipschitz function over a region; a
/// candidate topological Cauchy hypersurface.
class SurfaceGraph {
 public:
  explicit SurfaceGraph(ScalarField h);

  const ScalarField& h() const { return h_; }
  const Region& region() const { return h_.region(); }

 private:
  ScalarField h_;
};

struct SurfaceValidationOptions {
  ValidationOptions validation;
  int curve_trials = 64;
  uint64_t seed = 0;
};

/// Checks the SurfaceGraph invariants against a validated domain
/// (1-Lipschitz, f- < h < f+ interior-wise, trace match) and then runs
/// a causal-curve oracle: random inextensible causal curves through the
/// domain must cross the graph exactly once, within a tolerance band of
/// width resolution_h.
ValidationReport validate_cauchy_surface(const CausalDomain& dom,
                                         const SurfaceGraph& s,
                                         const SurfaceValidationOptions& opts = {});

struct DevelopmentResult {
  CausalDomain domain;
  /// Empty boundary: the development is the full space over the region.
  bool full_space = false;
  /// f+ or f- meets the graph value at some interior node (null graph
  /// segments); the development degenerates there.
  bool touches_graph = false;
};

/// Cauchy development of a surface graph: the strip between the exact
/// envelopes of the graph's boundary trace (f+ from the lower envelope,
/// f- from the upper). Empty boundary yields the full-space flag.
DevelopmentResult cauchy_development_of_graph(const SurfaceGraph& s);

struct DevelopmentWitness {
  CoverPoint point;
  bool claimed_inside = false;
  /// For an inside failure: a causal curve through the point missing the
  /// graph. For an outside failure the curve is empty (no escape found).
  std::vector<CoverPoint> curve;
};

/// Semantics check of a claimed Cauchy development. Inside points must
/// be crossed by the graph along `trials` random inextensible causal
/// curves; outside points beyond a band of width 3*resolution_h must
/// admit an escaping causal curve. Band points are exempt.
std::optional<DevelopmentWitness> development_curve_oracle(
    const SurfaceGraph& s, const CausalDomain& result, int trials,
    uint64_t seed, int probe_points = 50);

struct ConjugateWitness {
  int node = -1;
  double t = 0.0;
};

/// Scans antipodal node pairs with overlapping fiber intervals shifted
/// by pi: a witness (x, t) has both (x, t) and (-x, t + pi) in the
/// domain. Requires an antipode-closed grid (NotApplicableError
/// otherwise).
std::vector<ConjugateWitness> detect_conjugate_pairs(const CausalDomain& dom);

/// Shadow of p on the graph of s: the region nodes x whose graph point
/// (x, h(x)) is causally related to p. p must lie over a region node;
/// points on the graph shadow to themselves.
std::vector<int> shadow(const CoverPoint& p, const SurfaceGraph& s,
                        double tol = kDefaultTol);

struct ShadowComparison {
  bool distinct = false;
  /// The discrete stand-in for "S noncompact" failed: the surface region
  /// covers the whole grid.
  bool compact_region_warning = false;
};

/// Set inequality of the two shadows; p and q must both lie strictly on
/// the same side of the graph.
ShadowComparison shadows_distinguish(const CoverPoint& p, const CoverPoint& q,
                                     const SurfaceGraph& s,
                                     double tol = kDefaultTol);

}  // namespace eincausal
