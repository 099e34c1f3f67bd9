#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "eincausal/domains.hpp"

namespace eincausal {

/// Eikonal envelopes of a validated, conjugate-free domain: the inf/sup
/// distance convolutions of the common boundary trace,
///   g+(x) = inf over boundary of (f + d),  g-(x) = sup of (f - d).
/// An empty boundary yields the infinite pair (-inf, +inf). Throws
/// NotApplicableError when the domain contains conjugate pairs.
std::pair<ScalarField, ScalarField> eikonal_envelopes(const CausalDomain& dom);

enum class MaximalityKind { maximal, extendable, full_space };

std::string to_string(MaximalityKind k);

struct MaximalityVerdict {
  MaximalityKind kind = MaximalityKind::maximal;
  /// max over interior nodes of |f+- - g+-| (finite cases).
  double max_deviation = 0.0;
  /// The envelopes, when they were computed (extendable/maximal).
  std::optional<ScalarField> g_minus;
  std::optional<ScalarField> g_plus;
};

/// C0-maximality test: conjugate pairs or an empty boundary force the
/// full-space verdict (unless the domain already is the full space, which
/// is maximal); otherwise the domain is maximal iff f+- equal their
/// eikonal envelopes within tol. tol < 0 selects resolution_h.
MaximalityVerdict is_maximal(const CausalDomain& dom, double tol = -1.0);

struct MaximalizeResult {
  CausalDomain domain;
  bool full_space = false;
};

/// The C0-maximal extension: replaces f+- by the eikonal envelopes over
/// the same region and boundary trace; conjugate-pair and empty-boundary
/// domains extend to the full space over the whole grid. Idempotent
/// (bitwise) and a fixed point on already-maximal domains.
MaximalizeResult maximalize(const CausalDomain& dom);

/// Which envelope a field is claimed to be: a future-eikonal field is
/// ruled by past-directed lightlike geodesics reaching the boundary
/// (g+); past-eikonal is the time mirror (g-).
enum class EikonalDirection { future, past };

struct GeodesicCertificate {
  bool pass = false;
  double residual = 0.0;
  int site_node = -1;
  /// Sample points (x(s_k), expected field value) along the traced
  /// lightlike geodesic.
  std::vector<CoverPoint> path;
};

/// Traces the lightlike generator from (x, field(x)) to the optimal
/// boundary site and measures the worst deviation of the field from the
/// unit-rate law along it. Passes iff residual <= 2 * resolution_h.
/// Retries the next-best site on antipodal degeneracy.
GeodesicCertificate geodesic_certificate(const ScalarField& field, int node,
                                         EikonalDirection direction);

struct LocalityReport {
  bool pass = true;
  int witness_center = -1;
  double max_deviation = 0.0;
};

/// Local eikonality: recomputes the envelope from the discrete boundary
/// trace of every ball in a covering family (centers form a maximal
/// resolution_h-separated subset) and compares inside. Deviations are
/// capped at 2 * resolution_h. ball_radius must be >= 2 * resolution_h.
LocalityReport is_locally_eikonal(const ScalarField& field, double ball_radius,
                                  EikonalDirection direction);

}  // namespace eincausal
