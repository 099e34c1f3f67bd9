#pragma once

#include <string>
#include <vector>

#include "eincausal/sphere.hpp"

namespace eincausal {

/// A point (x, t) of the universal cover of the Einstein universe in a
/// fixed spatio-temporal decomposition S^{n-1} x R.
struct CoverPoint {
  UnitPoint x;
  double t = 0.0;

  CoverPoint(UnitPoint x_, double t_);
};

/// Causal relation of q relative to p: the lightcone of p is the set
/// where the sphere distance equals |t - t_p|; strictly inside is
/// chronological, strictly outside is unrelated.
enum class CausalRelation {
  equal,
  chronological_future,
  chronological_past,
  lightlike_future,
  lightlike_past,
  unrelated,
};

std::string to_string(CausalRelation r);

/// true for chronological/lightlike future (and optionally equal).
bool is_causal_future(CausalRelation r, bool include_equal = false);
bool is_causal_past(CausalRelation r, bool include_equal = false);
/// Future/past mirror: the relation of p relative to q.
CausalRelation mirror(CausalRelation r);

/// Classify q relative to p. Lightlike uses the closed band
/// |D - |dt|| <= tol; equal requires both coordinates within tol.
CausalRelation causal_relation(const CoverPoint& p, const CoverPoint& q,
                               double tol = kDefaultTol);

/// The conjugation map (x, t) -> (-x, t + pi); sigma^2 = delta.
CoverPoint sigma(const CoverPoint& p);
CoverPoint sigma_inverse(const CoverPoint& p);
/// Deck transformation (x, t) -> (x, t + 2 pi k).
CoverPoint delta(const CoverPoint& p, int k);

/// true iff q = sigma(p) or p = sigma(q) within tol.
bool is_conjugate_pair(const CoverPoint& p, const CoverPoint& q,
                       double tol = kDefaultTol);

/// Affine-chart position of q relative to center: Mink0 is the set of
/// points non-causally related to center; MinkPlus/MinkMinus are the
/// charts anchored at sigma(center) / sigma^{-1}(center).
enum class ChartClass { Mink0, MinkPlus, MinkMinus, boundary };

std::string to_string(ChartClass c);

ChartClass chart_classify(const CoverPoint& center, const CoverPoint& q,
                          double tol = kDefaultTol);

/// An isotropic vector of R^{2,n} in the coordinates (u, v, x_1..x_n)
/// with u = cos t, v = sin t.
struct KleinVector {
  double u = 1.0;
  double v = 0.0;
  std::vector<double> x;
};

/// The Klein lift (cos t, sin t, x); invariant under delta.
KleinVector to_klein(const CoverPoint& p);

/// Symmetric bilinear form of q_{2,n}: -u_a u_b - v_a v_b + <x_a, x_b>.
/// Satisfies q_form(to_klein p, to_klein q) = cos D - cos dt.
double q_form(const KleinVector& a, const KleinVector& b);

}  // namespace eincausal
