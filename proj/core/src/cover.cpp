#include "eincausal/cover.hpp"

#include <cmath>
#include <stdexcept>

namespace eincausal {

CoverPoint::CoverPoint(UnitPoint x_, double t_) : x(std::move(x_)), t(t_) {
  if (!std::isfinite(t)) {
    throw std::invalid_argument("CoverPoint: non-finite time coordinate");
  }
}

std::string to_string(CausalRelation r) {
  switch (r) {
    case CausalRelation::equal: return "equal";
    case CausalRelation::chronological_future: return "chronological_future";
    case CausalRelation::chronological_past: return "chronological_past";
    case CausalRelation::lightlike_future: return "lightlike_future";
    case CausalRelation::lightlike_past: return "lightlike_past";
    case CausalRelation::unrelated: return "unrelated";
  }
  return "unrelated";
}

bool is_causal_future(CausalRelation r, bool include_equal) {
  return r == CausalRelation::chronological_future ||
         r == CausalRelation::lightlike_future ||
         (include_equal && r == CausalRelation::equal);
}

bool is_causal_past(CausalRelation r, bool include_equal) {
  return r == CausalRelation::chronological_past ||
         r == CausalRelation::lightlike_past ||
         (include_equal && r == CausalRelation::equal);
}

CausalRelation mirror(CausalRelation r) {
  switch (r) {
    case CausalRelation::chronological_future:
      return CausalRelation::chronological_past;
    case CausalRelation::chronological_past:
      return CausalRelation::chronological_future;
    case CausalRelation::lightlike_future:
      return CausalRelation::lightlike_past;
    case CausalRelation::lightlike_past:
      return CausalRelation::lightlike_future;
    default:
      return r;
  }
}

CausalRelation causal_relation(const CoverPoint& p, const CoverPoint& q,
                               double tol) {
  const double dist = geodesic_distance(p.x, q.x);
  const double dt = q.t - p.t;
  if (dist <= tol && std::abs(dt) <= tol) return CausalRelation::equal;
  if (std::abs(dist - std::abs(dt)) <= tol) {
    return dt > 0 ? CausalRelation::lightlike_future
                  : CausalRelation::lightlike_past;
  }
  if (dist < std::abs(dt)) {
    return dt > 0 ? CausalRelation::chronological_future
                  : CausalRelation::chronological_past;
  }
  return CausalRelation::unrelated;
}

CoverPoint sigma(const CoverPoint& p) {
  return CoverPoint(p.x.antipode(), p.t + M_PI);
}

CoverPoint sigma_inverse(const CoverPoint& p) {
  return CoverPoint(p.x.antipode(), p.t - M_PI);
}

CoverPoint delta(const CoverPoint& p, int k) {
  return CoverPoint(p.x, p.t + 2.0 * M_PI * k);
}

namespace {
bool same_point(const CoverPoint& p, const CoverPoint& q, double tol) {
  return geodesic_distance(p.x, q.x) <= tol && std::abs(p.t - q.t) <= tol;
}
}  // namespace

bool is_conjugate_pair(const CoverPoint& p, const CoverPoint& q, double tol) {
  return same_point(sigma(p), q, tol) || same_point(sigma(q), p, tol);
}

std::string to_string(ChartClass c) {
  switch (c) {
    case ChartClass::Mink0: return "Mink0";
    case ChartClass::MinkPlus: return "Mink+";
    case ChartClass::MinkMinus: return "Mink-";
    case ChartClass::boundary: return "boundary";
  }
  return "boundary";
}

ChartClass chart_classify(const CoverPoint& center, const CoverPoint& q,
                          double tol) {
  const CausalRelation rel = causal_relation(center, q, tol);
  if (rel == CausalRelation::unrelated) return ChartClass::Mink0;
  if (rel == CausalRelation::chronological_future &&
      causal_relation(sigma(center), q, tol) == CausalRelation::unrelated) {
    return ChartClass::MinkPlus;
  }
  if (rel == CausalRelation::chronological_past &&
      causal_relation(sigma_inverse(center), q, tol) ==
          CausalRelation::unrelated) {
    return ChartClass::MinkMinus;
  }
  return ChartClass::boundary;
}

KleinVector to_klein(const CoverPoint& p) {
  return KleinVector{std::cos(p.t), std::sin(p.t), p.x.coords()};
}

double q_form(const KleinVector& a, const KleinVector& b) {
  if (a.x.size() != b.x.size()) {
    throw std::invalid_argument("q_form: dimension mismatch");
  }
  double s = -a.u * b.u - a.v * b.v;
  for (size_t i = 0; i < a.x.size(); ++i) s += a.x[i] * b.x[i];
  return s;
}

}  // namespace eincausal
