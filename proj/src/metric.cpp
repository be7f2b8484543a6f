#include "rankpd/metric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rankpd {

MetricKind MetricKind::rank(double p) {
  if (!(p >= 1.0) || !std::isfinite(p))
    throw std::invalid_argument("rank metric requires finite p >= 1");
  return {Tag::rank, p};
}

MetricKind MetricKind::lp_endpoint(double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("endpoint metric requires p >= 1");
  return {Tag::lp_endpoint, p};
}

double overlap_length(const Interval& x, const Interval& y) {
  return std::max(0.0, std::min(x.death, y.death) - std::max(x.birth, y.birth));
}

double d_rank(const Interval& x, const Interval& y) {
  const double px = x.persistence();
  const double py = y.persistence();
  const double o = overlap_length(x, y);
  return 0.5 * px * px + 0.5 * py * py - o * o;
}

double d_rank_p(const Interval& x, const Interval& y, double p) {
  if (!(p >= 1.0) || !std::isfinite(p))
    throw std::invalid_argument("d_rank_p requires finite p >= 1");
  const double area = d_rank(x, y);
  return p == 1.0 ? area : std::pow(area, 1.0 / p);
}

double d_dim(const Interval& x, const Interval& y) {
  return x.persistence() + y.persistence() - 2.0 * overlap_length(x, y);
}

double d_endpoint(const Interval& x, const Interval& y, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("d_endpoint requires p >= 1");
  const double db = std::abs(x.birth - y.birth);
  const double dd = std::abs(x.death - y.death);
  if (std::isinf(p)) return std::max(db, dd);
  if (p == 1.0) return db + dd;
  if (p == 2.0) return std::hypot(db, dd);
  return std::pow(std::pow(db, p) + std::pow(dd, p), 1.0 / p);
}

double d_to_diagonal(const Interval& x, const MetricKind& m) {
  const double l = x.persistence();
  switch (m.tag) {
    case MetricKind::Tag::rank: {
      const double area = 0.5 * l * l;
      return m.p == 1.0 ? area : std::pow(area, 1.0 / m.p);
    }
    case MetricKind::Tag::dim:
      return l;
    case MetricKind::Tag::linfty:
      return 0.5 * l;
    case MetricKind::Tag::lp_endpoint:
      if (std::isinf(m.p)) return 0.5 * l;
      return 0.5 * l * std::pow(2.0, 1.0 / m.p);
  }
  return 0.0;
}

double distance(const Interval& x, const Interval& y, const MetricKind& m) {
  switch (m.tag) {
    case MetricKind::Tag::rank:
      return d_rank_p(x, y, m.p);
    case MetricKind::Tag::dim:
      return d_dim(x, y);
    case MetricKind::Tag::linfty:
      return d_endpoint(x, y, kInfinity);
    case MetricKind::Tag::lp_endpoint:
      return d_endpoint(x, y, m.p);
  }
  return 0.0;
}

}  // namespace rankpd
