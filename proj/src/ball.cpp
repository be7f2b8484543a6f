#include "rankpd/ball.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rankpd {

namespace {

// Splits `total` into `pieces` counts, remainder spread over the first arcs.
std::vector<int> split_counts(int total, int pieces) {
  std::vector<int> counts(pieces, total / pieces);
  for (int i = 0; i < total % pieces; ++i) ++counts[i];
  return counts;
}

// Boundary of the d_rank ball of radius r (r already transformed for rank_p).
// Case equations, with l = pers(center), x = (b, d):
//   outer line      pers(y) = sqrt(l^2 + 2r)          (center inside y)
//   inner line      pers(y) = sqrt(l^2 - 2r)          (y inside center)
//   right hyperbola l^2/2 + pers(y)^2/2 - (d - y1)^2 = r
//   left hyperbola  l^2/2 + pers(y)^2/2 - (y2 - b)^2 = r
std::vector<PlanarPoint> rank_ball(const Interval& c, double r, int samples) {
  const double b = c.birth, d = c.death, l = c.persistence();
  const double p_out = std::sqrt(l * l + 2.0 * r);
  const double s = p_out - l;
  std::vector<PlanarPoint> out;
  out.reserve(static_cast<std::size_t>(samples));

  if (r < 0.5 * l * l) {
    // Regular ball: closed curve through the four corners,
    // counterclockwise A (north) -> B (west) -> C (south) -> D (east).
    const double p_in = std::sqrt(l * l - 2.0 * r);
    const double t = l - p_in;
    const auto counts = split_counts(samples, 4);
    // A -> B: outer constant-persistence line.
    out.push_back({b, d + s});
    for (int j = 1; j < counts[0]; ++j) {
      const double y1 = b - s * j / counts[0];
      out.push_back({y1, y1 + p_out});
    }
    // B -> C: left hyperbola, parameterized by y2 from d down to d - t.
    out.push_back({b - s, d});
    for (int j = 1; j < counts[1]; ++j) {
      const double y2 = d - t * j / counts[1];
      const double q = 2.0 * r - l * l + 2.0 * (y2 - b) * (y2 - b);
      out.push_back({y2 - std::sqrt(std::max(0.0, q)), y2});
    }
    // C -> D: inner constant-persistence line.
    out.push_back({b, d - t});
    for (int j = 1; j < counts[2]; ++j) {
      const double y1 = b + t * j / counts[2];
      out.push_back({y1, y1 + p_in});
    }
    // D -> A: right hyperbola, parameterized by y1 from b + t down to b.
    out.push_back({b + t, d});
    for (int j = 1; j < counts[3]; ++j) {
      const double y1 = b + t - t * j / counts[3];
      const double q = 2.0 * r - l * l + 2.0 * (d - y1) * (d - y1);
      out.push_back({y1, y1 + std::sqrt(std::max(0.0, q))});
    }
    return out;
  }

  // Degenerate ball (r >= pers^2/2): the inner line disappears, the
  // hyperbolas reach the diagonal (exactly at r = pers^2/2) and the curve
  // continues as constant-persistence rays, clipped at extent L.
  const double q = std::sqrt(std::max(0.0, 2.0 * r - l * l));
  const double L = p_out;
  const bool flat = l == 0.0;  // hyperbola pieces collapse for diagonal centers
  const auto counts = split_counts(samples, flat ? 3 : 5);
  int piece = 0;
  // Right ray, far end toward the junction (d, d + q).
  for (int j = 0; j < counts[piece]; ++j) {
    const double y1 = d + L * (counts[piece] - j) / counts[piece];
    out.push_back({y1, y1 + q});
  }
  ++piece;
  if (!flat) {
    // Right hyperbola from the junction up to corner A.
    for (int j = 0; j < counts[piece]; ++j) {
      const double y1 = d - l * j / counts[piece];
      const double rad = 2.0 * r - l * l + 2.0 * (d - y1) * (d - y1);
      out.push_back({y1, y1 + std::sqrt(std::max(0.0, rad))});
    }
    ++piece;
  }
  // Corner A, then the outer line to corner B.
  out.push_back({b, d + s});
  for (int j = 1; j < counts[piece]; ++j) {
    const double y1 = b - s * j / counts[piece];
    out.push_back({y1, y1 + p_out});
  }
  ++piece;
  if (!flat) {
    // Corner B, then the left hyperbola down to the junction (b - q, b).
    out.push_back({b - s, d});
    for (int j = 1; j < counts[piece]; ++j) {
      const double y2 = d - l * j / counts[piece];
      const double rad = 2.0 * r - l * l + 2.0 * (y2 - b) * (y2 - b);
      out.push_back({y2 - std::sqrt(std::max(0.0, rad)), y2});
    }
    ++piece;
  }
  // Left ray from the junction outward.
  for (int j = 0; j < counts[piece]; ++j) {
    const double y2 = b - L * j / counts[piece];
    out.push_back({y2 - q, y2});
  }
  return out;
}

// Level set found radially: for each direction the p-circle crossing is
// analytic; for d_dim the crossing is bracketed by marching and refined by
// bisection. Directions without a crossing inside the half-plane are skipped.
std::vector<PlanarPoint> radial_ball(const Interval& c, double r,
                                     const MetricKind& m, int samples) {
  const double l = c.persistence();
  std::vector<PlanarPoint> out;
  for (int i = 0; i < samples; ++i) {
    const double theta = 2.0 * std::numbers::pi * i / samples;
    const double u1 = std::cos(theta), u2 = std::sin(theta);
    const double drop = u1 - u2;  // persistence decreases at this rate
    const double rho_diag = drop > 1e-15 ? l / drop : kInfinity;

    if (m.tag != MetricKind::Tag::dim) {
      const double p = m.tag == MetricKind::Tag::linfty ? kInfinity : m.p;
      double norm;
      if (std::isinf(p))
        norm = std::max(std::abs(u1), std::abs(u2));
      else if (p == 1.0)
        norm = std::abs(u1) + std::abs(u2);
      else
        norm = std::pow(std::pow(std::abs(u1), p) + std::pow(std::abs(u2), p), 1.0 / p);
      const double rho = r / norm;
      if (rho > rho_diag) continue;
      out.push_back({c.birth + rho * u1, c.death + rho * u2});
      continue;
    }

    const auto f = [&](double rho) {
      return d_dim(c, {c.birth + rho * u1, c.death + rho * u2}) - r;
    };
    const double rho_max = std::min(rho_diag, 8.0 * (r + l + 1.0));
    if (rho_max <= 0.0) continue;
    constexpr int kSteps = 512;
    double lo = 0.0, hi = -1.0;
    for (int k = 1; k <= kSteps; ++k) {
      const double rho = rho_max * k / kSteps;
      if (f(rho) >= 0.0) {
        hi = rho;
        break;
      }
      lo = rho;
    }
    if (hi < 0.0) continue;
    for (int it = 0; it < 100 && hi - lo > 1e-13 * (1.0 + hi); ++it) {
      const double mid = 0.5 * (lo + hi);
      (f(mid) >= 0.0 ? hi : lo) = mid;
    }
    out.push_back({c.birth + hi * u1, c.death + hi * u2});
  }
  return out;
}

}  // namespace

std::array<PlanarPoint, 4> rank_ball_corners(const Interval& center, double r) {
  const double l = center.persistence();
  if (!(r > 0.0) || !(r < 0.5 * l * l))
    throw std::invalid_argument("rank_ball_corners requires 0 < r < pers^2/2");
  const double s = std::sqrt(l * l + 2.0 * r) - l;
  const double t = l - std::sqrt(l * l - 2.0 * r);
  const double b = center.birth, d = center.death;
  return {{{b, d + s}, {b - s, d}, {b, d - t}, {b + t, d}}};
}

std::vector<PlanarPoint> ball_boundary(const Interval& center, double r,
                                       const MetricKind& m, int samples) {
  if (!(r > 0.0)) throw std::invalid_argument("ball_boundary requires r > 0");
  if (samples < 4) throw std::invalid_argument("ball_boundary requires samples >= 4");
  if (m.tag == MetricKind::Tag::rank) {
    // A d_rank_p ball of radius r is the d_rank ball of radius r^p.
    const double area = m.p == 1.0 ? r : std::pow(r, m.p);
    return rank_ball(center, area, samples);
  }
  return radial_ball(center, r, m, samples);
}

}  // namespace rankpd
