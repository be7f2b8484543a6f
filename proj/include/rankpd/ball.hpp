#pragma once

#include <array>
#include <vector>

#include "rankpd/metric.hpp"

namespace rankpd {

using PlanarPoint = std::array<double, 2>;  // (y1, y2), y1 <= y2

/// The four boundary points of the rank-metric ball around `center` when the
/// ball stays away from the diagonal (r < pers^2/2):
///   (b, d+s), (b-s, d), (b, d-t), (b+t, d)
/// with s = sqrt(l^2+2r) - l and t = l - sqrt(l^2-2r), l = pers(center).
std::array<PlanarPoint, 4> rank_ball_corners(const Interval& center, double r);

/// Polyline tracing {y : distance(center, y, m) = r} clipped to the
/// half-plane, traversed counterclockwise. For the rank metric the four arcs
/// are parameterized analytically and the corners are emitted exactly; when
/// r >= d(center, diagonal) the curve degenerates and touches the diagonal,
/// continuing as constant-persistence rays which are clipped at a finite
/// extent. For the other metrics points are found radially. The polyline is
/// implicitly closed; directions along which the level set does not exist are
/// skipped.
std::vector<PlanarPoint> ball_boundary(const Interval& center, double r,
                                       const MetricKind& m, int samples);

}  // namespace rankpd
