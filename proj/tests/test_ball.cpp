#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "rankpd/ball.hpp"
#include "test_util.hpp"

using namespace rankpd;

TEST_CASE("rank ball corners at (0,2), r=1") {
  const auto corners = rank_ball_corners({0, 2}, 1.0);
  const double s = std::sqrt(6.0) - 2.0;
  const double t = 2.0 - std::sqrt(2.0);
  CHECK(std::abs(corners[0][0] - 0.0) <= 1e-12);
  CHECK(std::abs(corners[0][1] - (2.0 + s)) <= 1e-12);
  CHECK(std::abs(corners[1][0] - (-s)) <= 1e-12);
  CHECK(std::abs(corners[1][1] - 2.0) <= 1e-12);
  CHECK(std::abs(corners[2][0] - 0.0) <= 1e-12);
  CHECK(std::abs(corners[2][1] - std::sqrt(2.0)) <= 1e-12);
  CHECK(std::abs(corners[3][0] - (2.0 - std::sqrt(2.0))) <= 1e-12);
  CHECK(std::abs(corners[3][1] - 2.0) <= 1e-12);
  CHECK(corners[3][0] == doctest::Approx(t));
}

TEST_CASE("samples=4 emits exactly the corners") {
  const auto points = ball_boundary({0, 2}, 1.0, MetricKind::rank(1.0), 4);
  const auto corners = rank_ball_corners({0, 2}, 1.0);
  REQUIRE(points.size() == 4);
  for (int i = 0; i < 4; ++i) {
    CHECK(points[i][0] == doctest::Approx(corners[i][0]).epsilon(1e-14));
    CHECK(points[i][1] == doctest::Approx(corners[i][1]).epsilon(1e-14));
  }
}

TEST_CASE("every emitted point lies on the boundary") {
  std::mt19937_64 rng(21);
  const std::vector<MetricKind> metrics = {
      MetricKind::rank(1.0), MetricKind::rank(2.0), MetricKind::dim(),
      MetricKind::linfty(), MetricKind::lp_endpoint(1.0),
      MetricKind::lp_endpoint(3.0)};
  std::uniform_real_distribution<double> radius(0.05, 2.0);
  for (int t = 0; t < 40; ++t) {
    Interval c = testutil::random_interval(rng, -3.0, 3.0, 4.0);
    const double r = radius(rng);
    for (const auto& m : metrics) {
      const auto points = ball_boundary(c, r, m, 64);
      for (const auto& [y1, y2] : points) {
        REQUIRE(y1 <= y2 + 1e-12);
        const double d = distance(c, {y1, std::max(y1, y2)}, m);
        REQUIRE(std::abs(d - r) <= 1e-6);
      }
    }
  }
}

TEST_CASE("dim ball of (0,2), r=1 is the l1 diamond") {
  const auto points = ball_boundary({0, 2}, 1.0, MetricKind::dim(), 128);
  CHECK(points.size() == 128);
  for (const auto& [y1, y2] : points) {
    CHECK(std::abs(std::abs(y1) + std::abs(y2 - 2.0) - 1.0) <= 1e-9);
  }
}

TEST_CASE("degenerate rank ball touches the diagonal") {
  const Interval c{0, 2};
  const double r = 2.0;  // exactly pers^2/2
  const auto points = ball_boundary(c, r, MetricKind::rank(1.0), 200);
  double min_pers = kInfinity;
  for (const auto& [y1, y2] : points) {
    CHECK(std::abs(d_rank(c, {y1, y2}) - r) <= 1e-6);
    min_pers = std::min(min_pers, y2 - y1);
  }
  CHECK(min_pers <= 1e-12);

  // r above the diagonal distance: unbounded ball, rays of persistence
  // sqrt(2r - l^2)
  const auto far = ball_boundary(c, 3.0, MetricKind::rank(1.0), 200);
  for (const auto& [y1, y2] : far)
    CHECK(std::abs(d_rank(c, {y1, y2}) - 3.0) <= 1e-6);
}

TEST_CASE("ball on a diagonal center") {
  // rank: every diagonal point is at distance pers^2/2 from anything, so the
  // ball boundary is the constant-persistence line sqrt(2r)
  const auto points = ball_boundary({1, 1}, 0.5, MetricKind::rank(1.0), 64);
  for (const auto& [y1, y2] : points)
    CHECK(y2 - y1 == doctest::Approx(1.0).epsilon(1e-9));
  // dim: d_dim((c,c), y) = pers(y)
  const auto dimpts = ball_boundary({1, 1}, 1.0, MetricKind::dim(), 64);
  CHECK(!dimpts.empty());
  for (const auto& [y1, y2] : dimpts)
    CHECK(y2 - y1 == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(ball_boundary({0, 2}, 0.0, MetricKind::rank(1.0), 16),
                  std::invalid_argument);
  CHECK_THROWS_AS(ball_boundary({0, 2}, -1.0, MetricKind::dim(), 16),
                  std::invalid_argument);
  CHECK_THROWS_AS(ball_boundary({0, 2}, 1.0, MetricKind::rank(1.0), 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(rank_ball_corners({0, 2}, 2.0), std::invalid_argument);
}
