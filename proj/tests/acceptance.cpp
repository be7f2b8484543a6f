// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances are pinned in code next to each check.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>

#include "rankpd/ball.hpp"
#include "rankpd/graded.hpp"
#include "rankpd/harness.hpp"
#include "rankpd/landscape.hpp"
#include "rankpd/num_format.hpp"
#include "rankpd/stability.hpp"
#include "rankpd/transport.hpp"
#include "test_util.hpp"

using namespace rankpd;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int index, const std::string& name, bool pass, const std::string& detail,
            Clock::time_point start) {
  const double secs =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start)
          .count() /
      1000.0;
  std::printf("[%d/8] %s: %s (%s, %.1fs)\n", index, name.c_str(),
              pass ? "PASS" : "FAIL", detail.c_str(), secs);
  std::fflush(stdout);
  if (!pass) ++failures;
}

// 1. d_rank vs midpoint grid integration at cell size 1e-3 on [-5,5]^2,
//    tolerance 1e-2 absolute; inclusion-exclusion identity to 1e-12.
void criterion_metric() {
  const auto start = Clock::now();
  std::mt19937_64 rng(101);
  double worst_grid = 0.0, worst_identity = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const Interval x = testutil::random_interval(rng, -5.0, 3.0, 2.0);
    const Interval y = testutil::random_interval(rng, -5.0, 3.0, 2.0);
    const double closed = d_rank(x, y);
    worst_grid =
        std::max(worst_grid,
                 std::abs(closed - testutil::grid_drank(x, y, 1e-3, -5.0, 5.0)));
    const double o =
        std::max(0.0, std::min(x.death, y.death) - std::max(x.birth, y.birth));
    const double identity = 0.5 * x.persistence() * x.persistence() +
                            0.5 * y.persistence() * y.persistence() - o * o;
    worst_identity = std::max(worst_identity, std::abs(closed - identity));
  }
  const double secs =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start)
          .count() /
      1000.0;
  const bool pass = worst_grid <= 1e-2 && worst_identity <= 1e-12 && secs < 30.0;
  report(1, "metric correctness", pass,
         "max |closed - grid| = " + fmt_sig12(worst_grid) +
             ", max identity error = " + fmt_sig12(worst_identity),
         start);
}

// 2. Assignment solver equals exhaustive coupling enumeration, 1000 instances
//    with at most 6 points per side, all four metrics, p in {1, 2, inf},
//    tolerance 1e-9.
void criterion_transport() {
  const auto start = Clock::now();
  std::mt19937_64 rng(102);
  const std::vector<MetricKind> metrics = {MetricKind::rank(1.0), MetricKind::dim(),
                                           MetricKind::linfty(),
                                           MetricKind::lp_endpoint(2.0)};
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const Diagram a = harness::random_diagram(rng, 6);
    const Diagram b = harness::random_diagram(rng, 6);
    const auto couplings = all_couplings(a, b);
    for (const auto& m : metrics) {
      for (const double p : {1.0, 2.0, kInfinity}) {
        double brute = couplings.empty() ? 0.0 : kInfinity;
        for (const auto& c : couplings)
          brute = std::min(brute, coupling_cost(c, m, p));
        const double solver = wasserstein(a, b, m, p).distance;
        worst = std::max(worst, std::abs(solver - brute));
      }
    }
  }
  const double secs =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start)
          .count() /
      1000.0;
  report(2, "transport exactness", worst <= 1e-9 && secs < 60.0,
         "max |solver - bruteforce| = " + fmt_sig12(worst), start);
}

// 3. Barcode stability on 1000 random complexes (<= 30 cells) at horizon
//    2b-a, slack >= -1e-9 per degree and globally; plus the optimal-interval
//    witness failing below the horizon and passing at it.
void criterion_barcode() {
  const auto start = Clock::now();
  std::mt19937_64 rng(103);
  double min_slack = kInfinity;
  bool pass = true;
  for (int t = 0; t < 1000; ++t) {
    const WeightedComplex k = harness::random_complex(rng, 30);
    const WeightMap v = harness::random_monotone_weights(rng, k);
    for (const auto& rep : verify_barcode_stability(k, k.weight, v, k.horizon())) {
      min_slack = std::min(min_slack, rep.slack);
      pass = pass && rep.pass;
    }
  }
  const auto wit = harness::optimal_interval_witness(0.0, 1.0);
  bool witness_fails_below = false;
  for (int i = 0; i <= 20; ++i) {
    const double horizon = 1.0 + i * 0.05;
    if (!all_pass(verify_barcode_stability(wit.complex, wit.complex.weight, wit.v,
                                           horizon))) {
      witness_fails_below = horizon < wit.complex.horizon();
      if (witness_fails_below) break;
    }
  }
  const bool witness_passes_at = all_pass(verify_barcode_stability(
      wit.complex, wit.complex.weight, wit.v, wit.complex.horizon()));
  pass = pass && witness_fails_below && witness_passes_at;
  report(3, "barcode stability", pass,
         "min slack = " + fmt_sig12(min_slack) +
             (witness_fails_below ? ", witness fails below 2b-a" : ", witness never fails") +
             (witness_passes_at ? ", passes at 2b-a" : ", fails at 2b-a"),
         start);
}

// 4. Landscape stability with constant 1/2 on 10^4 random pairs (<= 20
//    points), slack >= -1e-9; equality to 1e-9 at beta = 0; norm identity to
//    1e-9 on 10^3 diagrams.
void criterion_landscape() {
  const auto start = Clock::now();
  std::mt19937_64 rng(104);
  double min_slack = kInfinity, worst_equality = 0.0, worst_norm = 0.0;
  for (int t = 0; t < 10000; ++t) {
    const Diagram alpha = harness::random_diagram(rng, 20);
    const Diagram beta = harness::random_diagram(rng, 20);
    min_slack = std::min(min_slack, verify_landscape_stability(alpha, beta).slack);
  }
  for (int t = 0; t < 1000; ++t) {
    const Diagram alpha = harness::random_diagram(rng, 20);
    worst_equality = std::max(
        worst_equality, std::abs(verify_landscape_stability(alpha, Diagram{}).slack));
    const double norm = l1_norm(landscape_of(alpha));
    const double half_w1 =
        0.5 * wasserstein(alpha, Diagram{}, MetricKind::rank(1.0), 1.0).distance;
    worst_norm = std::max(worst_norm, std::abs(norm - half_w1));
  }
  const bool pass =
      min_slack >= -1e-9 && worst_equality <= 1e-9 && worst_norm <= 1e-9;
  report(4, "landscape sharpness", pass,
         "min slack = " + fmt_sig12(min_slack) + ", max |slack| at beta=0 = " +
             fmt_sig12(worst_equality) + ", max norm error = " + fmt_sig12(worst_norm),
         start);
}

// 5. Graded identities: sum of grades equals the diagram exactly, graded
//    multiplicities in {-1, +1}, graded-sum inequality (rank and dim metrics)
//    with slack >= -1e-9 on 10^3 pairs, exact inversion round-trip on 10^3
//    diagrams.
void criterion_graded() {
  const auto start = Clock::now();
  std::mt19937_64 rng(105);
  bool pass = true;
  double min_slack = kInfinity;
  for (int t = 0; t < 1000; ++t) {
    const Diagram alpha = harness::random_diagram(rng, 10);
    const Diagram beta = harness::random_diagram(rng, 10);
    Diagram sum;
    for (const auto& g : graded_diagrams(alpha)) {
      sum += g;
      for (const auto& [iv, mult] : g.entries()) {
        (void)iv;
        pass = pass && (mult == 1 || mult == -1);
      }
    }
    pass = pass && sum == alpha;
    for (const auto& m : {MetricKind::rank(1.0), MetricKind::dim()}) {
      for (const auto& rep : verify_graded_stability(alpha, beta, m)) {
        min_slack = std::min(min_slack, rep.slack);
        pass = pass && rep.pass;
      }
    }
    const auto grid = CriticalGrid::from_diagram(alpha);
    pass = pass && diagram_from_ranks(rank_function_of(alpha, grid)) == alpha;
  }
  report(5, "graded identities", pass, "min slack = " + fmt_sig12(min_slack), start);
}

// 6. Coupling arithmetic and the W1 triangle inequality on 10^3 random
//    tuples, tolerance 1e-9.
void criterion_coupling() {
  const auto start = Clock::now();
  std::mt19937_64 rng(106);
  const std::vector<MetricKind> metrics = {MetricKind::rank(1.0), MetricKind::dim(),
                                           MetricKind::linfty(),
                                           MetricKind::lp_endpoint(2.0)};
  double worst = 0.0;  // worst violation, positive means failed
  for (int t = 0; t < 1000; ++t) {
    const MetricKind& m = metrics[static_cast<std::size_t>(t) % metrics.size()];
    const auto gen = [&] { return harness::random_diagram(rng, 4); };
    const Diagram a = gen(), b = gen(), s = gen(), tau = gen(), g = gen(), eta = gen();
    const auto w1 = [&](const Diagram& x, const Diagram& y) {
      return wasserstein(x, y, m, 1.0).distance;
    };
    worst = std::max(worst, w1(a + s, b + tau) - (w1(a, b) + w1(s, tau)));
    worst = std::max(worst, std::abs(w1(a + s, b + s) - w1(a, b)));
    worst = std::max(worst,
                     w1(a + tau, b + eta) - (w1(a + g, b + s) + w1(tau + s, eta + g)));
    worst = std::max(worst, w1(a, g) - (w1(a, b) + w1(b, g)));
  }
  report(6, "coupling arithmetic", worst <= 1e-9,
         "worst violation = " + fmt_sig12(worst), start);
}

// 7. Ball geometry: emitted boundary points within 1e-6 of the radius, the
//    four rank corners within 1e-12 of the s/t formulas, and 10^2 nested-ball
//    instances with 10^5 sampled points each producing zero violations.
void criterion_ball() {
  const auto start = Clock::now();
  std::mt19937_64 rng(107);
  bool pass = true;
  double worst_boundary = 0.0, worst_corner = 0.0;
  const std::vector<MetricKind> metrics = {MetricKind::rank(1.0), MetricKind::dim(),
                                           MetricKind::linfty(),
                                           MetricKind::lp_endpoint(2.0)};
  std::uniform_real_distribution<double> radius(0.05, 2.0);
  for (int t = 0; t < 50; ++t) {
    const Interval c = testutil::random_interval(rng, -3.0, 3.0, 4.0);
    const double r = radius(rng);
    for (const auto& m : metrics) {
      for (const auto& [y1, y2] : ball_boundary(c, r, m, 128)) {
        const double d = distance(c, {y1, std::max(y1, y2)}, m);
        worst_boundary = std::max(worst_boundary, std::abs(d - r));
      }
    }
    const double l = c.persistence();
    if (r < 0.5 * l * l) {
      const double s = std::sqrt(l * l + 2.0 * r) - l;
      const double tt = l - std::sqrt(l * l - 2.0 * r);
      const auto corners = rank_ball_corners(c, r);
      const double checks[4][2] = {{c.birth, c.death + s},
                                   {c.birth - s, c.death},
                                   {c.birth, c.death - tt},
                                   {c.birth + tt, c.death}};
      for (int i = 0; i < 4; ++i) {
        worst_corner = std::max(worst_corner,
                                std::abs(corners[i][0] - checks[i][0]) +
                                    std::abs(corners[i][1] - checks[i][1]));
      }
    }
  }
  pass = pass && worst_boundary <= 1e-6 && worst_corner <= 1e-12;

  long long violations = 0;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int inst = 0; inst < 100; ++inst) {
    Interval x = testutil::random_interval(rng, -3.0, 3.0, 4.0);
    if (x.persistence() < 0.1) x.death = x.birth + 0.5;
    const double l = x.persistence();
    const double r = (0.1 + 0.8 * unit(rng)) * std::min(l, 0.5 * l * l);
    const double s = std::sqrt(l * l + 2.0 * r) - l;
    const double tt = l - std::sqrt(l * l - 2.0 * r);
    std::uniform_real_distribution<double> jitter(-2.0 * tt, 2.0 * tt);
    for (int i = 0; i < 100000; ++i) {
      Interval y{x.birth + jitter(rng), x.death + jitter(rng)};
      if (y.birth > y.death) std::swap(y.birth, y.death);
      if (d_dim(x, y) <= s && d_rank(x, y) > r + 1e-9) ++violations;
      if (d_rank(x, y) <= r && d_dim(x, y) > tt + 1e-9) ++violations;
    }
  }
  pass = pass && violations == 0;
  report(7, "ball geometry", pass,
         "max |d - r| = " + fmt_sig12(worst_boundary) + ", max corner error = " +
             fmt_sig12(worst_corner) + ", nesting violations = " +
             std::to_string(violations),
         start);
}

// 8. The p-Wasserstein generalization for p in {1, 2, 3} on 10^2 random
//    complexes, slack >= -1e-9.
void criterion_wp() {
  const auto start = Clock::now();
  std::mt19937_64 rng(108);
  bool pass = true;
  double min_slack = kInfinity;
  for (int t = 0; t < 100; ++t) {
    const WeightedComplex k = harness::random_complex(rng, 20);
    const WeightMap v = harness::random_monotone_weights(rng, k);
    for (const double p : {1.0, 2.0, 3.0}) {
      for (const auto& rep : verify_wp_stability(k, k.weight, v, p)) {
        min_slack = std::min(min_slack, rep.slack);
        pass = pass && rep.pass;
      }
    }
  }
  report(8, "W_p generalization", pass, "min slack = " + fmt_sig12(min_slack), start);
}

}  // namespace

int main() {
  const auto start = Clock::now();
  criterion_metric();
  criterion_transport();
  criterion_barcode();
  criterion_landscape();
  criterion_graded();
  criterion_coupling();
  criterion_ball();
  criterion_wp();
  const double secs =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start)
          .count() /
      1000.0;
  std::printf("ACCEPTANCE: %d/8 criteria passed (%.1fs total)\n", 8 - failures, secs);
  return failures == 0 ? 0 : 1;
}
