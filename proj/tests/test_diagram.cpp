#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "rankpd/diagram.hpp"
#include "rankpd/errors.hpp"
#include "rankpd/harness.hpp"
#include "rankpd/transport.hpp"

using namespace rankpd;

namespace {

// partial matchings between sets of sizes n and m: sum_k C(n,k) C(m,k) k!
long long matching_count(int n, int m) {
  const auto binom = [](int a, int b) {
    long long r = 1;
    for (int i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
    return r;
  };
  long long total = 0;
  for (int k = 0; k <= std::min(n, m); ++k) {
    long long fact = 1;
    for (int i = 2; i <= k; ++i) fact *= i;
    total += binom(n, k) * binom(m, k) * fact;
  }
  return total;
}

}  // namespace

TEST_CASE("canonical form") {
  Diagram d;
  d.add({0, 2});
  d.add({0, 1}, 2);
  d.add({0, 2}, 3);
  REQUIRE(d.entries().size() == 2);
  CHECK(d.entries()[0].first == Interval{0, 1});
  CHECK(d.entries()[0].second == 2);
  CHECK(d.entries()[1].second == 4);
  CHECK(d.point_count() == 6);

  // adding then removing a point is the identity
  Diagram e = d;
  e.add({3, 4});
  e.add({3, 4}, -1);
  CHECK(e == d);

  Diagram z;
  z.add({1, 2}, 2);
  z.add({1, 2}, -2);
  CHECK(z.empty());

  CHECK_THROWS_AS(Diagram({{{2, 1}, 1}}), invariant_error);
}

TEST_CASE("split_signed") {
  Diagram a;
  a.add({0, 2});
  a.add({0, 1}, -1);
  const auto [plus, minus] = split_signed(a);
  CHECK(plus == Diagram({{{0, 2}, 1}}));
  CHECK(minus == Diagram({{{0, 1}, 1}}));
  CHECK(plus - minus == a);

  Diagram pos;
  pos.add({1, 3}, 2);
  const auto [p2, m2] = split_signed(pos);
  CHECK(p2 == pos);
  CHECK(m2.empty());

  Diagram neg;
  neg.add({1, 3}, -2);
  const auto [p3, m3] = split_signed(neg);
  CHECK(p3.empty());
  CHECK(m3 == Diagram({{{1, 3}, 2}}));
}

TEST_CASE("coupling cost") {
  CHECK(coupling_cost({}, MetricKind::rank(1.0), 1.0) == 0.0);
  Coupling matched;
  matched.matched.emplace_back(Interval{0, 2}, Interval{1, 3});
  CHECK(coupling_cost(matched, MetricKind::rank(1.0), 1.0) == doctest::Approx(3.0));
  Coupling unmatched;
  unmatched.left_unmatched.push_back({0, 2});
  CHECK(coupling_cost(unmatched, MetricKind::rank(1.0), 1.0) == doctest::Approx(2.0));

  Coupling both;
  both.matched.emplace_back(Interval{0, 2}, Interval{1, 3});
  both.left_unmatched.push_back({0, 1});
  CHECK(coupling_cost(both, MetricKind::rank(1.0), kInfinity) == doctest::Approx(3.0));
  CHECK(coupling_cost(both, MetricKind::rank(1.0), 2.0) ==
        doctest::Approx(std::sqrt(9.0 + 0.25)));
}

TEST_CASE("enumerate_couplings counts") {
  CHECK(all_couplings(Diagram{}, Diagram{}).size() == 1);

  Diagram a1;
  a1.add({0, 1});
  Diagram b1;
  b1.add({2, 3});
  CHECK(all_couplings(a1, b1).size() == 2);

  Diagram a2 = a1;
  a2.add({0, 2});
  CHECK(all_couplings(a2, b1).size() == matching_count(2, 1));
  CHECK(matching_count(2, 1) == 3);

  Diagram a3 = a2;
  a3.add({1, 4});
  Diagram b3 = b1;
  b3.add({2, 5});
  b3.add({0, 3});
  CHECK(all_couplings(a3, b3).size() == matching_count(3, 3));

  // equal copies do not create duplicate couplings
  Diagram twice;
  twice.add({0, 1}, 2);
  CHECK(all_couplings(twice, b1).size() == 2);

  Diagram big;
  for (int i = 0; i < 9; ++i) big.add({0.0, 1.0 + i});
  CHECK_THROWS_AS(all_couplings(big, b1), std::invalid_argument);
}

TEST_CASE("any coupling cost dominates W1") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 100; ++t) {
    const Diagram a = harness::random_diagram(rng, 4);
    const Diagram b = harness::random_diagram(rng, 4);
    const double w1 = wasserstein(a, b, MetricKind::rank(1.0), 1.0).distance;
    enumerate_couplings(a, b, [&](const Coupling& c) {
      CHECK(coupling_cost(c, MetricKind::rank(1.0), 1.0) >= w1 - 1e-9);
    });
  }
}

TEST_CASE("diagram text format") {
  const Diagram d = parse_diagram("# comment\n0 2\n1 3 2\n0.5 0.75 -1\n\n");
  CHECK(d.entries().size() == 3);
  CHECK(d.multiplicity({0, 2}) == 1);
  CHECK(d.multiplicity({1, 3}) == 2);
  CHECK(d.multiplicity({0.5, 0.75}) == -1);

  const std::string emitted = format_diagram(d);
  CHECK(emitted == "0 2 1\n0.5 0.75 -1\n1 3 2\n");
  CHECK(format_diagram(parse_diagram(emitted)) == emitted);

  CHECK_THROWS_AS(parse_diagram("1\n"), parse_error);
  CHECK_THROWS_AS(parse_diagram("1 2 3 4\n"), parse_error);
  CHECK_THROWS_AS(parse_diagram("a b\n"), parse_error);
  CHECK_THROWS_AS(parse_diagram("3 1\n"), invariant_error);
}

TEST_CASE("format round-trip on random diagrams") {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 200; ++t) {
    Diagram d = harness::random_diagram(rng, 10);
    if (t % 3 == 0) d.add({0.25, 0.5}, -2);
    const std::string a = format_diagram(d);
    CHECK(parse_diagram(a) == d);
    CHECK(format_diagram(parse_diagram(a)) == a);
  }
}
