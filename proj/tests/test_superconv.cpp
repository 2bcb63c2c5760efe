#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rieszspec/superconv.hpp"

using namespace rieszspec;

TEST_CASE("lobatto superconvergence points, alpha=0.5, N=11") {
  const RieszOrder o = make_riesz_order(0.5);
  const NodeSet pts = lobatto_superconv_points(o, 11);
  CHECK(pts.size() == 12);
  for (int i = 0; i < pts.size(); ++i) {
    CHECK(std::abs(pts.points[i]) < 1.0);
    // definition: residual below 1e-10 at the local scale (the function is O(1) here)
    CHECK(std::abs(riesz_lobatto_poly(o, 11, pts.points[i])) < 1e-10);
    // symmetry about 0
    CHECK(pts.points[i] == doctest::Approx(-pts.points[pts.size() - 1 - i]).epsilon(1e-9));
  }
}

TEST_CASE("lobatto locator completeness against the scan grid") {
  const RieszOrder o = make_riesz_order(0.35);
  const int N = 9;
  const NodeSet pts = lobatto_superconv_points(o, N);
  // every sign change of a 4001-point scan is matched by exactly one point
  // inside its bracketing interval
  const int kScan = 4001;
  const double lo = -1.0 + 1e-4, hi = 1.0 - 1e-4;
  std::vector<double> xs(kScan), vs(kScan);
  for (int i = 0; i < kScan; ++i) {
    xs[i] = lo + (hi - lo) * i / (kScan - 1.0);
    vs[i] = riesz_lobatto_poly(o, N, xs[i]);
  }
  std::size_t matched = 0;
  for (int i = 0; i + 1 < kScan; ++i) {
    if (vs[i] * vs[i + 1] < 0.0) {
      int inside = 0;
      for (double p : pts.points) {
        if (p >= xs[i] && p <= xs[i + 1]) ++inside;
      }
      CHECK(inside == 1);
      matched += inside;
    }
  }
  CHECK(matched == pts.points.size());
}

TEST_CASE("alpha -> 0 continuity of the located points") {
  // at alpha = 1e-3 every located point sits within 1e-2 of a zero of the
  // limiting curve, i.e. of a Legendre-Lobatto node
  const RieszOrder o = make_riesz_order(1e-3);
  const int N = 8;
  const NodeSet pts = lobatto_superconv_points(o, N);
  const NodeSet nodes = lobatto_nodes(N);
  for (double p : pts.points) {
    double dist = 2.0;
    for (double z : nodes.points) dist = std::min(dist, std::abs(p - z));
    CHECK(dist < 1e-2);
  }
}

TEST_CASE("gjf superconvergence points") {
  // 0 < alpha < 2: identical to the interpolation nodes, bit for bit
  const RieszOrder o = make_riesz_order(1.5);
  const NodeSet pts = gjf_superconv_points(o, 1);
  REQUIRE(pts.size() == 2);
  const double expect = 1.0 / std::sqrt(4.5);
  CHECK(pts.points[0] == doctest::Approx(-expect).epsilon(1e-14));
  CHECK(pts.points[1] == doctest::Approx(expect).epsilon(1e-14));

  const NodeSet roots = jacobi_roots({0.75, 0.75}, 13);
  const NodeSet pts12 = gjf_superconv_points(o, 12);
  REQUIRE(pts12.size() == 13);
  for (int i = 0; i < 13; ++i) {
    CHECK(pts12.points[i] == roots.points[i]);
  }

  // k = 3 (2 < alpha < 3), N = 20: 19 points, roots of P_19^{a*/2+2, a*/2+2}
  const RieszOrder o3 = make_riesz_order(2.6);
  const NodeSet pts3 = gjf_superconv_points(o3, 20);
  REQUIRE(pts3.size() == 19);
  const NodeSet roots3 = jacobi_roots({0.3 + 2.0, 0.3 + 2.0}, 19);
  for (int i = 0; i < 19; ++i) {
    CHECK(pts3.points[i] == roots3.points[i]);
  }

  // degenerate degree
  CHECK_THROWS_AS(gjf_superconv_points(o3, 1), std::domain_error);
}

TEST_CASE("points stay strictly interior") {
  for (double alpha : {0.2, 0.8}) {
    const RieszOrder o = make_riesz_order(alpha);
    for (int N : {5, 10}) {
      for (double p : lobatto_superconv_points(o, N).points) {
        CHECK(p > -1.0);
        CHECK(p < 1.0);
      }
    }
  }
}

TEST_CASE("compute_ratio") {
  NodeSet pts;
  pts.kind = NodeKind::SuperconvPoints;
  pts.points = {-0.5, 0.5};

  std::vector<std::pair<double, double>> curve = {{-0.9, 0.2}, {0.0, -1.4}, {0.9, 0.3}};
  RatioReport r = compute_ratio(curve, pts, {0.07, -0.02});
  CHECK(r.global_max == doctest::Approx(1.4));
  CHECK(r.superconv_max == doctest::Approx(0.07));
  CHECK(r.ratio == doctest::Approx(20.0));
  CHECK_FALSE(r.exact_reproduction);

  // exact reproduction flags an infinite ratio
  RatioReport z = compute_ratio(curve, pts, {0.0, 0.0});
  CHECK(z.exact_reproduction);
  CHECK(std::isinf(z.ratio));

  CHECK_THROWS_AS(compute_ratio({}, pts, {0.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(compute_ratio(curve, pts, {0.0}), std::invalid_argument);
}
