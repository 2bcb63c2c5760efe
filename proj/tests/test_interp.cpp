#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "rieszspec/errors.hpp"
#include "rieszspec/interp.hpp"
#include "rieszspec/orthopoly.hpp"

using namespace rieszspec;

namespace {

double poly9(double x) { return std::pow(1.0 + x, 9) * std::pow(1.0 - x, 9); }

}  // namespace

TEST_CASE("lobatto_interpolate reproduces polynomials") {
  // f = L_3 at N = 5 -> coefficients (0,0,0,1,0,0)
  const Interpolant i3 = lobatto_interpolate([](double x) { return jacobi_eval({0, 0}, 3, x); }, 5);
  REQUIRE(i3.legendre().degree() == 5);
  for (int n = 0; n <= 5; ++n) {
    CHECK(i3.legendre().coeffs[n] == doctest::Approx(n == 3 ? 1.0 : 0.0).epsilon(1e-13));
  }

  // poly9 at N = 18 is exact
  const Interpolant i18 = lobatto_interpolate(poly9, 18);
  for (double x : default_grid(101)) {
    CHECK(std::abs(i18(x) - poly9(x)) < 1e-10);
  }
}

TEST_CASE("lobatto polynomial exactness property") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> pc(-1.0, 1.0);
  for (int trial = 0; trial < 5; ++trial) {
    const int N = 6 + 2 * trial;
    std::vector<double> coeffs(N + 1);
    for (auto& c : coeffs) c = pc(rng);
    auto f = [&](double x) {
      double s = 0.0;
      for (int n = 0; n <= N; ++n) s += coeffs[n] * jacobi_eval({0, 0}, n, x);
      return s;
    };
    const Interpolant it = lobatto_interpolate(f, N);
    for (int n = 0; n <= N; ++n) {
      CHECK(it.legendre().coeffs[n] == doctest::Approx(coeffs[n]).epsilon(1e-10));
    }
  }
}

TEST_CASE("lobatto node reproduction") {
  const Interpolant it = lobatto_interpolate([](double x) { return std::sin(2.5 * x) + 0.3; }, 12);
  for (int i = 0; i < it.nodes.size(); ++i) {
    const double x = it.nodes.points[i];
    const double f = std::sin(2.5 * x) + 0.3;
    CHECK(std::abs(it(x) - f) <= 1e-11 * (1.0 + std::abs(f)));
  }
  CHECK_THROWS_AS(lobatto_interpolate([](double) { return std::nan(""); }, 6),
                  std::invalid_argument);
}

TEST_CASE("gjf_interpolate weight-mode reproduction") {
  for (double alpha : {0.4, 1.7}) {
    const RieszOrder o = make_riesz_order(alpha);
    const double a = alpha / 2.0;
    // f = (1-x^2)^{alpha/2} -> c = (1, 0, ..., 0)
    const Interpolant it =
        gjf_interpolate([&](double x) { return std::pow(1.0 - x * x, a); }, o, 7);
    REQUIRE(it.gjf().degree() == 7);
    CHECK(it.gjf().coeffs[0] == doctest::Approx(1.0).epsilon(1e-13));
    for (int n = 1; n <= 7; ++n) CHECK(std::abs(it.gjf().coeffs[n]) < 1e-13);
  }
}

TEST_CASE("gjf polynomial exactness") {
  std::mt19937 rng(77);
  std::uniform_real_distribution<double> pc(-1.0, 1.0);
  const RieszOrder o = make_riesz_order(1.3);
  const double a = o.alpha_star / 2.0;
  const int N = 9;
  std::vector<double> coeffs(N + 1);
  for (auto& c : coeffs) c = pc(rng);
  auto f = [&](double x) {
    double s = 0.0;
    for (int n = 0; n <= N; ++n) s += coeffs[n] * jacobi_eval({a, a}, n, x);
    return std::pow(1.0 - x * x, a) * s;
  };
  const Interpolant it = gjf_interpolate(f, o, N);
  for (int n = 0; n <= N; ++n) {
    CHECK(it.gjf().coeffs[n] == doctest::Approx(coeffs[n]).epsilon(1e-10));
  }
}

TEST_CASE("gjf node reproduction and boundary") {
  const RieszOrder o = make_riesz_order(0.7);
  auto f = [&](double x) { return std::pow(1.0 - x * x, 0.35) / (1.0 + x * x); };
  const Interpolant it = gjf_interpolate(f, o, 10);
  for (int i = 0; i < it.nodes.size(); ++i) {
    const double x = it.nodes.points[i];
    CHECK(std::abs(it(x) - f(x)) <= 1e-11 * (1.0 + std::abs(f(x))));
  }
  CHECK(it(1.0) == 0.0);
  CHECK(it(-1.0) == 0.0);
}

TEST_CASE("gjf interpolation nodes match the superconv prescription") {
  const RieszOrder o = make_riesz_order(1.5);
  const Interpolant it = gjf_interpolate([](double) { return 0.0; }, o, 6);
  const NodeSet roots = jacobi_roots({0.75, 0.75}, 7);
  REQUIRE(it.nodes.size() == 7);
  for (int i = 0; i < 7; ++i) {
    CHECK(it.nodes.points[i] == roots.points[i]);  // bit-identical, shared path
  }
}

TEST_CASE("riesz_error_curve zero when truth is own derivative") {
  const RieszOrder o = make_riesz_order(0.5);
  const Interpolant it = lobatto_interpolate(poly9, 11);
  auto own = [&](double x) { return riesz_of_legendre_expansion(it.legendre(), o, x); };
  for (const auto& [x, e] : riesz_error_curve(it, o, own, default_grid(101))) {
    (void)x;
    CHECK(std::abs(e) < 1e-12);
  }
}

TEST_CASE("riesz_error_curve gjf geometric decay rough check") {
  const RieszOrder o = make_riesz_order(1.7);
  auto v = [](long double x) { return 1.0L / (1.0L + (x + 3.0L) * (x + 3.0L)); };
  const GjfExpansion truth = gjf_project_x(v, o, 40);
  auto u = [&](long double x) { return powl(1.0L - x * x, 0.85L) * v(x); };
  double prev = 0.0;
  for (int N : {10, 14}) {
    const Interpolant it = gjf_interpolate_x(u, o, N);
    double gmax = 0.0;
    for (const auto& [x, e] : riesz_error_curve(it, truth, default_grid(301))) {
      (void)x;
      gmax = std::max(gmax, std::abs(e));
    }
    if (prev > 0.0) {
      // 4 steps of roughly rho^-1 each, rho ~ 6: at least a 100x drop
      CHECK(gmax < prev / 100.0);
    }
    prev = gmax;
  }
}

TEST_CASE("endpoint grid rejection for the singular lobatto path") {
  const RieszOrder o = make_riesz_order(0.5);
  const Interpolant it = lobatto_interpolate(poly9, 8);
  std::vector<double> bad = {-1.0, 0.0, 1.0};
  CHECK_THROWS_AS(riesz_error_curve(it, o, [](double) { return 0.0; }, bad), endpoint_error);
}
