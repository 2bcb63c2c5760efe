#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "rieszspec/fde_solver.hpp"
#include "rieszspec/interp.hpp"
#include "rieszspec/specialfn.hpp"

using namespace rieszspec;

TEST_CASE("stiffness diagonal values") {
  const RieszOrder o = make_riesz_order(1.27);
  const auto sys = assemble_petrov_galerkin(o, [](double) { return 0.0; }, 5, 16);
  for (int j = 0; j <= 5; ++j) {
    CHECK(sys.stiffness_diag[j] ==
          doctest::Approx(-gamma_ratio(j + 1.0 + 1.27, j + 1.0)).epsilon(1e-14));
    CHECK(sys.stiffness_diag[j] < 0.0);
    if (j > 0) CHECK(std::abs(sys.stiffness_diag[j]) > std::abs(sys.stiffness_diag[j - 1]));
  }
  // mass is symmetric with positive diagonal
  for (int i = 0; i <= 5; ++i) {
    CHECK(sys.mass(i, i) > 0.0);
    for (int j = 0; j <= 5; ++j) {
      CHECK(sys.mass(i, j) == doctest::Approx(sys.mass(j, i)).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(assemble_petrov_galerkin(make_riesz_order(0.5), [](double) { return 0.0; }, 4, 8),
                  std::domain_error);
}

TEST_CASE("fractional-form diagonality under exact quadrature") {
  for (double alpha : {1.27, 1.84}) {
    const RieszOrder o = make_riesz_order(alpha);
    const double a = alpha / 2.0;
    const int N = 12;
    const NodeSet q = gauss_jacobi({a, a}, N + 2);
    double max_off = 0.0, min_diag = 1e300;
    for (int i = 0; i <= N; ++i) {
      for (int j = 0; j <= N; ++j) {
        double s = 0.0;
        for (int m = 0; m < q.size(); ++m) {
          s += q.weights[m] * riesz_gjf(o, j, q.points[m]) * jacobi_eval({a, a}, i, q.points[m]);
        }
        if (i == j) {
          min_diag = std::min(min_diag, std::abs(s));
          // diagonal entry equals d_j gamma_j
          CHECK(s == doctest::Approx(-gamma_ratio(j + 1.0 + alpha, j + 1.0) *
                                     jacobi_norm({a, a}, j))
                         .epsilon(1e-11));
        } else {
          max_off = std::max(max_off, std::abs(s));
        }
      }
    }
    CHECK(max_off < 1e-11 * min_diag);
  }
}

TEST_CASE("manufactured single-mode exactness, both solvers") {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> pa(1.05, 1.95);
  for (int trial = 0; trial < 6; ++trial) {
    const double alpha = pa(rng);
    const RieszOrder o = make_riesz_order(alpha);
    const int n0 = trial % 4;
    const int N = 6 + trial;
    GjfExpansion mode{o, std::vector<double>(n0 + 1, 0.0)};
    mode.coeffs[n0] = 1.0;
    const ManufacturedRhs f = manufactured_rhs(mode);

    const SolveResult pg = solve_petrov_galerkin(o, f, N);
    const SolveResult co = solve_collocation(o, f, N);
    CHECK_FALSE(co.conditioning_warning);
    for (int n = 0; n <= N; ++n) {
      const double expect = (n == n0) ? 1.0 : 0.0;
      CHECK(std::abs(pg.u.coeffs[n] - expect) < 1e-10);
      CHECK(std::abs(co.u.coeffs[n] - expect) < 1e-9);
    }
    // nodal recovery for collocation
    const auto sys = assemble_collocation(o, f, N);
    for (double x : sys.nodes.points) {
      CHECK(std::abs(co.u(x) - mode(x)) < 1e-9 * (1.0 + std::abs(mode(x))));
    }
  }
}

TEST_CASE("generic-quadrature Petrov-Galerkin path") {
  // same single-mode problem through the black-box rhs quadrature
  const RieszOrder o = make_riesz_order(1.4);
  GjfExpansion mode{o, {0.0, 0.0, 1.0}};
  const ManufacturedRhs f = manufactured_rhs(mode);
  const SolveResult pg = solve_petrov_galerkin(o, [&](double x) { return f(x); }, 8);
  for (int n = 0; n <= 8; ++n) {
    const double expect = (n == 2) ? 1.0 : 0.0;
    CHECK(std::abs(pg.u.coeffs[n] - expect) < 1e-10);
  }
}

TEST_CASE("boundary conditions are structural") {
  const RieszOrder o = make_riesz_order(1.84);
  GjfExpansion mode{o, {0.3, -0.7, 0.2}};
  const SolveResult pg = solve_petrov_galerkin(o, manufactured_rhs(mode), 7);
  CHECK(pg.u(1.0) == 0.0);
  CHECK(pg.u(-1.0) == 0.0);
}

TEST_CASE("residual structure") {
  const RieszOrder o = make_riesz_order(1.52);
  auto v = [](long double x) { return 1.0L / (1.0L + 0.5L * x * x); };
  const GjfExpansion truth = gjf_project_x(v, o, 40);
  const ManufacturedRhs f = manufactured_rhs(truth);
  const int N = 12;

  // collocation: residual at its own nodes is machine-zero scale
  const SolveResult co = solve_collocation(o, f, N);
  const auto sys = assemble_collocation(o, f, N);
  for (double x : sys.nodes.points) {
    const double resid = riesz_of_gjf_expansion(co.u, x) + co.u(x) - f(x);
    CHECK(std::abs(resid) < 1e-10);
  }

  // Petrov-Galerkin: residual at interior samples bounded by the
  // projection-error scale
  const SolveResult pg = solve_petrov_galerkin(o, f, N);
  const GjfExpansion diff = gjf_add(truth, pg.u, 1.0, -1.0);
  double bound = 0.0;
  for (double x : default_grid(101)) {
    bound = std::max(bound, std::abs(riesz_of_gjf_expansion(diff, x)) + std::abs(diff(x)));
  }
  for (double x : default_grid(101)) {
    const double resid = riesz_of_gjf_expansion(pg.u, x) + pg.u(x) - f(x);
    CHECK(std::abs(resid) <= bound * (1.0 + 1e-9) + 1e-12);
  }
}

TEST_CASE("collocation matrix convention: (D + Lambda) V = F") {
  // sample a known GJF u, set f = ^RD^a u + u; then V = v-values at the
  // nodes must satisfy the assembled system
  const RieszOrder o = make_riesz_order(1.3);
  const int N = 6;
  GjfExpansion u{o, {0.2, -0.5, 0.0, 1.1, 0.0, 0.4, -0.3}};
  const ManufacturedRhs f = manufactured_rhs(u);
  const auto sys = assemble_collocation(o, [&](double x) { return f(x); }, N);
  Eigen::VectorXd V(N + 1);
  const double a = o.alpha / 2.0;
  for (int i = 0; i <= N; ++i) {
    double s = 0.0;
    for (int n = 0; n <= N; ++n) s += u.coeffs[n] * jacobi_eval({a, a}, n, sys.nodes.points[i]);
    V(i) = s;  // v(x_i), the weight-stripped value
  }
  Eigen::MatrixXd A = sys.D;
  A.diagonal() += sys.Lambda;
  const Eigen::VectorXd resid = A * V - sys.F;
  CHECK(resid.cwiseAbs().maxCoeff() < 1e-10);
}
