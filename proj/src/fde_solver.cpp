#include "rieszspec/fde_solver.hpp"

#include <cmath>
#include <stdexcept>

#include "rieszspec/errors.hpp"
#include "rieszspec/specialfn.hpp"

namespace rieszspec {

namespace {

void check_solver_order(const RieszOrder& order) {
  if (order.k != 2) {
    throw std::domain_error("fde_solver: the model problem requires 1 < alpha < 2");
  }
}

// (P_j, P_i)_{w^{alpha,alpha}} for the P^{alpha/2,alpha/2} basis, exact
// Gauss-Jacobi(alpha,alpha) quadrature.
Eigen::MatrixXd mass_matrix(const RieszOrder& order, int N) {
  const double a = order.alpha / 2.0;
  const NodeSet q = gauss_jacobi({order.alpha, order.alpha}, N + 2);
  Eigen::MatrixXd P(N + 1, q.size());
  for (int i = 0; i < q.size(); ++i) {
    for (int n = 0; n <= N; ++n) P(n, i) = jacobi_eval({a, a}, n, q.points[i]);
  }
  Eigen::VectorXd w = Eigen::Map<const Eigen::VectorXd>(q.weights.data(), q.size());
  return P * w.asDiagonal() * P.transpose();
}

Eigen::MatrixXd system_matrix(const PetrovGalerkinSystem& sys) {
  const double a = sys.order.alpha / 2.0;
  Eigen::MatrixXd A = sys.mass;
  for (int j = 0; j <= sys.N; ++j) {
    A(j, j) += sys.stiffness_diag[j] * jacobi_norm({a, a}, j);
  }
  return A;
}

SolveResult solve_pg_system(const PetrovGalerkinSystem& sys) {
  const Eigen::MatrixXd A = system_matrix(sys);
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(A);
  if (lu.rcond() < 1e-15) {
    throw solver_error("solve_petrov_galerkin: singular system");
  }
  Eigen::VectorXd c = lu.solve(sys.rhs);
  GjfExpansion u;
  u.order = sys.order;
  u.coeffs.assign(c.data(), c.data() + c.size());
  return SolveResult{std::move(u), false};
}

}  // namespace

double ManufacturedRhs::operator()(double x) const {
  return riesz_of_gjf_expansion(u_true, x) + u_true(x);
}

ManufacturedRhs manufactured_rhs(const GjfExpansion& u_true) { return ManufacturedRhs{u_true}; }

PetrovGalerkinSystem assemble_petrov_galerkin(const RieszOrder& order,
                                              const std::function<double(double)>& f, int N,
                                              int quad_points) {
  check_solver_order(order);
  if (N < 0) throw std::domain_error("assemble_petrov_galerkin: need N >= 0");
  PetrovGalerkinSystem sys;
  sys.order = order;
  sys.N = N;
  sys.stiffness_diag.resize(N + 1);
  for (int j = 0; j <= N; ++j) {
    sys.stiffness_diag[j] = -gamma_ratio(j + 1.0 + order.alpha, j + 1.0);
  }
  sys.mass = mass_matrix(order, N);

  const double a = order.alpha / 2.0;
  const int nq = quad_points > 0 ? quad_points : std::max(N + 2, 600);
  const NodeSet q = gauss_jacobi({a, a}, nq);
  sys.rhs = Eigen::VectorXd::Zero(N + 1);
  for (int i = 0; i < q.size(); ++i) {
    const double wf = q.weights[i] * f(q.points[i]);
    for (int n = 0; n <= N; ++n) sys.rhs(n) += wf * jacobi_eval({a, a}, n, q.points[i]);
  }
  return sys;
}

SolveResult solve_petrov_galerkin(const RieszOrder& order, const std::function<double(double)>& f,
                                  int N, int quad_points) {
  return solve_pg_system(assemble_petrov_galerkin(order, f, N, quad_points));
}

SolveResult solve_petrov_galerkin(const RieszOrder& order, const ManufacturedRhs& f, int N) {
  check_solver_order(order);
  if (f.u_true.order.alpha != order.alpha) {
    throw std::invalid_argument("solve_petrov_galerkin: rhs manufactured for a different alpha");
  }
  PetrovGalerkinSystem sys;
  sys.order = order;
  sys.N = N;
  sys.stiffness_diag.resize(N + 1);
  for (int j = 0; j <= N; ++j) {
    sys.stiffness_diag[j] = -gamma_ratio(j + 1.0 + order.alpha, j + 1.0);
  }
  sys.mass = mass_matrix(order, N);

  // Exact split of the rhs: the Riesz part of f is a polynomial in the
  // test basis, so its inner products collapse by orthogonality; the
  // u_true part folds the GJF weight into w^{alpha,alpha}.
  const double a = order.alpha / 2.0;
  const int M = f.u_true.degree();
  sys.rhs = Eigen::VectorXd::Zero(N + 1);
  for (int i = 0; i <= std::min(N, M); ++i) {
    const double g = gamma_ratio(i + 1.0 + order.alpha, i + 1.0);
    sys.rhs(i) += -g * f.u_true.coeffs[i] * jacobi_norm({a, a}, i);
  }
  const NodeSet q = gauss_jacobi({order.alpha, order.alpha}, (M + N) / 2 + 2);
  for (int i = 0; i < q.size(); ++i) {
    double v = 0.0;
    for (int n = 0; n <= M; ++n) v += f.u_true.coeffs[n] * jacobi_eval({a, a}, n, q.points[i]);
    const double wv = q.weights[i] * v;
    for (int n = 0; n <= N; ++n) sys.rhs(n) += wv * jacobi_eval({a, a}, n, q.points[i]);
  }
  return solve_pg_system(sys);
}

CollocationSystem assemble_collocation(const RieszOrder& order,
                                       const std::function<double(double)>& f, int N) {
  check_solver_order(order);
  if (N < 0) throw std::domain_error("assemble_collocation: need N >= 0");
  const double a = order.alpha / 2.0;
  CollocationSystem sys;
  sys.order = order;
  sys.nodes = gauss_jacobi({a, a}, N + 1);

  // T: nodal -> modal by discrete orthogonality; R: modal -> derivative
  // values, R(i,n) = C(2) G(n+alpha+1)/n! P_n(x_i). D = R T.
  Eigen::MatrixXd P(N + 1, N + 1);  // P(n, j) = P_n(x_j)
  for (int j = 0; j <= N; ++j) {
    for (int n = 0; n <= N; ++n) P(n, j) = jacobi_eval({a, a}, n, sys.nodes.points[j]);
  }
  Eigen::VectorXd w = Eigen::Map<const Eigen::VectorXd>(sys.nodes.weights.data(), N + 1);
  Eigen::VectorXd invnorm(N + 1), g(N + 1);
  for (int n = 0; n <= N; ++n) {
    invnorm(n) = 1.0 / jacobi_norm({a, a}, n);
    g(n) = gamma_ratio(n + 1.0 + order.alpha, n + 1.0);
  }
  const Eigen::MatrixXd T = invnorm.asDiagonal() * P * w.asDiagonal();
  const Eigen::MatrixXd R = -(P.transpose() * g.asDiagonal());
  sys.D = R * T;

  sys.Lambda.resize(N + 1);
  sys.F.resize(N + 1);
  for (int i = 0; i <= N; ++i) {
    const double xi = sys.nodes.points[i];
    sys.Lambda(i) = std::pow(1.0 - xi * xi, a);
    sys.F(i) = f(xi);
  }
  return sys;
}

SolveResult solve_collocation(const RieszOrder& order, const std::function<double(double)>& f,
                              int N) {
  CollocationSystem sys = assemble_collocation(order, f, N);
  Eigen::MatrixXd A = sys.D;
  A.diagonal() += sys.Lambda;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(A);
  const double rc = lu.rcond();
  if (rc == 0.0) {
    throw solver_error("solve_collocation: singular system");
  }
  Eigen::VectorXd V = lu.solve(sys.F);

  const double a = order.alpha / 2.0;
  Eigen::MatrixXd P(N + 1, N + 1);
  for (int j = 0; j <= N; ++j) {
    for (int n = 0; n <= N; ++n) P(n, j) = jacobi_eval({a, a}, n, sys.nodes.points[j]);
  }
  Eigen::VectorXd w = Eigen::Map<const Eigen::VectorXd>(sys.nodes.weights.data(), N + 1);
  Eigen::VectorXd invnorm(N + 1);
  for (int n = 0; n <= N; ++n) invnorm(n) = 1.0 / jacobi_norm({a, a}, n);
  Eigen::VectorXd c = invnorm.asDiagonal() * (P * (w.asDiagonal() * V));

  GjfExpansion u;
  u.order = order;
  u.coeffs.assign(c.data(), c.data() + c.size());
  return SolveResult{std::move(u), rc < 1e-12};
}

}  // namespace rieszspec
