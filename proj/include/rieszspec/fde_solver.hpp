#ifndef RIESZSPEC_FDE_SOLVER_HPP
#define RIESZSPEC_FDE_SOLVER_HPP

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "rieszspec/fracderiv.hpp"
#include "rieszspec/orthopoly.hpp"

namespace rieszspec {

// Model problem: ^R D^alpha u + u = f on (-1,1), u(+-1) = 0, 1 < alpha < 2.

/// Petrov-Galerkin assembly for trial GJFs and test polynomials
/// P_i^{alpha/2,alpha/2}: the fractional form is diagonal with entries
/// d_j gamma_j, d_j = -G(j+1+alpha)/G(j+1); the mass matrix is the
/// Jacobi(alpha,alpha) Gram matrix of the P^{alpha/2,alpha/2} basis.
struct PetrovGalerkinSystem {
  RieszOrder order;
  int N = 0;
  std::vector<double> stiffness_diag;  // d_j
  Eigen::MatrixXd mass;                // (P_j, P_i)_{w^{alpha,alpha}}
  Eigen::VectorXd rhs;                 // (f, P_i)_{w^{alpha/2,alpha/2}}
};

/// Collocation system (D + Lambda) V = F at the Gauss-Jacobi
/// (alpha/2,alpha/2) nodes; D(i,j) = ^R D^alpha l^_j(x_i) where l^_j is
/// the GJF-Lagrange basis.
struct CollocationSystem {
  RieszOrder order;
  NodeSet nodes;
  Eigen::MatrixXd D;
  Eigen::VectorXd Lambda;  // (1 - x_i^2)^{alpha/2}
  Eigen::VectorXd F;
};

/// Manufactured right-hand side f = ^R D^alpha u_true + u_true for a
/// true solution given as a (truncated) GJF expansion. Callable as a
/// plain function of x; also exposes the structure (the Riesz part is a
/// polynomial in the P^{alpha/2,alpha/2} basis) so that Galerkin right
/// sides can be assembled by exact quadrature.
struct ManufacturedRhs {
  GjfExpansion u_true;

  double operator()(double x) const;
};

ManufacturedRhs manufactured_rhs(const GjfExpansion& u_true);

struct SolveResult {
  GjfExpansion u;
  bool conditioning_warning = false;
};

/// Generic Petrov-Galerkin solve; the rhs inner products use
/// Gauss-Jacobi(alpha/2,alpha/2) with max(N+2, 600) nodes
/// (quad_points = 0 picks that default).
SolveResult solve_petrov_galerkin(const RieszOrder& order, const std::function<double(double)>& f,
                                  int N, int quad_points = 0);

/// Manufactured-problem overload: assembles the rhs exactly by splitting
/// (f, P_i) into the orthogonality term of the Riesz part and the
/// (v, P_i)_{w^{alpha,alpha}} term of the solution part.
SolveResult solve_petrov_galerkin(const RieszOrder& order, const ManufacturedRhs& f, int N);

/// Spectral collocation solve at the Gauss-Jacobi(alpha/2,alpha/2)
/// nodes; D assembled as R*T (modal transform composed with the GJF
/// derivative images). Sets conditioning_warning when the estimated
/// condition number of D + Lambda exceeds 1e12.
SolveResult solve_collocation(const RieszOrder& order, const std::function<double(double)>& f, int N);

/// Assembled systems, exposed for inspection and tests.
PetrovGalerkinSystem assemble_petrov_galerkin(const RieszOrder& order,
                                              const std::function<double(double)>& f, int N,
                                              int quad_points = 0);
CollocationSystem assemble_collocation(const RieszOrder& order,
                                       const std::function<double(double)>& f, int N);

}  // namespace rieszspec

#endif
