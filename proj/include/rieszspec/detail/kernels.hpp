#ifndef RIESZSPEC_DETAIL_KERNELS_HPP
#define RIESZSPEC_DETAIL_KERNELS_HPP

// Extended-precision internal kernels. The public API is double; these
// long-double paths back the places where double accumulation measurably
// loses the signal (power-rule oracle, modal Riesz evaluation near
// superconvergence zeros, GJF modal transforms at large N).

#include <vector>

namespace rieszspec::detail {

using xreal = long double;

xreal lgamma_x(xreal x);
xreal gamma_ratio_x(xreal a, xreal b);

/// P_n^{a,b}(x), three-term recurrence in long double.
xreal jacobi_eval_x(xreal a, xreal b, int n, xreal x);

/// Evaluates P_0..P_n at x in one recurrence sweep.
void jacobi_eval_all_x(xreal a, xreal b, int n, xreal x, std::vector<xreal>& out);

xreal jacobi_deriv_x(xreal a, xreal b, int n, xreal x);

xreal jacobi_norm_x(xreal a, xreal b, int n);

/// Gauss-Jacobi nodes in long double: double-precision seeds
/// (Golub-Welsch) polished by Newton in long double; symmetric weights
/// get exactly mirrored points.
std::vector<xreal> jacobi_nodes_x(double a, double b, int n);

/// Nodes plus weights; weights by the Christoffel-function identity
/// w_i = 1/sum_j phi_j(x_i)^2 with phi orthonormal.
void gauss_jacobi_x(double a, double b, int n, std::vector<xreal>& x, std::vector<xreal>& w);

/// Double-precision Golub-Welsch seed nodes (sorted eigenvalues of the
/// symmetric tridiagonal recurrence matrix).
std::vector<double> golub_welsch_nodes(double a, double b, int n);

}  // namespace rieszspec::detail

#endif
