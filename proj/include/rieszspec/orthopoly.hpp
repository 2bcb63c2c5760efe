#ifndef RIESZSPEC_ORTHOPOLY_HPP
#define RIESZSPEC_ORTHOPOLY_HPP

#include <vector>

namespace rieszspec {

/// Exponent pair (a, b) of the Jacobi weight (1-x)^a (1+x)^b; both > -1.
struct JacobiParam {
  double a;
  double b;
};

enum class NodeKind { Lobatto, GaussJacobi, SuperconvPoints };

/// A sorted set of distinct points in [-1,1], optionally carrying
/// quadrature weights of the same length.
struct NodeSet {
  std::vector<double> points;
  std::vector<double> weights;  // empty unless the set is a quadrature rule
  NodeKind kind = NodeKind::GaussJacobi;

  int size() const { return static_cast<int>(points.size()); }
};

enum class PolyBasis { Legendre, Jacobi };

/// Coefficients of a function in a polynomial basis, index = degree.
struct ModalExpansion {
  PolyBasis basis = PolyBasis::Legendre;
  JacobiParam param{0.0, 0.0};  // meaningful when basis == Jacobi
  std::vector<double> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// P_n^{a,b}(x) by the standard three-term recurrence. Evaluation
/// outside [-1,1] is permitted (used by test oracles).
double jacobi_eval(const JacobiParam& p, int n, double x);

/// d/dx P_n^{a,b}(x) = (n+a+b+1)/2 * P_{n-1}^{a+1,b+1}(x).
double jacobi_derivative(const JacobiParam& p, int n, double x);

/// L^2_w norm: gamma_n = 2^{a+b+1} G(n+a+1)G(n+b+1) /
/// ((2n+a+b+1) n! G(n+a+b+1)).
double jacobi_norm(const JacobiParam& p, int n);

/// Gegenbauer C_n^{(lambda)}(x) = (2 lambda)_n/(lambda+1/2)_n *
/// P_n^{lambda-1/2,lambda-1/2}(x); requires lambda > -1/2, lambda != 0.
double gegenbauer_eval(double lambda, int n, double x);

/// Pochhammer-ratio scaling factor (2 lambda)_n / (lambda+1/2)_n.
double gegenbauer_scale(double lambda, int n);

/// All n roots of P_n^{a,b}, sorted, inside (-1,1). Golub-Welsch
/// eigenvalues polished by Newton steps.
NodeSet jacobi_roots(const JacobiParam& p, int n);

/// Gauss-Jacobi rule: nodes = jacobi_roots(p,n), positive weights, exact
/// for integrands (1-x)^a (1+x)^b q(x) with deg q <= 2n-1.
NodeSet gauss_jacobi(const JacobiParam& p, int n);

/// The N+1 Legendre-Lobatto points {-1} + roots of L'_N + {+1}, with the
/// Gauss-Lobatto-Legendre weights 2/(N(N+1) L_N(x)^2).
NodeSet lobatto_nodes(int N);

/// Least-squares slope of log y against log x (log-log rate fits).
double fit_loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace rieszspec

#endif
