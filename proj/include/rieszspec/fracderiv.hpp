#ifndef RIESZSPEC_FRACDERIV_HPP
#define RIESZSPEC_FRACDERIV_HPP

#include <functional>
#include <vector>

#include "rieszspec/orthopoly.hpp"

namespace rieszspec {

enum class KParity { Odd, Even };

/// Riesz derivative order alpha > 0 (non-integer) together with the
/// quantities every formula needs: k = ceil(alpha), the reduced order
/// alpha_star in (0,2), the parity branch of k and the scaling constant
/// c_scale in front of the two-sided Riemann-Liouville combination.
///
/// c_scale = 1/(2 sin(pi g/2)) for odd k, 1/(2 cos(pi g/2)) for even k,
/// with g = k - alpha.
struct RieszOrder {
  double alpha;
  int k;
  double alpha_star;
  KParity parity;
  double c_scale;

  /// Derivative of the k-parity sign C(k): (-1)^{(k-1)/2} odd, (-1)^{k/2} even.
  double parity_sign() const;

  /// alpha - alpha_star, the even integer-order derivative remainder.
  int integer_shift() const { return static_cast<int>(alpha - alpha_star + 0.5); }
};

/// Builds a RieszOrder from alpha; throws std::domain_error if alpha <= 0
/// or alpha is (numerically) an integer.
RieszOrder make_riesz_order(double alpha);

/// Coefficients c_n of u(x) = (1-x^2)^{alpha*/2} sum c_n P_n^{a*,a*}(x)
/// with a* = alpha_star/2. The singular factor is structural: evaluation
/// at +-1 returns exactly 0.
struct GjfExpansion {
  RieszOrder order;
  std::vector<double> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  double operator()(double x) const;
};

GjfExpansion gjf_add(const GjfExpansion& u, const GjfExpansion& w,
                     double cu = 1.0, double cw = 1.0);

// ---------------------------------------------------------------------------
// Closed forms
// ---------------------------------------------------------------------------

/// _{-1}D_x^mu L_n(x) = G(n+1)/G(n-mu+1) (1+x)^{-mu} P_n^{mu,-mu}(x),
/// 0 < mu < 1. Throws endpoint_error at x = -1 (genuine singularity).
double rl_left_legendre(double mu, int n, double x);

/// _xD_1^mu L_n(x) = G(n+1)/G(n-mu+1) (1-x)^{-mu} P_n^{-mu,mu}(x).
/// Throws endpoint_error at x = +1.
double rl_right_legendre(double mu, int n, double x);

/// ^R D^alpha (L_{N-1} - L_{N+1})(x) for 0 < alpha < 1, finite on all of
/// [-1,1]; at x = +-1 the removable singularity is evaluated as its limit.
double riesz_lobatto_poly(const RieszOrder& order, int N, double x);

/// ^R D^alpha of the GJF (1-x^2)^{alpha*/2} P_n^{a*,a*}(x). For
/// 0 < alpha < 2 this is C(k) G(n+alpha+1)/n! P_n^{alpha/2,alpha/2}(x);
/// for alpha > 2 the image gains integer derivatives, landing on
/// P_{n-m}^{alpha*/2+m, alpha*/2+m} with m = alpha - alpha*.
double riesz_gjf(const RieszOrder& order, int n, double x);

/// sum_n c_n riesz_gjf(order, n, x).
double riesz_of_gjf_expansion(const GjfExpansion& u, double x);

/// ^R D^alpha of a Legendre expansion sum a_n L_n at interior x, via the
/// two-sided closed forms; 0 < alpha < 1. Extended-precision internal
/// accumulation (the four-term combination cancels heavily near the
/// superconvergence zeros). Throws endpoint_error at |x| = 1.
double riesz_of_legendre_expansion(const ModalExpansion& u, const RieszOrder& order, double x);

// ---------------------------------------------------------------------------
// Oracles (test-grade, independent of the closed forms above)
// ---------------------------------------------------------------------------

/// One term coef * (1+x)^exponent of a shifted-power expansion. The
/// coefficient is held in long double: shifted-power expansions of
/// high-degree polynomials cancel by many orders, so coefficient
/// rounding is the oracle's accuracy limit.
struct PowerTerm {
  double exponent;
  long double coef;
};

/// The exact (1+x)-power expansion of the Legendre polynomial L_n,
/// L_n(x) = sum_j C(n,j) C(n+j,j) (-1)^{n+j} 2^{-j} (1+x)^j, with the
/// binomials built by exact integer recurrences.
std::vector<PowerTerm> legendre_shifted_powers(int n);

/// Exact Riesz derivative of u = sum coef (1+x)^p by the Riemann-Liouville
/// power rule, term by term, combined per Def. of the Riesz derivative.
/// The right-sided derivative needs u as a (1-x)-power expansion: when all
/// exponents are nonnegative integers it is derived by exact binomial
/// re-expansion; otherwise `terms` is mirrored, which assumes u even.
/// Accumulates in long double. Requires every exponent > alpha - 1.
double riesz_power_oracle(const RieszOrder& order, const std::vector<PowerTerm>& terms, double x);

/// General form with an explicitly supplied right-side expansion
/// u = sum right_terms[i].coef * (1-x)^{right_terms[i].exponent}.
double riesz_power_oracle(const RieszOrder& order, const std::vector<PowerTerm>& left_terms,
                          const std::vector<PowerTerm>& right_terms, double x);

/// The (1-x)-power expansion of sum coef (1+x)^p for integer p >= 0.
std::vector<PowerTerm> reexpand_powers(const std::vector<PowerTerm>& terms);

/// Left Riemann-Liouville derivative of a general f at interior x by
/// weakly-singular Gauss-Jacobi quadrature of the fractional integral
/// followed by differentiation of a local Chebyshev-stencil polynomial
/// fit. sigma is a known endpoint exponent of f at the integration
/// endpoint -1 (f ~ (1+t)^sigma * smooth), absorbed into the quadrature
/// weight; pass 0 for smooth f.
double rl_left_quad_oracle(double alpha, const std::function<double(double)>& f, double x,
                           double sigma = 0.0, int quad_points = 64);

double rl_right_quad_oracle(double alpha, const std::function<double(double)>& f, double x,
                            double sigma = 0.0, int quad_points = 64);

/// c_scale * (left + right) with the two oracles above; sigma_left/right
/// are the endpoint exponents of f at -1 and +1.
double riesz_quad_oracle(const RieszOrder& order, const std::function<double(double)>& f, double x,
                         double sigma_left = 0.0, double sigma_right = 0.0, int quad_points = 64);

}  // namespace rieszspec

#endif
