#ifndef RIESZSPEC_SPECIALFN_HPP
#define RIESZSPEC_SPECIALFN_HPP

namespace rieszspec {

/// A ratio Gamma(numerator_arg)/Gamma(denominator_arg), evaluated in
/// log space so that arguments far beyond the overflow point of
/// Gamma itself (~171) stay finite.
struct GammaRatio {
  double numerator_arg;
  double denominator_arg;
  double value;
};

/// ln Gamma(x) for x > 0 (Lanczos approximation, g = 7, 9 coefficients).
/// Throws std::domain_error for x <= 0.
double ln_gamma(double x);

/// Gamma(a)/Gamma(b) via exp(ln_gamma(a) - ln_gamma(b)); a, b > 0.
double gamma_ratio(double a, double b);

GammaRatio make_gamma_ratio(double a, double b);

/// Generalized binomial coefficient (alpha choose m) as the product
/// prod_{j=1..m} (alpha - j + 1)/j; exact zero for integer alpha < m.
double binom_real(double alpha, int m);

}  // namespace rieszspec

#endif
