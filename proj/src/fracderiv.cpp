#include "rieszspec/fracderiv.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rieszspec/detail/kernels.hpp"
#include "rieszspec/errors.hpp"
#include "rieszspec/specialfn.hpp"

namespace rieszspec {

using detail::xreal;

double RieszOrder::parity_sign() const { return parity == KParity::Odd ? 1.0 : -1.0; }

RieszOrder make_riesz_order(double alpha) {
  if (!(alpha > 0.0)) {
    throw std::domain_error("RieszOrder: alpha must be positive");
  }
  const double r = std::round(alpha);
  if (std::abs(alpha - r) < 1e-12) {
    throw std::domain_error("RieszOrder: alpha must be non-integer");
  }
  RieszOrder o;
  o.alpha = alpha;
  o.k = static_cast<int>(std::ceil(alpha));
  o.parity = (o.k % 2 == 1) ? KParity::Odd : KParity::Even;
  if (alpha < 2.0) {
    o.alpha_star = alpha;
  } else {
    o.alpha_star = (o.k % 2 == 1) ? alpha - o.k + 1 : alpha - o.k + 2;
  }
  const double g = o.k - alpha;
  o.c_scale = (o.k % 2 == 1) ? 1.0 / (2.0 * std::sin(M_PI * g / 2.0))
                             : 1.0 / (2.0 * std::cos(M_PI * g / 2.0));
  return o;
}

double GjfExpansion::operator()(double x) const {
  if (std::abs(x) > 1.0) {
    throw std::domain_error("GjfExpansion: evaluation outside [-1,1]");
  }
  if (x == 1.0 || x == -1.0) return 0.0;
  const double a = order.alpha_star / 2.0;
  std::vector<xreal> p;
  detail::jacobi_eval_all_x(a, a, degree(), x, p);
  xreal s = 0.0L;
  for (std::size_t n = 0; n < coeffs.size(); ++n) s += static_cast<xreal>(coeffs[n]) * p[n];
  return static_cast<double>(std::pow(1.0 - x * x, a) * static_cast<double>(s));
}

GjfExpansion gjf_add(const GjfExpansion& u, const GjfExpansion& w, double cu, double cw) {
  if (u.order.alpha != w.order.alpha) {
    throw std::invalid_argument("gjf_add: mismatched orders");
  }
  GjfExpansion out;
  out.order = u.order;
  out.coeffs.assign(std::max(u.coeffs.size(), w.coeffs.size()), 0.0);
  for (std::size_t n = 0; n < u.coeffs.size(); ++n) out.coeffs[n] += cu * u.coeffs[n];
  for (std::size_t n = 0; n < w.coeffs.size(); ++n) out.coeffs[n] += cw * w.coeffs[n];
  return out;
}

// ---------------------------------------------------------------------------

namespace {

void check_mu(double mu) {
  if (!(mu > 0.0) || !(mu < 1.0)) {
    throw std::domain_error("rl derivative: order must lie in (0,1)");
  }
}

}  // namespace

double rl_left_legendre(double mu, int n, double x) {
  check_mu(mu);
  if (x == -1.0) {
    throw endpoint_error("rl_left_legendre: singular at x = -1");
  }
  if (x < -1.0 || x > 1.0) {
    throw std::domain_error("rl_left_legendre: x must lie in (-1,1]");
  }
  return gamma_ratio(n + 1.0, n - mu + 1.0) * std::pow(1.0 + x, -mu) *
         jacobi_eval({mu, -mu}, n, x);
}

double rl_right_legendre(double mu, int n, double x) {
  check_mu(mu);
  if (x == 1.0) {
    throw endpoint_error("rl_right_legendre: singular at x = +1");
  }
  if (x < -1.0 || x > 1.0) {
    throw std::domain_error("rl_right_legendre: x must lie in [-1,1)");
  }
  return gamma_ratio(n + 1.0, n - mu + 1.0) * std::pow(1.0 - x, -mu) *
         jacobi_eval({-mu, mu}, n, x);
}

double riesz_lobatto_poly(const RieszOrder& order, int N, double x) {
  if (order.k != 1) {
    throw std::domain_error("riesz_lobatto_poly: requires 0 < alpha < 1");
  }
  if (N < 2) throw std::domain_error("riesz_lobatto_poly: need N >= 2");
  if (std::abs(x) > 1.0) {
    throw std::domain_error("riesz_lobatto_poly: x must lie in [-1,1]");
  }
  const double a = order.alpha;
  const double r1 = gamma_ratio(N, N - a);
  const double r2 = gamma_ratio(N + 2.0, N + 2.0 - a);
  // (1+-x)^{-a} brackets vanish linearly at the matching endpoint, so the
  // limit there is carried by the opposite side alone.
  if (x == 1.0) {
    const double left = r1 * jacobi_eval({a, -a}, N - 1, 1.0) - r2 * jacobi_eval({a, -a}, N + 1, 1.0);
    return order.c_scale * std::pow(2.0, -a) * left;
  }
  if (x == -1.0) {
    const double right =
        r1 * jacobi_eval({-a, a}, N - 1, -1.0) - r2 * jacobi_eval({-a, a}, N + 1, -1.0);
    return order.c_scale * std::pow(2.0, -a) * right;
  }
  const double left =
      r1 * jacobi_eval({a, -a}, N - 1, x) - r2 * jacobi_eval({a, -a}, N + 1, x);
  const double right =
      r1 * jacobi_eval({-a, a}, N - 1, x) - r2 * jacobi_eval({-a, a}, N + 1, x);
  return order.c_scale * (std::pow(1.0 + x, -a) * left + std::pow(1.0 - x, -a) * right);
}

double riesz_gjf(const RieszOrder& order, int n, double x) {
  if (n < 0) throw std::domain_error("riesz_gjf: negative degree");
  const int m = order.integer_shift();
  if (n < m) return 0.0;
  const double a = order.alpha_star / 2.0 + m;
  return order.parity_sign() * std::pow(2.0, -m) *
         gamma_ratio(n + order.alpha + 1.0, n + 1.0) * jacobi_eval({a, a}, n - m, x);
}

double riesz_of_gjf_expansion(const GjfExpansion& u, double x) {
  const RieszOrder& o = u.order;
  const int m = o.integer_shift();
  const int N = u.degree();
  if (N < m) return 0.0;
  const xreal a = static_cast<xreal>(o.alpha_star) / 2 + m;
  std::vector<xreal> p;
  detail::jacobi_eval_all_x(a, a, N - m, x, p);
  xreal s = 0.0L;
  for (int n = m; n <= N; ++n) {
    if (u.coeffs[n] == 0.0) continue;
    const xreal g = detail::gamma_ratio_x(n + static_cast<xreal>(o.alpha) + 1,
                                          static_cast<xreal>(n) + 1);
    s += static_cast<xreal>(u.coeffs[n]) * g * p[n - m];
  }
  return static_cast<double>(static_cast<xreal>(o.parity_sign()) * powl(2.0L, -m) * s);
}

double riesz_of_legendre_expansion(const ModalExpansion& u, const RieszOrder& order, double x) {
  if (order.k != 1) {
    throw std::domain_error("riesz_of_legendre_expansion: requires 0 < alpha < 1");
  }
  if (u.basis != PolyBasis::Legendre) {
    throw std::invalid_argument("riesz_of_legendre_expansion: Legendre expansion required");
  }
  if (std::abs(x) >= 1.0) {
    throw endpoint_error("riesz_of_legendre_expansion: singular at |x| = 1");
  }
  const int N = u.degree();
  const xreal a = order.alpha;
  std::vector<xreal> pl, pr;
  detail::jacobi_eval_all_x(a, -a, N, x, pl);
  detail::jacobi_eval_all_x(-a, a, N, x, pr);
  const xreal wl = powl(1.0L + x, -a);
  const xreal wr = powl(1.0L - x, -a);
  xreal s = 0.0L;
  for (int n = 0; n <= N; ++n) {
    if (u.coeffs[n] == 0.0) continue;
    const xreal g =
        detail::gamma_ratio_x(static_cast<xreal>(n) + 1, static_cast<xreal>(n) + 1 - a);
    s += static_cast<xreal>(u.coeffs[n]) * g * (wl * pl[n] + wr * pr[n]);
  }
  return static_cast<double>(static_cast<xreal>(order.c_scale) * s);
}

// ---------------------------------------------------------------------------
// Power-rule oracle
// ---------------------------------------------------------------------------

std::vector<PowerTerm> legendre_shifted_powers(int n) {
  if (n < 0) throw std::domain_error("legendre_shifted_powers: negative degree");
  if (n > 30) {
    // C(2n, n) must stay exactly representable in the integer recurrences
    throw std::domain_error("legendre_shifted_powers: degree too large for exact binomials");
  }
  std::vector<PowerTerm> t;
  t.reserve(n + 1);
  const long double sn = (n % 2 == 0) ? 1.0L : -1.0L;
  unsigned long long cnj = 1;   // C(n, j), exact integer recurrence
  unsigned long long cnjj = 1;  // C(n+j, j)
  for (int j = 0; j <= n; ++j) {
    if (j > 0) {
      cnj = cnj * (n - j + 1) / j;
      cnjj = cnjj * (n + j) / j;
    }
    const long double sj = (j % 2 == 0) ? 1.0L : -1.0L;
    t.push_back({static_cast<double>(j),
                 sn * sj * static_cast<long double>(cnj) * static_cast<long double>(cnjj) *
                     powl(2.0L, -j)});
  }
  return t;
}

std::vector<PowerTerm> reexpand_powers(const std::vector<PowerTerm>& terms) {
  int pmax = 0;
  for (const auto& t : terms) {
    const double r = std::round(t.exponent);
    if (t.exponent < 0.0 || std::abs(t.exponent - r) > 1e-12) {
      throw std::invalid_argument("reexpand_powers: exponents must be nonnegative integers");
    }
    pmax = std::max(pmax, static_cast<int>(r));
  }
  std::vector<xreal> out(pmax + 1, 0.0L);
  for (const auto& t : terms) {
    const int p = static_cast<int>(std::round(t.exponent));
    // (1+x)^p = sum_j C(p,j) 2^{p-j} (-1)^j (1-x)^j
    xreal binom = 1.0L;
    for (int j = 0; j <= p; ++j) {
      if (j > 0) binom = binom * (p - j + 1) / j;
      const xreal sign = (j % 2 == 0) ? 1.0L : -1.0L;
      out[j] += static_cast<xreal>(t.coef) * binom * powl(2.0L, p - j) * sign;
    }
  }
  std::vector<PowerTerm> res;
  res.reserve(out.size());
  for (int j = 0; j <= pmax; ++j) {
    res.push_back({static_cast<double>(j), out[j]});
  }
  return res;
}

namespace {

// sum coef G(p+1)/G(p+1-alpha) y^{p-alpha}, long double accumulation
xreal power_rule_sum(const std::vector<PowerTerm>& terms, double alpha, xreal y) {
  const xreal al = alpha;
  xreal s = 0.0L;
  for (const auto& t : terms) {
    if (!(t.exponent > alpha - 1.0)) {
      throw std::domain_error("riesz_power_oracle: exponent must exceed alpha - 1");
    }
    if (t.coef == 0.0) continue;
    const xreal p = t.exponent;
    const xreal g = expl(lgammal(p + 1) - lgammal(p + 1 - al));
    s += static_cast<xreal>(t.coef) * g * powl(y, p - al);
  }
  return s;
}

bool all_integer_exponents(const std::vector<PowerTerm>& terms) {
  for (const auto& t : terms) {
    if (t.exponent < 0.0 || std::abs(t.exponent - std::round(t.exponent)) > 1e-12) return false;
  }
  return true;
}

}  // namespace

double riesz_power_oracle(const RieszOrder& order, const std::vector<PowerTerm>& left_terms,
                          const std::vector<PowerTerm>& right_terms, double x) {
  const xreal left = power_rule_sum(left_terms, order.alpha, 1.0L + static_cast<xreal>(x));
  const xreal right = power_rule_sum(right_terms, order.alpha, 1.0L - static_cast<xreal>(x));
  return static_cast<double>(static_cast<xreal>(order.c_scale) * (left + right));
}

double riesz_power_oracle(const RieszOrder& order, const std::vector<PowerTerm>& terms, double x) {
  if (all_integer_exponents(terms)) {
    return riesz_power_oracle(order, terms, reexpand_powers(terms), x);
  }
  // non-integer powers cannot be re-expanded exactly: mirror the list,
  // which represents the right side correctly for even u
  return riesz_power_oracle(order, terms, terms, x);
}

// ---------------------------------------------------------------------------
// Weakly-singular quadrature oracle
// ---------------------------------------------------------------------------

namespace {

struct StencilFit {
  // Chebyshev interpolation on m Gauss points of [x-H, x+H]
  static constexpr int m = 9;

  static double differentiate(const std::function<double(double)>& g, double x, double H, int k) {
    double ys[m];
    double coef[m];
    for (int j = 0; j < m; ++j) {
      const double tj = std::cos(M_PI * (2 * j + 1) / (2.0 * m));
      ys[j] = g(x + H * tj);
    }
    for (int kk = 0; kk < m; ++kk) {
      double s = 0.0;
      for (int j = 0; j < m; ++j) {
        s += ys[j] * std::cos(kk * M_PI * (2 * j + 1) / (2.0 * m));
      }
      coef[kk] = 2.0 * s / m;
    }
    coef[0] *= 0.5;
    // differentiate the Chebyshev series k times:
    // d_j = d_{j+2} + 2(j+1) c_{j+1}, then d_0 /= 2
    int deg = m - 1;
    for (int d = 0; d < k; ++d) {
      double der[m + 2] = {0.0};
      for (int j = deg - 1; j >= 0; --j) {
        der[j] = der[j + 2] + 2.0 * (j + 1) * coef[j + 1];
      }
      der[0] *= 0.5;
      for (int j = 0; j < m; ++j) coef[j] = (j <= deg - 1) ? der[j] : 0.0;
      --deg;
    }
    // evaluate at t = 0: T_k(0) = cos(k pi/2)
    double val = 0.0;
    for (int kk = 0; kk <= deg; ++kk) {
      const int r = kk % 4;
      if (r == 0) val += coef[kk];
      else if (r == 2) val -= coef[kk];
    }
    return val / std::pow(H, k);
  }
};

double stencil_halfwidth(double x) { return std::min(0.04, 0.25 * (1.0 - std::abs(x))); }

int ceil_order(double alpha) {
  const int k = static_cast<int>(std::ceil(alpha));
  if (std::abs(alpha - std::round(alpha)) < 1e-12) {
    throw std::domain_error("quad oracle: alpha must be non-integer");
  }
  return k;
}

}  // namespace

double rl_left_quad_oracle(double alpha, const std::function<double(double)>& f, double x,
                           double sigma, int quad_points) {
  const int k = ceil_order(alpha);
  const double mu = k - alpha;
  if (std::abs(x) >= 1.0) {
    throw endpoint_error("rl_left_quad_oracle: interior x required");
  }
  const NodeSet rule = gauss_jacobi({mu - 1.0, sigma}, quad_points);
  const double inv_gamma_mu = std::exp(-ln_gamma(mu));
  auto g = [&](double xi) {
    double s = 0.0;
    for (int i = 0; i < rule.size(); ++i) {
      const double t = -1.0 + (xi + 1.0) * (rule.points[i] + 1.0) / 2.0;
      const double h = (sigma == 0.0) ? f(t) : f(t) * std::pow(1.0 + t, -sigma);
      s += rule.weights[i] * h;
    }
    return std::pow((xi + 1.0) / 2.0, mu + sigma) * s * inv_gamma_mu;
  };
  return StencilFit::differentiate(g, x, stencil_halfwidth(x), k);
}

double rl_right_quad_oracle(double alpha, const std::function<double(double)>& f, double x,
                            double sigma, int quad_points) {
  const int k = ceil_order(alpha);
  const double mu = k - alpha;
  if (std::abs(x) >= 1.0) {
    throw endpoint_error("rl_right_quad_oracle: interior x required");
  }
  const NodeSet rule = gauss_jacobi({mu - 1.0, sigma}, quad_points);
  const double inv_gamma_mu = std::exp(-ln_gamma(mu));
  auto g = [&](double xi) {
    double s = 0.0;
    for (int i = 0; i < rule.size(); ++i) {
      const double t = 1.0 - (1.0 - xi) * (rule.points[i] + 1.0) / 2.0;
      const double h = (sigma == 0.0) ? f(t) : f(t) * std::pow(1.0 - t, -sigma);
      s += rule.weights[i] * h;
    }
    return std::pow((1.0 - xi) / 2.0, mu + sigma) * s * inv_gamma_mu;
  };
  const double dk = StencilFit::differentiate(g, x, stencil_halfwidth(x), k);
  return (k % 2 == 0) ? dk : -dk;
}

double riesz_quad_oracle(const RieszOrder& order, const std::function<double(double)>& f, double x,
                         double sigma_left, double sigma_right, int quad_points) {
  const double left = rl_left_quad_oracle(order.alpha, f, x, sigma_left, quad_points);
  const double right = rl_right_quad_oracle(order.alpha, f, x, sigma_right, quad_points);
  return order.c_scale * (left + right);
}

}  // namespace rieszspec
