#include "rieszspec/orthopoly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rieszspec/detail/kernels.hpp"
#include "rieszspec/specialfn.hpp"

namespace rieszspec {

namespace {

void check_param(const JacobiParam& p) {
  if (!(p.a > -1.0) || !(p.b > -1.0)) {
    throw std::domain_error("JacobiParam: weight exponents must be > -1");
  }
}

}  // namespace

double jacobi_eval(const JacobiParam& p, int n, double x) {
  if (n < 0) throw std::domain_error("jacobi_eval: negative degree");
  return static_cast<double>(detail::jacobi_eval_x(p.a, p.b, n, x));
}

double jacobi_derivative(const JacobiParam& p, int n, double x) {
  if (n == 0) return 0.0;
  return (n + p.a + p.b + 1.0) / 2.0 * jacobi_eval({p.a + 1.0, p.b + 1.0}, n - 1, x);
}

double jacobi_norm(const JacobiParam& p, int n) {
  return std::exp((p.a + p.b + 1.0) * std::log(2.0) + ln_gamma(n + p.a + 1.0) +
                  ln_gamma(n + p.b + 1.0) - ln_gamma(n + 1.0) - ln_gamma(n + p.a + p.b + 1.0)) /
         (2.0 * n + p.a + p.b + 1.0);
}

double gegenbauer_scale(double lambda, int n) {
  if (!(lambda > -0.5) || lambda == 0.0) {
    throw std::domain_error("gegenbauer: lambda must be > -1/2 and nonzero");
  }
  if (2.0 * lambda > 0.0) {
    // log-space Pochhammer ratio (2 lambda)_n / (lambda + 1/2)_n
    return std::exp(ln_gamma(2.0 * lambda + n) - ln_gamma(2.0 * lambda) -
                    ln_gamma(lambda + 0.5 + n) + ln_gamma(lambda + 0.5));
  }
  // negative 2*lambda: pairwise factor product, polynomial growth, no overflow
  double prod = 1.0;
  for (int j = 0; j < n; ++j) {
    prod *= (2.0 * lambda + j) / (lambda + 0.5 + j);
  }
  return prod;
}

double gegenbauer_eval(double lambda, int n, double x) {
  if (n == 0) return 1.0;
  return gegenbauer_scale(lambda, n) * jacobi_eval({lambda - 0.5, lambda - 0.5}, n, x);
}

NodeSet jacobi_roots(const JacobiParam& p, int n) {
  check_param(p);
  if (n < 1) throw std::domain_error("jacobi_roots: need n >= 1");
  const std::vector<detail::xreal> x = detail::jacobi_nodes_x(p.a, p.b, n);
  NodeSet out;
  out.points.assign(x.begin(), x.end());
  out.kind = NodeKind::GaussJacobi;
  return out;
}

NodeSet gauss_jacobi(const JacobiParam& p, int n) {
  check_param(p);
  if (n < 1) throw std::domain_error("gauss_jacobi: need n >= 1");
  std::vector<detail::xreal> x, w;
  detail::gauss_jacobi_x(p.a, p.b, n, x, w);
  NodeSet out;
  out.points.assign(x.begin(), x.end());
  out.weights.assign(w.begin(), w.end());
  out.kind = NodeKind::GaussJacobi;
  return out;
}

NodeSet lobatto_nodes(int N) {
  if (N < 2) throw std::domain_error("lobatto_nodes: need N >= 2");
  NodeSet interior = jacobi_roots({1.0, 1.0}, N - 1);
  NodeSet out;
  out.kind = NodeKind::Lobatto;
  out.points.reserve(N + 1);
  out.points.push_back(-1.0);
  out.points.insert(out.points.end(), interior.points.begin(), interior.points.end());
  out.points.push_back(1.0);
  out.weights.resize(N + 1);
  for (int i = 0; i <= N; ++i) {
    const double LN = jacobi_eval({0.0, 0.0}, N, out.points[i]);
    out.weights[i] = 2.0 / (N * (N + 1.0) * LN * LN);
  }
  return out;
}

double fit_loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("fit_loglog_slope: need >= 2 matching samples");
  }
  const int n = static_cast<int>(x.size());
  double mx = 0.0, my = 0.0;
  std::vector<double> lx(n), ly(n);
  for (int i = 0; i < n; ++i) {
    lx[i] = std::log(x[i]);
    ly[i] = std::log(y[i]);
    mx += lx[i];
    my += ly[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0;
  for (int i = 0; i < n; ++i) {
    sxy += (lx[i] - mx) * (ly[i] - my);
    sxx += (lx[i] - mx) * (lx[i] - mx);
  }
  return sxy / sxx;
}

}  // namespace rieszspec
