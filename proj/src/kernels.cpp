#include "rieszspec/detail/kernels.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rieszspec::detail {

xreal lgamma_x(xreal x) { return lgammal(x); }

xreal gamma_ratio_x(xreal a, xreal b) { return expl(lgammal(a) - lgammal(b)); }

xreal jacobi_eval_x(xreal a, xreal b, int n, xreal x) {
  if (n == 0) return 1.0L;
  xreal pm1 = 1.0L;
  xreal p = (a + b + 2) / 2 * x + (a - b) / 2;
  for (int m = 2; m <= n; ++m) {
    const xreal mm = static_cast<xreal>(m);
    const xreal s = 2 * mm + a + b;
    const xreal c1 = 2 * mm * (mm + a + b) * (s - 2);
    const xreal c2 = (s - 1) * (s * (s - 2) * x + a * a - b * b);
    const xreal c3 = 2 * (mm + a - 1) * (mm + b - 1) * s;
    const xreal pn = (c2 * p - c3 * pm1) / c1;
    pm1 = p;
    p = pn;
  }
  return p;
}

void jacobi_eval_all_x(xreal a, xreal b, int n, xreal x, std::vector<xreal>& out) {
  out.resize(n + 1);
  out[0] = 1.0L;
  if (n == 0) return;
  out[1] = (a + b + 2) / 2 * x + (a - b) / 2;
  for (int m = 2; m <= n; ++m) {
    const xreal mm = static_cast<xreal>(m);
    const xreal s = 2 * mm + a + b;
    const xreal c1 = 2 * mm * (mm + a + b) * (s - 2);
    const xreal c2 = (s - 1) * (s * (s - 2) * x + a * a - b * b);
    const xreal c3 = 2 * (mm + a - 1) * (mm + b - 1) * s;
    out[m] = (c2 * out[m - 1] - c3 * out[m - 2]) / c1;
  }
}

xreal jacobi_deriv_x(xreal a, xreal b, int n, xreal x) {
  if (n == 0) return 0.0L;
  return (n + a + b + 1) / 2 * jacobi_eval_x(a + 1, b + 1, n - 1, x);
}

xreal jacobi_norm_x(xreal a, xreal b, int n) {
  return expl((a + b + 1) * logl(2.0L) + lgammal(n + a + 1) + lgammal(n + b + 1) -
              lgammal(static_cast<xreal>(n) + 1) - lgammal(n + a + b + 1)) /
         (2 * n + a + b + 1);
}

std::vector<double> golub_welsch_nodes(double a, double b, int n) {
  if (n < 1) throw std::domain_error("golub_welsch_nodes: n must be >= 1");
  Eigen::VectorXd diag(n), sub(std::max(n - 1, 0));
  const double apb = a + b;
  diag(0) = (b - a) / (apb + 2.0);
  for (int m = 1; m < n; ++m) {
    const double s = 2.0 * m + apb;
    diag(m) = (b * b - a * a) / (s * (s + 2.0));
  }
  for (int m = 1; m < n; ++m) {
    double beta;
    if (m == 1) {
      // cancelled form, valid down to a+b -> -1
      beta = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + apb) * (2.0 + apb) * (3.0 + apb));
    } else {
      const double s = 2.0 * m + apb;
      beta = 4.0 * m * (m + a) * (m + b) * (m + apb) / (s * s * (s + 1.0) * (s - 1.0));
    }
    sub(m - 1) = std::sqrt(beta);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  std::vector<double> nodes(n);
  for (int i = 0; i < n; ++i) nodes[i] = es.eigenvalues()(i);  // ascending
  return nodes;
}

std::vector<xreal> jacobi_nodes_x(double a, double b, int n) {
  const std::vector<double> seeds = golub_welsch_nodes(a, b, n);
  const xreal ax = a, bx = b;
  std::vector<xreal> x(seeds.begin(), seeds.end());
  for (int i = 0; i < n; ++i) {
    for (int it = 0; it < 5; ++it) {
      const xreal p = jacobi_eval_x(ax, bx, n, x[i]);
      const xreal dp = jacobi_deriv_x(ax, bx, n, x[i]);
      if (dp == 0.0L) break;
      const xreal dx = p / dp;
      x[i] -= dx;
      if (fabsl(dx) < 1e-19L) break;
    }
  }
  std::sort(x.begin(), x.end());
  if (a == b) {
    for (int i = 0, j = n - 1; i < j; ++i, --j) {
      const xreal m = (x[j] - x[i]) / 2;
      x[i] = -m;
      x[j] = m;
    }
    if (n % 2 == 1) x[n / 2] = 0.0L;
  }
  return x;
}

void gauss_jacobi_x(double a, double b, int n, std::vector<xreal>& x, std::vector<xreal>& w) {
  const xreal ax = a, bx = b;
  x = jacobi_nodes_x(a, b, n);
  w.assign(n, 0.0L);
  std::vector<xreal> pall;
  std::vector<xreal> norms(n);
  for (int j = 0; j < n; ++j) norms[j] = jacobi_norm_x(ax, bx, j);
  for (int i = 0; i < n; ++i) {
    jacobi_eval_all_x(ax, bx, n - 1, x[i], pall);
    xreal s = 0.0L;
    for (int j = 0; j < n; ++j) s += pall[j] * pall[j] / norms[j];
    w[i] = 1.0L / s;
  }
}

}  // namespace rieszspec::detail
