#include "rieszspec/interp.hpp"

#include <cmath>
#include <stdexcept>

#include "rieszspec/detail/kernels.hpp"
#include "rieszspec/errors.hpp"

namespace rieszspec {

using detail::xreal;

double Interpolant::operator()(double x) const {
  if (flavor == InterpFlavor::GjfFractional) return gjf()(x);
  const ModalExpansion& m = legendre();
  std::vector<xreal> p;
  detail::jacobi_eval_all_x(0.0L, 0.0L, m.degree(), x, p);
  xreal s = 0.0L;
  for (int n = 0; n <= m.degree(); ++n) s += static_cast<xreal>(m.coeffs[n]) * p[n];
  return static_cast<double>(s);
}

Interpolant lobatto_interpolate(const std::function<double(double)>& f, int N) {
  if (N < 2) throw std::domain_error("lobatto_interpolate: need N >= 2");
  NodeSet nodes = lobatto_nodes(N);
  std::vector<double> fx(N + 1);
  for (int i = 0; i <= N; ++i) {
    fx[i] = f(nodes.points[i]);
    if (!std::isfinite(fx[i])) {
      throw std::invalid_argument("lobatto_interpolate: non-finite sample");
    }
  }
  // discrete Legendre transform at GLL points; top mode uses the Lobatto
  // norm 2/N instead of 2/(2N+1)
  std::vector<xreal> acc(N + 1, 0.0L);
  std::vector<xreal> p;
  for (int i = 0; i <= N; ++i) {
    detail::jacobi_eval_all_x(0.0L, 0.0L, N, nodes.points[i], p);
    const xreal wf = static_cast<xreal>(nodes.weights[i]) * static_cast<xreal>(fx[i]);
    for (int n = 0; n <= N; ++n) acc[n] += wf * p[n];
  }
  ModalExpansion modal;
  modal.basis = PolyBasis::Legendre;
  modal.coeffs.resize(N + 1);
  for (int n = 0; n <= N; ++n) {
    const xreal norm = (n < N) ? 2.0L / (2 * n + 1) : 2.0L / N;
    modal.coeffs[n] = static_cast<double>(acc[n] / norm);
  }
  Interpolant out{InterpFlavor::LobattoPoly, std::move(nodes), std::move(modal)};
  return out;
}

namespace {

template <class F>
Interpolant gjf_interpolate_impl(const F& f, const RieszOrder& order, int N) {
  if (N < 1) throw std::domain_error("gjf_interpolate: need N >= 1");
  const double a = order.alpha_star / 2.0;
  std::vector<xreal> x, w;
  detail::gauss_jacobi_x(a, a, N + 1, x, w);

  std::vector<xreal> v(N + 1);
  for (int i = 0; i <= N; ++i) {
    const xreal fx = f(x[i]);
    if (!std::isfinite(static_cast<double>(fx))) {
      throw std::invalid_argument("gjf_interpolate: non-finite sample");
    }
    v[i] = fx * powl(1.0L - x[i] * x[i], -static_cast<xreal>(a));
  }

  std::vector<xreal> acc(N + 1, 0.0L), p;
  for (int i = 0; i <= N; ++i) {
    detail::jacobi_eval_all_x(a, a, N, x[i], p);
    for (int n = 0; n <= N; ++n) acc[n] += w[i] * v[i] * p[n];
  }
  GjfExpansion g;
  g.order = order;
  g.coeffs.resize(N + 1);
  for (int n = 0; n <= N; ++n) {
    g.coeffs[n] = static_cast<double>(acc[n] / detail::jacobi_norm_x(a, a, n));
  }

  NodeSet nodes;
  nodes.points.assign(x.begin(), x.end());
  nodes.weights.assign(w.begin(), w.end());
  nodes.kind = NodeKind::GaussJacobi;
  return Interpolant{InterpFlavor::GjfFractional, std::move(nodes), std::move(g)};
}

template <class F>
GjfExpansion gjf_project_impl(const F& v, const RieszOrder& order, int M, int quad_points) {
  if (M < 0) throw std::domain_error("gjf_project: need M >= 0");
  const double a = order.alpha_star / 2.0;
  const int nq = quad_points > 0 ? quad_points : std::max(2 * (M + 1), 80);
  std::vector<xreal> x, w;
  detail::gauss_jacobi_x(a, a, nq, x, w);
  std::vector<xreal> acc(M + 1, 0.0L), p;
  for (int i = 0; i < nq; ++i) {
    const xreal vi = v(x[i]);
    detail::jacobi_eval_all_x(a, a, M, x[i], p);
    for (int n = 0; n <= M; ++n) acc[n] += w[i] * vi * p[n];
  }
  GjfExpansion g;
  g.order = order;
  g.coeffs.resize(M + 1);
  for (int n = 0; n <= M; ++n) {
    g.coeffs[n] = static_cast<double>(acc[n] / detail::jacobi_norm_x(a, a, n));
  }
  return g;
}

}  // namespace

Interpolant gjf_interpolate(const std::function<double(double)>& f, const RieszOrder& order,
                            int N) {
  return gjf_interpolate_impl([&](xreal x) { return static_cast<xreal>(f(static_cast<double>(x))); },
                              order, N);
}

Interpolant gjf_interpolate_x(const std::function<long double(long double)>& f,
                              const RieszOrder& order, int N) {
  return gjf_interpolate_impl(f, order, N);
}

GjfExpansion gjf_project(const std::function<double(double)>& v, const RieszOrder& order, int M,
                         int quad_points) {
  return gjf_project_impl([&](xreal x) { return static_cast<xreal>(v(static_cast<double>(x))); },
                          order, M, quad_points);
}

GjfExpansion gjf_project_x(const std::function<long double(long double)>& v,
                           const RieszOrder& order, int M, int quad_points) {
  return gjf_project_impl(v, order, M, quad_points);
}

std::vector<double> default_grid(int count) {
  if (count < 2) throw std::domain_error("default_grid: need at least 2 points");
  std::vector<double> g(count);
  const double lo = -1.0 + 1e-6, hi = 1.0 - 1e-6;
  for (int i = 0; i < count; ++i) {
    g[i] = lo + (hi - lo) * static_cast<double>(i) / (count - 1);
  }
  return g;
}

std::vector<std::pair<double, double>> riesz_error_curve(const Interpolant& interp,
                                                         const RieszOrder& order,
                                                         const std::function<double(double)>& truth,
                                                         const std::vector<double>& grid) {
  std::vector<std::pair<double, double>> out;
  out.reserve(grid.size());
  if (interp.flavor == InterpFlavor::LobattoPoly) {
    for (double x : grid) {
      out.emplace_back(x, truth(x) - riesz_of_legendre_expansion(interp.legendre(), order, x));
    }
  } else {
    if (interp.gjf().order.alpha != order.alpha) {
      throw std::invalid_argument("riesz_error_curve: order mismatch");
    }
    for (double x : grid) {
      out.emplace_back(x, truth(x) - riesz_of_gjf_expansion(interp.gjf(), x));
    }
  }
  return out;
}

GjfExpansion gjf_error_expansion(const Interpolant& interp, const GjfExpansion& truth) {
  if (interp.flavor != InterpFlavor::GjfFractional) {
    throw std::invalid_argument("gjf_error_expansion: GJF-flavor interpolant required");
  }
  return gjf_add(truth, interp.gjf(), 1.0, -1.0);
}

std::vector<std::pair<double, double>> riesz_error_curve(const Interpolant& interp,
                                                         const GjfExpansion& truth,
                                                         const std::vector<double>& grid) {
  const GjfExpansion diff = gjf_error_expansion(interp, truth);
  std::vector<std::pair<double, double>> out;
  out.reserve(grid.size());
  for (double x : grid) {
    out.emplace_back(x, riesz_of_gjf_expansion(diff, x));
  }
  return out;
}

}  // namespace rieszspec
