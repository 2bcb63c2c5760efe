#include "rieszspec/superconv.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace rieszspec {

NodeSet lobatto_superconv_points(const RieszOrder& order, int N) {
  if (order.k != 1) {
    throw std::domain_error("lobatto_superconv_points: requires 0 < alpha < 1");
  }
  if (N < 2) throw std::domain_error("lobatto_superconv_points: need N >= 2");
  constexpr int kScan = 4001;
  constexpr double kDelta = 1e-4;
  const double lo = -1.0 + kDelta, hi = 1.0 - kDelta;
  std::vector<double> vals(kScan);
  auto xat = [&](int i) { return lo + (hi - lo) * static_cast<double>(i) / (kScan - 1); };
  for (int i = 0; i < kScan; ++i) vals[i] = riesz_lobatto_poly(order, N, xat(i));

  NodeSet out;
  out.kind = NodeKind::SuperconvPoints;
  for (int i = 0; i + 1 < kScan; ++i) {
    if (vals[i] == 0.0) {
      out.points.push_back(xat(i));
      continue;
    }
    if (vals[i] * vals[i + 1] < 0.0) {
      double a = xat(i), b = xat(i + 1), fa = vals[i];
      for (int it = 0; it < 60; ++it) {
        const double m = 0.5 * (a + b);
        const double fm = riesz_lobatto_poly(order, N, m);
        if (fa * fm <= 0.0) {
          b = m;
        } else {
          a = m;
          fa = fm;
        }
      }
      out.points.push_back(0.5 * (a + b));
    }
  }
  if (vals[kScan - 1] == 0.0) out.points.push_back(xat(kScan - 1));
  return out;
}

NodeSet gjf_superconv_points(const RieszOrder& order, int N) {
  const int m = order.integer_shift();
  const int degree = N + 1 - m;
  if (degree < 1) {
    throw std::domain_error("gjf_superconv_points: degenerate degree for this alpha and N");
  }
  const double a = order.alpha_star / 2.0 + m;
  NodeSet out = jacobi_roots({a, a}, degree);
  out.kind = NodeKind::SuperconvPoints;
  return out;
}

RatioReport compute_ratio(const std::vector<std::pair<double, double>>& curve,
                          const NodeSet& points, const std::vector<double>& point_errors) {
  if (curve.empty()) throw std::invalid_argument("compute_ratio: empty error curve");
  if (points.points.size() != point_errors.size()) {
    throw std::invalid_argument("compute_ratio: points/errors length mismatch");
  }
  RatioReport r;
  for (const auto& [x, e] : curve) r.global_max = std::max(r.global_max, std::abs(e));
  for (double e : point_errors) r.superconv_max = std::max(r.superconv_max, std::abs(e));
  if (r.superconv_max == 0.0) {
    r.ratio = std::numeric_limits<double>::infinity();
    r.exact_reproduction = true;
  } else {
    r.ratio = r.global_max / r.superconv_max;
  }
  return r;
}

}  // namespace rieszspec
