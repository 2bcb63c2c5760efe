#ifndef RIESZSPEC_SUPERCONV_HPP
#define RIESZSPEC_SUPERCONV_HPP

#include <utility>
#include <vector>

#include "rieszspec/fracderiv.hpp"
#include "rieszspec/interp.hpp"
#include "rieszspec/orthopoly.hpp"

namespace rieszspec {

/// The convergence-gain ratio: global max of |error| over a dense grid
/// divided by the max of |error| over the superconvergence points.
struct RatioReport {
  double alpha = 0.0;
  int N = 0;
  InterpFlavor flavor = InterpFlavor::LobattoPoly;
  double global_max = 0.0;
  double superconv_max = 0.0;
  double ratio = 0.0;        // +inf when superconv_max == 0
  bool exact_reproduction = false;
};

/// All zeros of riesz_lobatto_poly(alpha, N, .) inside the scan window
/// [-1+1e-4, 1-1e-4]: 4001-point sign-change scan + 60 bisection steps
/// per bracket. Count reported as found.
NodeSet lobatto_superconv_points(const RieszOrder& order, int N);

/// Superconvergence points of the GJF fractional interpolant: for
/// 0 < alpha < 2 the interpolation nodes themselves (zeros of
/// P_{N+1}^{alpha/2,alpha/2}); for alpha > 2 the zeros of
/// P_{N+1-m}^{alpha*/2+m, alpha*/2+m} with m = alpha - alpha*.
/// Throws std::domain_error when the prescribed degree drops below 1.
NodeSet gjf_superconv_points(const RieszOrder& order, int N);

/// Assemble a RatioReport from an error curve and the errors evaluated
/// exactly at the superconvergence points.
RatioReport compute_ratio(const std::vector<std::pair<double, double>>& curve,
                          const NodeSet& points, const std::vector<double>& point_errors);

}  // namespace rieszspec

#endif
