#ifndef RIESZSPEC_INTERP_HPP
#define RIESZSPEC_INTERP_HPP

#include <functional>
#include <utility>
#include <variant>
#include <vector>

#include "rieszspec/fracderiv.hpp"
#include "rieszspec/orthopoly.hpp"

namespace rieszspec {

enum class InterpFlavor { LobattoPoly, GjfFractional };

/// An interpolant of sampled data: either a degree-N polynomial through
/// the N+1 Legendre-Lobatto points (stored as modal Legendre
/// coefficients) or a GJF fractional interpolant
/// u_N = (1-x^2)^{alpha*/2} v_N with v_N through the Gauss-Jacobi
/// (alpha*/2, alpha*/2) points.
struct Interpolant {
  InterpFlavor flavor;
  NodeSet nodes;
  std::variant<ModalExpansion, GjfExpansion> modal;

  const ModalExpansion& legendre() const { return std::get<ModalExpansion>(modal); }
  const GjfExpansion& gjf() const { return std::get<GjfExpansion>(modal); }

  double operator()(double x) const;
};

/// Degree-N polynomial interpolation of f at the N+1 Lobatto points;
/// modal Legendre coefficients via the Gauss-Lobatto-Legendre discrete
/// transform (norm 2/(2n+1) for n < N, 2/N for n = N).
/// Throws std::invalid_argument on non-finite samples.
Interpolant lobatto_interpolate(const std::function<double(double)>& f, int N);

/// GJF fractional interpolant of f: v_N interpolates
/// v = (1-x^2)^{-alpha*/2} f at the N+1 Gauss-Jacobi(alpha*/2,alpha*/2)
/// nodes; modal coefficients by discrete orthogonality, computed with
/// extended-precision internals.
Interpolant gjf_interpolate(const std::function<double(double)>& f, const RieszOrder& order, int N);

/// Extended-precision-sampled variant for reference pipelines whose
/// signals sit below the double sampling floor.
Interpolant gjf_interpolate_x(const std::function<long double(long double)>& f,
                              const RieszOrder& order, int N);

/// Projection of v onto the first M+1 Jacobi(alpha*/2,alpha*/2) modes by
/// high-order Gauss-Jacobi quadrature; returns the GjfExpansion of
/// u = (1-x^2)^{alpha*/2} v_M. The device used to build reference truth
/// expansions (quad_points = 0 picks max(2M, 80)).
GjfExpansion gjf_project(const std::function<double(double)>& v, const RieszOrder& order, int M,
                         int quad_points = 0);

GjfExpansion gjf_project_x(const std::function<long double(long double)>& v,
                           const RieszOrder& order, int M, int quad_points = 0);

/// The default evaluation grid: `count` equispaced points on
/// [-1+1e-6, 1-1e-6].
std::vector<double> default_grid(int count = 2001);

/// Pointwise truth(x) - ^R D^alpha u_N(x) on the grid. The derivative of
/// the interpolant goes through riesz_of_legendre_expansion (Lobatto
/// flavor) or riesz_of_gjf_expansion (GJF flavor).
std::vector<std::pair<double, double>> riesz_error_curve(const Interpolant& interp,
                                                         const RieszOrder& order,
                                                         const std::function<double(double)>& truth,
                                                         const std::vector<double>& grid);

/// Same, with the truth supplied as a GJF expansion: the error is then
/// evaluated from the coefficient difference, which keeps full relative
/// accuracy where the two curves agree to many digits (superconvergence
/// points at large N).
std::vector<std::pair<double, double>> riesz_error_curve(const Interpolant& interp,
                                                         const GjfExpansion& truth,
                                                         const std::vector<double>& grid);

/// The coefficient difference truth - interp as a GjfExpansion
/// (GJF-flavor interpolants only).
GjfExpansion gjf_error_expansion(const Interpolant& interp, const GjfExpansion& truth);

}  // namespace rieszspec

#endif
