#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "hlf/grid.hpp"
#include "hlf/interpolation.hpp"
#include "hlf/jet.hpp"

namespace hlf {

// thrown when a rate fit has fewer than three points above the roundoff floor
struct InsufficientDataError : std::runtime_error {
  explicit InsufficientDataError(const std::string& what) : std::runtime_error(what) {}
};

// Gauss-Legendre nodes and weights on [-1, 1]
struct GaussRule {
  std::vector<double> x, w;
};
const GaussRule& gauss_rule(int npts);

// Global piecewise-polynomial interpolant on a periodic domain [x0, x0 + L).
// Each piece evaluates sum_i a[i] ((x - center)/scale)^i on [xl, xr].
struct PiecewisePoly {
  struct Piece {
    double xl, xr, center, scale;
    std::vector<double> a;
  };
  double x0 = 0.0, L = 0.0;
  std::vector<Piece> pieces;
};

PiecewisePoly interpolant_from_primary(const std::vector<Jet>& jets, const Grid1d& g,
                                       const InterpOperator& op);
PiecewisePoly interpolant_from_dual(const std::vector<Jet>& jets, const Grid1d& g,
                                    const InterpOperator& op);

double pw_eval(const PiecewisePoly& f, double x);
// g(x) = f(x + s), re-tiled onto the canonical period
PiecewisePoly pw_shift(const PiecewisePoly& f, double s);
// cf * f + cg * g on the union of both break sets
PiecewisePoly pw_combine(const PiecewisePoly& f, const PiecewisePoly& g, double cf, double cg);

// squared Sobolev seminorm |f|^2_order: the L2 norm squared of the order-th
// derivative, integrated piece by piece
double sobolev_seminorm(const PiecewisePoly& f, int order);

// Conserved functionals of the symmetric system p_t = c v_x, v_t = c p_x on a
// periodic grid. Q pairs p(t) with the trailing v(t - dt/2); R pairs the
// leading v(t + dt/2) with p(t). Both decompose the state into characteristic
// combinations shifted by c dt/2 and sum their order-(m+1) seminorms.
double conserved_q(const std::vector<Jet>& p, const std::vector<Jet>& v_behind,
                   const Grid1d& g, const InterpOperator& op, double c, double dt);
double conserved_r(const std::vector<Jet>& v_ahead, const std::vector<Jet>& p,
                   const Grid1d& g, const InterpOperator& op, double c, double dt);

// L2 error of the reconstructed field against a pointwise reference,
// integrated with a 2m+2 point Gauss rule on every staggered cell
double l2_error_1d(const std::vector<Jet>& jets, const Grid1d& g, const InterpOperator& op,
                   bool jets_on_primary, const std::function<double(double)>& exact);

// same over the cells of a 2D reconstruction (bounds taken from the block)
double l2_error_2d(const PiecewiseTensor& cells,
                   const std::function<double(double, double)>& exact);

struct RateFit {
  double rate = 0.0;
  int points_used = 0;
};

// least-squares slope of log(error) against log(h); errors at or below the
// floor are treated as roundoff and excluded
inline constexpr double rate_floor = 2.220446049250313e-14;  // 100x machine epsilon
RateFit convergence_rate(const std::vector<double>& hs, const std::vector<double>& errors,
                         double floor = rate_floor);

}  // namespace hlf
