#pragma once

#include <functional>
#include <span>
#include <vector>

namespace vacpol
{
using RealFunction = std::function<double(double)>;

//! Quadrature value with its absolute error estimate.
struct QuadResult
{
    double value = 0;
    double abs_error = 0;
};

/*!
 * Globally adaptive 61-point Gauss-Kronrod on a finite interval. Panels are
 * bisected at most \c max_depth times; throws QuadratureError when the
 * error target is missed.
 */
QuadResult integrate_interval(RealFunction const& f,
                              double a,
                              double b,
                              double rel_tol = 1e-12,
                              unsigned max_depth = 25);

//! Adaptive Gauss-Kronrod over consecutive panels [x0,x1], [x1,x2], ...
QuadResult integrate_panels(RealFunction const& f,
                            std::span<double const> breakpoints,
                            double rel_tol = 1e-12,
                            unsigned max_depth = 25);

//! Log-spaced breakpoints {0, lo, 10 lo, ..., hi}, clipped to hi.
std::vector<double> decade_breakpoints(double lo, double hi);

struct OscillatoryOptions
{
    double rel_tol = 1e-11;
    double abs_tol = 0;
    int min_segments = 4;
    int max_segments = 6000;
    //! Scale at which the first half-period is subdivided by decades.
    double inner_scale = 1.0;
};

/*!
 * Integrate an oscillating function over [0, inf).
 *
 * The range is cut into consecutive pieces of length \c half_period (the
 * spacing between sign changes of the oscillating factor). Partial sums are
 * accelerated with the Wynn epsilon algorithm, which also assigns the Abel
 * value to integrals that only converge in the oscillatory sense, such as
 * int sin(kr) dr = 1/k.
 */
QuadResult integrate_oscillatory(RealFunction const& f,
                                 double half_period,
                                 OscillatoryOptions const& options = {});

//! Wynn epsilon extrapolation of a sequence of partial sums.
QuadResult wynn_epsilon(std::span<double const> partial_sums);
}  // namespace vacpol
