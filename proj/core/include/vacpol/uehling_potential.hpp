#pragma once

#include <span>

#include "vacpol/nuclear_model.hpp"
#include "vacpol/quadrature.hpp"
#include "vacpol/radial_table.hpp"

namespace vacpol
{
/*!
 * Uehling potential of a point nucleus,
 * U(r) = (2Z / 3 pi r) int_1^inf e^{-2rs} (1 + 1/2s^2) sqrt(s^2-1)/s^2 ds.
 *
 * The substitution s = cosh t removes the square-root endpoint; relative
 * error is below 1e-10 for r >= 1e-4.
 */
QuadResult uehling_point_position_detail(double Z, double r);
double uehling_point_position(double Z, double r);

/*!
 * Radial primitive W(x) = int_x^inf t U_1(t) dt of the unit-charge point
 * potential, W(x) = (1/3 pi) int_1^inf f(s) e^{-2xs} / s ds.
 */
double uehling_point_primitive(double x);

enum class UehlingRoute
{
    automatic,    //!< fourier below switch_radius, convolution above
    fourier,      //!< oscillatory inverse transform of U_hat
    convolution,  //!< n convolved with the point potential via W
};

struct UehlingOptions
{
    UehlingRoute route = UehlingRoute::automatic;
    double switch_radius = 1.0;
    double rel_tol = 1e-10;
    unsigned threads = 1;
};

//! U(r) of an extended nucleus at one radius (r = 0 allowed).
QuadResult uehling_position_value(NuclearModel const& model,
                                  double r,
                                  UehlingOptions const& options = {});

/*!
 * Tabulate U(r) of an extended nucleus.
 *
 * Point nuclei are rejected; their potential is \c uehling_point_position.
 */
RadialTable uehling_position(NuclearModel const& model,
                             std::span<double const> radii,
                             UehlingOptions const& options = {});

//! Tabulate the point-nucleus potential on the given radii.
RadialTable uehling_point_table(double Z,
                                std::span<double const> radii,
                                unsigned threads = 1);
}  // namespace vacpol
