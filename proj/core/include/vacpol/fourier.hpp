#pragma once

#include "vacpol/quadrature.hpp"

namespace vacpol
{
/*!
 * Three-dimensional unitary Fourier transform of a radial function.
 *
 * Convention (2 pi)^{-3/2}: f_hat(k) = sqrt(2/pi) / k * int_0^inf r sin(kr)
 * f(r) dr, with the k = 0 limit sqrt(2/pi) int r^2 f dr. In this convention
 * the transform of 1/r is sqrt(2/pi)/k^2 and the transform is its own inverse
 * on radial functions.
 *
 * \c length_scale hints where f varies (used to subdivide the first panel).
 */
QuadResult fourier_radial(RealFunction const& f,
                          double k,
                          double length_scale = 1.0,
                          double rel_tol = 1e-11);
}  // namespace vacpol
