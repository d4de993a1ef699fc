#pragma once

#include "vacpol/nuclear_model.hpp"
#include "vacpol/quadrature.hpp"

namespace vacpol
{
/*!
 * Vacuum polarization kernel C(k) from its closed form.
 *
 * Uses the Taylor series of the integral representation for k < 1 and a
 * cancellation-free rewrite of the logarithm elsewhere, so the result is
 * accurate to a few ulps over the whole range, including C(0) = 0.
 */
double c_closed(double k);

/*!
 * C(k) = (k^2/2) int_0^1 (1 - x^2) log[1 + k^2 (1 - x^2)/4] dx by adaptive
 * quadrature (relative error <= 1e-11).
 */
QuadResult c_integral(double k);

//! Kernel, induced vacuum density and Uehling transform at one wavenumber.
struct KernelEval
{
    double k = 0;
    double C = 0;
    double rho_vac_hat = 0;
    double U_hat = 0;
};

//! rho_vac_hat(k) = phi_hat(k) C(k) / (4 pi^2), with the k = 0 limit 0.
double vacuum_density_fourier(NuclearModel const& model, double k);

/*!
 * Uehling potential in momentum space.
 *
 * Evaluates both phi_hat C / (pi k^2) and 4 n_hat C / k^4 and throws
 * InvariantViolation if they differ by more than 1e-14 relative.
 */
double uehling_fourier(NuclearModel const& model, double k);

KernelEval evaluate_kernel(NuclearModel const& model, double k);
}  // namespace vacpol
