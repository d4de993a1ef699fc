#pragma once

#include <vector>

#include "vacpol/linear_fit.hpp"
#include "vacpol/nuclear_model.hpp"
#include "vacpol/quadrature.hpp"

namespace vacpol
{
/*!
 * Field-independent part F_0(xi) of the vacuum density-matrix diagonal,
 *
 *   F_0(xi) = -1/(16 pi^3) int d^3p (1 - p^2 cos^2(theta)/(1+p^2))
 *             e^{i p.xi} / (1+p^2)^{3/2}.
 *
 * The angular integral is done analytically, leaving
 *   -(1/4 pi^2) int p^2/(1+p^2)^{3/2} [j0 - p^2 (j0 - 2 j2)/(3(1+p^2))] dp
 * with j_l = j_l(p xi). Diverges like log(xi)/(6 pi^2) as xi -> 0; xi <= 0
 * throws SingularityError.
 */
QuadResult f0_integral(double xi);

//! Coefficient c of F_0(xi) ~ c log(xi) as xi -> 0.
inline constexpr double f0_log_coefficient = 1.0 / (6 * 9.869604401089358);

//! Cut-off study of the unrenormalized diagonal at xi = 0.
struct DivergenceStudy
{
    double k = 0;
    double phi_hat = 0;
    std::vector<double> cutoffs;
    std::vector<double> values;
    //! values[i+1] - values[i]
    std::vector<double> increments;
    //! Least-squares fit of value against log(cutoff) over all cut-offs.
    LinearFit fit;
    //! -phi_hat k^2 / (6 pi^2)
    double expected_slope = 0;
};

/*!
 * Evaluate (phi_hat/4 pi^3) int_{|p|<Lambda} d^3p N(p,k) / (E- E+ (E- + E+))
 * with E+- = E(p +- k/2) and N = p^2 - k^2/4 + 1 - E- E+, for increasing
 * cut-offs. The growth is affine in log Lambda with slope
 * -phi_hat k^2 / (6 pi^2).
 */
DivergenceStudy diagonal_divergence_study(double phi_hat,
                                          double k,
                                          std::vector<double> const& cutoffs);

//! phi_hat taken from the model at |k|.
DivergenceStudy diagonal_divergence_study(NuclearModel const& model,
                                          double k,
                                          std::vector<double> const& cutoffs);

/*!
 * Renormalized vacuum density rho_vac_hat(k) computed directly as the
 * convergent momentum integral of the diagonal minus its counterterm
 * k^2 (p^2 sin^2(theta) + 1) / (4 E(p)^5). Equals phi_hat C(k) / (4 pi^2).
 */
QuadResult renormalized_density_integral(double phi_hat, double k);
}  // namespace vacpol
