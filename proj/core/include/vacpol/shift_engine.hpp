#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vacpol/constants.hpp"
#include "vacpol/hydrogenic.hpp"
#include "vacpol/nuclear_model.hpp"
#include "vacpol/quadrature.hpp"
#include "vacpol/radial_table.hpp"

namespace vacpol
{
/*!
 * delta E = -alpha^2 int d^3x U |psi|^2 = -alpha^2 int r^2 U(r) R(r)^2 dr,
 * in m_e c^2, with U given as a closure valid for all r > 0.
 */
QuadResult first_order_shift(RealFunction const& U,
                             HydrogenicState const& psi,
                             double alpha,
                             double rel_tol = 1e-10);

/*!
 * Same with U tabulated. The radial probability of psi outside the table
 * must be <= 1e-8, otherwise CoverageError.
 */
QuadResult first_order_shift(RadialTable const& U,
                             HydrogenicState const& psi,
                             double alpha,
                             double rel_tol = 1e-10);

/*!
 * Contact-term limit -(4 Z alpha^2 / 15) |psi(0)|^2
 * = -4 Z^4 alpha^5 m^3 / (15 pi n^3) for l = 0, and 0 for l > 0.
 * m enters through |psi(0)|^2 = (Z alpha m)^3 / (pi n^3).
 */
double point_limit_shift(int n, int l, double Z, double alpha, double m = 1.0);

/*!
 * Coarse n = 2 estimate -Z^4 alpha^5 m / 30 quoted alongside the contact
 * term. It is pi times the contact-term value at n = 2 and m = 1 and is
 * reported for comparison only.
 */
double coarse_2s_estimate(double Z, double alpha, double m = 1.0);

struct EffectivePotential
{
    double r = 0;
    //! -alpha Z / r
    double coulomb = 0;
    //! -alpha Z / r - alpha^2 U_point(r)
    double numeric = 0;
    //! -alpha Z / r + alpha^2 (2 Z / 3 pi r)(log r + 5/6 + gamma)
    double approximation = 0;
    double relative_difference = 0;
    //! |log r| exceeds 5/6 + gamma, so the logarithm drives the correction.
    bool log_enhanced = false;
};

EffectivePotential effective_potential(double Z, double alpha, double r);

/*!
 * Screening-charge diagnostic for a point nucleus: Z_eff(r) = -r phi_eff / alpha
 * from the two-term approximation grows like (2 alpha Z / 3 pi) |log r|
 * without bound as r -> 0, so no Coulomb bound c/r holds uniformly.
 */
struct UnboundednessRow
{
    double log10_r = 0;
    double z_eff = 0;
    //! Z_eff from the numeric potential, where r is representable and the
    //! point quadrature is accurate; empty otherwise.
    std::optional<double> z_eff_numeric;
};

struct UnboundednessDiagnostic
{
    std::vector<UnboundednessRow> rows;
    //! Natural log of the radius where Z_eff reaches bound_factor Z.
    double log_radius_at_bound = 0;
    double bound_factor = 2;
    bool monotone_growth = false;
};

UnboundednessDiagnostic unboundedness_diagnostic(double Z,
                                                 double alpha,
                                                 double bound_factor = 2.0);

struct ShiftState
{
    int n = 1;
    int l = 0;
};

struct ShiftOptions
{
    //! Use radial Dirac spinor densities instead of Schroedinger ones.
    //! Extension beyond the nonrelativistic estimate; labelled in output.
    bool dirac_density = false;
    unsigned threads = 1;
    double rel_tol = 1e-10;
    //! Table points per decade for extended nuclei.
    std::size_t points_per_decade = 48;
};

struct ShiftRow
{
    int n = 0;
    int l = 0;
    double delta_E = 0;
    double delta_E_error = 0;
    double delta_E_ev = 0;
    double point_limit = 0;
    double point_limit_ev = 0;
};

struct ShiftReport
{
    std::string model;
    double m_eff = 1;
    double alpha = 0;
    double rest_energy_ev = 0;
    std::string density;  //!< "schroedinger" or "dirac (extension)"
    std::vector<ShiftRow> rows;
    //! (n, delta_E(n,0) - delta_E(n,1)) for every n with both states.
    std::vector<std::pair<int, double>> splitting;
    //! Coarse n = 2 estimate, reported next to the contact term.
    double coarse_2s_estimate = 0;
    //! |splitting(n=2)| over the same quantity at m_eff = 1; 0 if absent.
    double enhancement_over_electronic = 0;
};

/*!
 * Shifts of the listed states for the nucleus \c model with the bound
 * lepton of mass constants.m_eff(). Point nuclei use the closed-form
 * potential; extended ones a tabulated potential.
 */
ShiftReport shift_report(NuclearModel const& model,
                         std::vector<ShiftState> const& states,
                         Constants const& constants,
                         ShiftOptions const& options = {});

/*!
 * shift_report with the m_eff of \c constants plus the ratio of the n = 2
 * splitting to the electronic one (m_eff = 1, same nucleus).
 */
ShiftReport muonic_report(NuclearModel const& model,
                          std::vector<ShiftState> const& states,
                          Constants const& constants,
                          ShiftOptions const& options = {});

//! Tabulated U for an extended nucleus covering the support of \c states.
RadialTable shift_potential_table(NuclearModel const& model,
                                  double r_outer,
                                  ShiftOptions const& options = {});
}  // namespace vacpol
