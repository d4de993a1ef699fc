#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "vacpol/constants.hpp"
#include "vacpol/nuclear_model.hpp"
#include "vacpol/quadrature.hpp"
#include "vacpol/radial_grid.hpp"

namespace vacpol
{
/*!
 * Bound-state energy of the point-Coulomb Dirac operator in units of m,
 * [1 + zalpha^2 / (n_r + sqrt(kappa^2 - zalpha^2))^2]^{-1/2}.
 *
 * n_r = 0 is only allowed for kappa < 0. Throws SupercriticalError for
 * zalpha >= 1.
 */
double coulomb_dirac_energy(int n_r, int kappa, double zalpha);

//! Coulomb energy of the k-th (0-based) bound state in channel kappa.
double coulomb_dirac_level(std::size_t k, int kappa, double zalpha);

//! Symmetric tridiagonal matrix: diagonal a and off-diagonal b.
struct Tridiagonal
{
    std::vector<double> diag;
    std::vector<double> off;

    std::size_t size() const noexcept { return diag.size(); }
};

/*!
 * Discretized radial Dirac operator for channel kappa,
 *
 *   H = [[m + V, -d/dr + kappa/r], [d/dr + kappa/r, -m + V]]
 *
 * acting on (G, F). The off-diagonal blocks are written as
 * r^-kappa d/dr r^kappa and differenced between staggered points, which
 * keeps the discrete operator free of doubled low-lying modes. Unknowns
 * are interleaved as (F_1, G_1, F_2, G_2, ...) and scaled by sqrt(weight)
 * so the matrix is symmetric and tridiagonal.
 */
Tridiagonal build_radial_operator(RealFunction const& potential,
                                  int kappa,
                                  RadialGrid const& grid,
                                  double m = 1.0);

//! V(r) = -alpha phi(r) for a nuclear model.
RealFunction nuclear_potential_energy(NuclearModel const& model,
                                      Constants const& constants);

//! V(r) = -zalpha / r.
RealFunction coulomb_potential_energy(double zalpha);

//! Radial amplitudes of one gap state, normalized to int (G^2 + F^2) dr = 1.
struct RadialSpinor
{
    double energy = 0;
    std::vector<double> upper;  //!< G at grid nodes
    std::vector<double> lower;  //!< F at grid midpoints
    double mean_radius = 0;
    std::size_t sign_changes = 0;
    //! Fraction of the norm inside r <= radius.
    double norm_inside(RadialGrid const& grid, double radius) const;
};

struct ChannelSpectrum
{
    int kappa = 0;
    double m = 1;
    std::string grid;
    //! All eigenvalues, ascending.
    std::vector<double> eigenvalues;
    //! Indices into eigenvalues of accepted states in (-m, m).
    std::vector<std::size_t> gap_states;
    //! Spinors of the accepted gap states, in gap_states order.
    std::vector<RadialSpinor> spinors;
    //! Gap eigenvalues rejected as grid-scale oscillations.
    std::vector<double> spurious;

    std::vector<double> gap_energies() const;
};

struct SolveOptions
{
    //! Return only the gap part of the spectrum.
    bool gap_only = false;
    //! Upper-component sign changes above n / spurious_fraction flag a state.
    double spurious_fraction = 4;
};

/*!
 * Eigenpairs of the discretized radial operator.
 *
 * Gap eigenvalues are computed by bisection to full relative accuracy and
 * their vectors by inverse iteration; the rest of the spectrum comes from
 * an implicit QL sweep.
 */
ChannelSpectrum solve_channel(RealFunction const& potential,
                              int kappa,
                              RadialGrid const& grid,
                              double m = 1.0,
                              SolveOptions const& options = {});

/*!
 * Two-grid extrapolation for a second-order scheme, using the actual step
 * ratio: (E_f h_c^2 - E_c h_f^2) / (h_c^2 - h_f^2).
 */
double richardson(double e_coarse, double h_coarse, double e_fine, double h_fine);

struct BoxCheck
{
    std::vector<double> base;
    std::vector<double> enlarged;
    double max_change = 0;
    bool converged = false;
};

/*!
 * Compare the first \c count gap energies on \c grid and on the same grid
 * enlarged 1.5 times; converged when every change is below \c tolerance.
 */
BoxCheck check_box_size(RealFunction const& potential,
                        int kappa,
                        RadialGrid const& grid,
                        std::size_t count,
                        double m = 1.0,
                        double tolerance = 1e-8);
}  // namespace vacpol
