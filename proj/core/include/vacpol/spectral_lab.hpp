#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "vacpol/constants.hpp"
#include "vacpol/nuclear_model.hpp"
#include "vacpol/radial_dirac.hpp"
#include "vacpol/radial_grid.hpp"

namespace vacpol
{
/*!
 * Discretized radial Dirac operator of one channel on a fixed grid.
 * Stored in tridiagonal form; \c dense() expands it.
 */
struct OperatorMatrix
{
    Tridiagonal band;
    int kappa = -1;
    std::string grid;
    std::string model;

    std::size_t dimension() const noexcept { return band.size(); }
    Eigen::MatrixXd dense() const;
};

OperatorMatrix operator_matrix(NuclearModel const& model,
                               Constants const& constants,
                               int kappa,
                               RadialGrid const& grid);

//! The phi = 0 operator on the same grid.
OperatorMatrix free_operator_matrix(int kappa,
                                    RadialGrid const& grid,
                                    double m = 1.0);

struct Eigensystem
{
    Eigen::VectorXd values;
    Eigen::MatrixXd vectors;
};

//! Full eigendecomposition of the tridiagonal operator (ascending).
Eigensystem eigensystem(OperatorMatrix const& M);

/*!
 * chi_[0,inf)(M) as the sum of outer products of eigenvectors with
 * non-negative eigenvalues. Throws GapCrossingError when an eigenvalue lies
 * within 1e-10 of 0.
 */
Eigen::MatrixXd spectral_projector(OperatorMatrix const& M);

struct ProjectorPair
{
    Eigen::MatrixXd P_plus_free;
    Eigen::MatrixXd P_plus_pert;
    Eigen::MatrixXd Q;
    std::size_t rank_free = 0;
    std::size_t rank_pert = 0;
    //! ||P^2 - P||_F for the free and perturbed projectors.
    double idempotency_free = 0;
    double idempotency_pert = 0;
    double trace_Q = 0;
};

ProjectorPair projector_pair(OperatorMatrix const& M_free,
                             OperatorMatrix const& M_pert);

/*!
 * Q = (1/2 pi) int deta [(M_pert + i eta)^{-1} - (M_free + i eta)^{-1}].
 *
 * The real part of the integrand is even in eta, so the integral is taken
 * over eta = e^t, t in [log|lambda|_min - margin, log|lambda|_max + margin],
 * with the trapezoid rule in t. The integrand is analytic in a strip around
 * the real t axis, so the error falls off exponentially in 1/step.
 */
struct ContourOptions
{
    double initial_step = 1.0;
    double min_step = 1.0 / 32;
    double margin = 36;
    //! Stop when ||Q_h - Q_2h||_F <= tolerance ||Q_h||_F.
    double tolerance = 1e-10;
};

struct ContourResult
{
    Eigen::MatrixXd Q;
    double step = 0;
    std::size_t nodes = 0;
    //! Relative change at the final halving (0 for fixed-step runs).
    double last_change = 0;
    //! (step, relative change) per halving.
    std::vector<std::pair<double, double>> history;
};

ContourResult q_contour(OperatorMatrix const& M_free,
                        OperatorMatrix const& M_pert,
                        ContourOptions const& options = {});

//! One trapezoid sum at a fixed step, no refinement.
ContourResult q_contour_fixed(OperatorMatrix const& M_free,
                              OperatorMatrix const& M_pert,
                              double step,
                              double margin = 36);

//! Re (T + i eta)^{-1} of a symmetric tridiagonal T in O(n^2).
Eigen::MatrixXd resolvent_real_part(Tridiagonal const& T, double eta);

struct HsNormRow
{
    std::string model;
    double zalpha = 0;
    std::size_t n_points = 0;
    double norm = 0;
    //! norm minus the previous refinement of the same model (NaN first).
    double difference = 0;
};

struct HsNormStudy
{
    std::vector<HsNormRow> rows;
    //! Per model: |differences| strictly decrease along the refinement.
    std::vector<bool> stabilizing;
};

/*!
 * Frobenius norms of Q for each model across the given grids. This is a
 * stabilization trend on finite matrices; it does not certify the
 * continuum Hilbert-Schmidt property.
 */
HsNormStudy hs_norm_study(std::vector<NuclearModel> const& models,
                          Constants const& constants,
                          int kappa,
                          std::vector<RadialGrid> const& grids,
                          unsigned threads = 1);
}  // namespace vacpol
