#pragma once

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

#include "vacpol/nuclear_model.hpp"

namespace vacpol
{
using Vec3 = Eigen::Vector3d;

//! Dirac representation: beta = diag(1, 1, -1, -1), alpha_i = offdiag(sigma_i).
struct DiracMatrices
{
    Eigen::Matrix4cd beta;
    Eigen::Matrix4cd alpha[3];

    static DiracMatrices const& standard();
};

//! E(p) = sqrt(p^2 + 1).
double free_energy(Vec3 const& p);

//! alpha.p + beta - i eta as an explicit 4x4 matrix.
Eigen::Matrix4cd free_symbol(Vec3 const& p, double eta);

/*!
 * Closed-form trace of the first-order projector kernel,
 *
 *   tr Q1(p, q) = 2^{-1/2} pi^{-3/2} phi_hat(p - q)
 *                 (p.q + 1 - E(p) E(q)) / (E(p) E(q) (E(p) + E(q))).
 *
 * The numerator is evaluated as -(|p-q|^2 + |p x q|^2) / (p.q + 1 + E(p)E(q))
 * so the diagonal p = q vanishes exactly.
 */
std::complex<double> q1_trace_kernel(Vec3 const& p,
                                     Vec3 const& q,
                                     NuclearModel const& model);

//! Same with phi_hat(p - q) supplied directly.
std::complex<double> q1_trace_kernel(Vec3 const& p, Vec3 const& q, double phi_hat);

/*!
 * (2 pi)^{-5/2} phi_hat int deta tr[(alpha.p + beta - i eta)
 * (alpha.q + beta - i eta)] / ((p^2 + 1 + eta^2)(q^2 + 1 + eta^2)),
 * with the traces taken over explicit 4x4 matrices and the eta integral
 * done by adaptive quadrature in theta = atan(eta).
 */
std::complex<double> q1_trace_quadrature(Vec3 const& p,
                                         Vec3 const& q,
                                         double phi_hat,
                                         double rel_tol = 1e-13);

struct Q2Cancellation
{
    //! |sum over the symmetric eta grid|
    double residual = 0;
    //! |sum over the eta > 0 half of the grid|
    double control = 0;
    //! Largest single weighted term.
    double term_scale = 0;
    std::size_t nodes = 0;
};

/*!
 * Trace of the second-order chain R(p1) phi_hat(p1-p2) R(p2) phi_hat(p2-p3)
 * R(p3), R(p) = (alpha.p + beta - i eta)/(p^2 + 1 + eta^2), summed over a
 * Gauss-Legendre grid in theta = atan(eta) with nodes symmetric about 0.
 * Pass phi12 = phi23 = 1 to test the Dirac structure alone.
 */
Q2Cancellation q2_density_cancellation(Vec3 const& p1,
                                       Vec3 const& p2,
                                       Vec3 const& p3,
                                       double phi12,
                                       double phi23);

Q2Cancellation q2_density_cancellation(Vec3 const& p1,
                                       Vec3 const& p2,
                                       Vec3 const& p3,
                                       NuclearModel const& model);
}  // namespace vacpol
