#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "vacpol/constants.hpp"
#include "vacpol/dirac_algebra.hpp"
#include "vacpol/divergence.hpp"
#include "vacpol/errors.hpp"
#include "vacpol/linear_fit.hpp"
#include "vacpol/nuclear_model.hpp"
#include "vacpol/polarization_kernel.hpp"
#include "vacpol/spectral_lab.hpp"

using namespace vacpol;
using std::numbers::pi;

TEST(DiracMatrices, CliffordAlgebra)
{
    auto const d = DiracMatrices::standard();
    Eigen::Matrix4cd const id = Eigen::Matrix4cd::Identity();
    for (int i = 0; i < 3; ++i)
    {
        EXPECT_LT(((d.alpha[i] * d.beta + d.beta * d.alpha[i])).norm(), 1e-15);
        for (int j = 0; j < 3; ++j)
        {
            Eigen::Matrix4cd const ac = d.alpha[i] * d.alpha[j] + d.alpha[j] * d.alpha[i];
            EXPECT_LT((ac - (i == j ? 2.0 : 0.0) * id).norm(), 1e-15);
        }
    }
    EXPECT_LT((d.beta * d.beta - id).norm(), 1e-15);
}

TEST(DiracMatrices, FreeSymbolSquares)
{
    Vec3 const p(0.3, -1.2, 2.0);
    // (alpha.p + beta)^2 = E^2
    Eigen::Matrix4cd const s = free_symbol(p, 0.0);
    double const e = free_energy(p);
    EXPECT_LT((s * s - e * e * Eigen::Matrix4cd::Identity()).norm(), 1e-13);
}

TEST(Q1, KernelMatchesQuadrature)
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-2, 2);
    for (int i = 0; i < 5; ++i)
    {
        Vec3 const p(u(rng), u(rng), u(rng));
        Vec3 const q(u(rng), u(rng), u(rng));
        auto const a = q1_trace_kernel(p, q, 1.0);
        auto const b = q1_trace_quadrature(p, q, 1.0);
        EXPECT_LT(std::abs(a - b), 1e-12 * std::abs(a));
        EXPECT_LT(std::abs(b.imag()), 1e-14 * std::abs(a));
    }
}

TEST(Q1, DiagonalVanishesExactly)
{
    Vec3 const p(0.7, 0.1, -3.0);
    EXPECT_EQ(q1_trace_kernel(p, p, 2.0), std::complex<double>(0.0));
}

TEST(Q1, LinearInPotential)
{
    Vec3 const p(1, 0, 0), q(0, 1, 0);
    auto const one = q1_trace_kernel(p, q, 1.0);
    EXPECT_NEAR(q1_trace_kernel(p, q, 3.0).real(), 3.0 * one.real(), 1e-15 * std::abs(one));
}

TEST(Q2, DensityCancels)
{
    Vec3 const p1(0.5, 0.1, 0.0), p2(-0.3, 1.1, 0.4), p3(2.0, -0.5, 1.0);
    auto const c = q2_density_cancellation(p1, p2, p3, 1.0, 1.0);
    EXPECT_GT(c.control, 1e-3);
    EXPECT_LT(c.residual, 1e-14 * c.control);
}

TEST(SpectralLab, FreeProjectorIsHalfRank)
{
    auto const grid = RadialGrid::uniform(10, 64);
    auto const M = free_operator_matrix(-1, grid);
    auto const P = spectral_projector(M);
    EXPECT_LT((P * P - P).norm(), 1e-12);
    EXPECT_NEAR(P.trace(), 64.0, 1e-10);
}

TEST(SpectralLab, ContourMatchesSpectral)
{
    Constants const c;
    auto const grid = RadialGrid::uniform(10, 80);
    auto const model = NuclearModel::gaussian(0.3 / c.alpha(), 1.0);
    auto const Mf = free_operator_matrix(-1, grid);
    auto const Mp = operator_matrix(model, c, -1, grid);
    auto const pair = projector_pair(Mf, Mp);
    EXPECT_EQ(pair.rank_free, pair.rank_pert);
    EXPECT_NEAR(pair.trace_Q, 0.0, 1e-10);
    auto const contour = q_contour(Mf, Mp);
    EXPECT_LT((contour.Q - pair.Q).norm(), 1e-9 * pair.Q.norm());
}

TEST(SpectralLab, HsNormScalesLinearlyAtWeakCoupling)
{
    Constants const c;
    auto const g1 = NuclearModel::gaussian(0.01 / c.alpha(), 1.0);
    auto const g2 = g1.with_charge(2 * g1.Z());
    std::vector<RadialGrid> const grids{RadialGrid::uniform(15, 100), RadialGrid::uniform(15, 200)};
    auto const study = hs_norm_study({g1, g2}, c, -1, grids);
    ASSERT_EQ(study.rows.size(), 4u);
    EXPECT_NEAR(study.rows[2].norm / study.rows[0].norm, 2.0, 1e-3);
}

TEST(SpectralLab, ResolventIsSymmetric)
{
    auto const grid = RadialGrid::uniform(5, 64);
    auto const M = free_operator_matrix(1, grid);
    auto const R = resolvent_real_part(M.band, 0.7);
    EXPECT_LT((R - R.transpose()).norm(), 1e-12 * R.norm());
}

TEST(Divergence, LinearFitExact)
{
    std::vector<double> const x{0, 1, 2, 3};
    std::vector<double> const y{1, 3, 5, 7};
    auto const f = linear_fit(x, y);
    EXPECT_DOUBLE_EQ(f.slope, 2.0);
    EXPECT_DOUBLE_EQ(f.intercept, 1.0);
    EXPECT_DOUBLE_EQ(f.r_squared, 1.0);
}

// Reference: the defining 3D integral with the angular part done numerically.
TEST(Divergence, F0Reference)
{
    EXPECT_NEAR(f0_integral(0.1).value, -0.0493056111992911, 1e-12);
}

TEST(Divergence, F0LogarithmicGrowth)
{
    double const a = f0_integral(1e-3).value;
    double const b = f0_integral(1e-4).value;
    EXPECT_NEAR((a - b) / std::log(10.0), f0_log_coefficient, 1e-6);
    EXPECT_THROW(f0_integral(0.0), SingularityError);
}

TEST(Divergence, CutoffSlope)
{
    auto const s = diagonal_divergence_study(1.0, 0.5, {1e2, 1e3, 1e4, 1e5});
    EXPECT_NEAR(s.fit.slope / s.expected_slope, 1.0, 1e-3);
    EXPECT_GT(s.fit.r_squared, 0.9999);
}

TEST(Divergence, RenormalizedDensityMatchesKernel)
{
    for (double k : {0.3, 2.0})
    {
        auto const q = renormalized_density_integral(1.0, k);
        EXPECT_NEAR(q.value, c_closed(k) / (4 * pi * pi), 1e-9 * c_closed(k));
    }
}
