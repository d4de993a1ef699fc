#include <cmath>

#include <gtest/gtest.h>

#include "vacpol/errors.hpp"
#include "vacpol/nuclear_model.hpp"
#include "vacpol/radial_dirac.hpp"
#include "vacpol/radial_grid.hpp"

using namespace vacpol;

TEST(Sommerfeld, GroundState)
{
    for (double za : {0.1, 0.5, 0.9})
        EXPECT_NEAR(coulomb_dirac_energy(0, -1, za), std::sqrt(1 - za * za), 1e-15);
}

TEST(Sommerfeld, DegenerateFineStructurePartners)
{
    // 2s_1/2 (n_r = 1, kappa = -1) and 2p_1/2 (n_r = 1, kappa = +1)
    double const za = 0.3;
    EXPECT_DOUBLE_EQ(coulomb_dirac_energy(1, -1, za), coulomb_dirac_energy(1, 1, za));
    EXPECT_DOUBLE_EQ(coulomb_dirac_level(0, 1, za), coulomb_dirac_level(1, -1, za));
}

TEST(Sommerfeld, NonrelativisticLimit)
{
    double const za = 1e-3;
    double const e = coulomb_dirac_energy(1, -1, za);
    EXPECT_NEAR((1 - e) / (za * za), 1.0 / 8, 1e-6);
}

TEST(Sommerfeld, RejectsSupercritical)
{
    EXPECT_THROW(coulomb_dirac_energy(0, -1, 1.0), SupercriticalError);
    EXPECT_THROW(coulomb_dirac_energy(0, 1, 0.5), DomainError);
    EXPECT_DOUBLE_EQ(coulomb_dirac_energy(0, -1, 0.0), 1.0);
}

TEST(RadialGrid, Construction)
{
    auto const g = RadialGrid::log(1e-6, 100, 500);
    EXPECT_EQ(g.n_points(), 500u);
    EXPECT_EQ(g.scheme(), GridScheme::log);
    EXPECT_EQ(g.midpoints().size(), 500u);
    EXPECT_THROW(RadialGrid::uniform(10, 10), DomainError);
    EXPECT_THROW(RadialGrid::log(10, 1, 100), DomainError);
    EXPECT_EQ(grid_scheme_from_string("uniform"), GridScheme::uniform);
}

TEST(RadialGrid, RefineAndEnlarge)
{
    auto const g = RadialGrid::uniform(10, 100);
    auto const f = g.refined(2);
    EXPECT_EQ(f.n_points(), 200u);
    EXPECT_EQ(f.r_max(), g.r_max());
    EXPECT_NEAR(f.step() / g.step(), 0.5, 0.5 / g.n_points());
    // Enlarging keeps the step up to rounding of the point count.
    auto const e = g.enlarged(1.5);
    EXPECT_NEAR(e.r_max(), 15, 1e-12);
    EXPECT_NEAR(e.step(), g.step(), g.step() / g.n_points());
}

TEST(RadialDirac, FreeOperatorHasEmptyGap)
{
    auto const g = RadialGrid::uniform(30, 300);
    auto const s = solve_channel(coulomb_potential_energy(0.0), -1, g);
    EXPECT_TRUE(s.gap_states.empty());
    for (double e : s.eigenvalues)
        EXPECT_GE(std::abs(e), 1.0 - 1e-12);
}

TEST(RadialDirac, CoulombConvergesToSommerfeld)
{
    double const za = 0.3;
    auto const pot = coulomb_potential_energy(za);
    auto const coarse = RadialGrid::log(1e-7, 200, 1500);
    auto const fine = coarse.refined(2);
    auto const ec = solve_channel(pot, -1, coarse).gap_energies();
    auto const ef = solve_channel(pot, -1, fine).gap_energies();
    ASSERT_GE(ec.size(), 2u);
    for (std::size_t k = 0; k < 2; ++k)
    {
        double const exact = coulomb_dirac_level(k, -1, za);
        double const rich = richardson(ec[k], coarse.step(), ef[k], fine.step());
        EXPECT_LT(std::abs(rich - exact), std::abs(ef[k] - exact));
        EXPECT_NEAR(rich, exact, 1e-8);
    }
}

TEST(RadialDirac, ExtendedLevelsAboveCoulomb)
{
    Constants const c;
    double const za = 0.5;
    auto const model = NuclearModel::gaussian(za / c.alpha(), 0.5);
    auto const grid = RadialGrid::log(1e-6, 300, 1500);
    for (int kappa : {-1, 1, -2})
    {
        auto const e = solve_channel(nuclear_potential_energy(model, c), kappa, grid).gap_energies();
        ASSERT_GE(e.size(), 3u);
        for (std::size_t k = 0; k < 3; ++k)
            EXPECT_GT(e[k], coulomb_dirac_level(k, kappa, za)) << kappa << " " << k;
    }
}

TEST(RadialDirac, GroundStateIsNodeless)
{
    auto const grid = RadialGrid::log(1e-6, 100, 1200);
    auto const s = solve_channel(coulomb_potential_energy(0.2), -1, grid);
    ASSERT_FALSE(s.spinors.empty());
    EXPECT_EQ(s.spinors.front().sign_changes, 0u);
    EXPECT_NEAR(s.spinors.front().norm_inside(grid, 100), 1.0, 1e-10);
    EXPECT_NEAR(s.spinors.front().mean_radius, 1.5 / 0.2, 0.05 / 0.2);
}

TEST(RadialDirac, MassScaling)
{
    // Energies scale with m at fixed Z alpha when the grid is scaled by 1/m.
    double const m = 200;
    auto const pot = coulomb_potential_energy(0.4);
    auto const e1 = solve_channel(pot, -1, RadialGrid::log(1e-6, 100, 800)).gap_energies();
    auto const em = solve_channel(pot, -1, RadialGrid::log(1e-6 / m, 100 / m, 800), m).gap_energies();
    ASSERT_FALSE(e1.empty());
    EXPECT_NEAR(em[0] / m, e1[0], 1e-12);
}

TEST(RadialDirac, BoxCheck)
{
    auto const grid = RadialGrid::log(1e-6, 150, 1200);
    auto const check = check_box_size(coulomb_potential_energy(0.3), -1, grid, 2);
    EXPECT_TRUE(check.converged) << check.max_change;
}

TEST(RadialDirac, OperatorIsSymmetricTridiagonal)
{
    auto const grid = RadialGrid::uniform(10, 64);
    auto const T = build_radial_operator(coulomb_potential_energy(0.1), -1, grid);
    EXPECT_EQ(T.diag.size(), 2 * grid.n_points());
    EXPECT_EQ(T.off.size(), T.diag.size() - 1);
}
