#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "vacpol/constants.hpp"
#include "vacpol/errors.hpp"
#include "vacpol/hydrogenic.hpp"
#include "vacpol/quadrature.hpp"
#include "vacpol/shift_engine.hpp"
#include "vacpol/uehling_potential.hpp"

using namespace vacpol;
using std::numbers::pi;

namespace
{
double overlap(HydrogenicState const& a, HydrogenicState const& b)
{
    double const R = std::max(a.support_radius(), b.support_radius());
    double const pts[] = {0, 0.1 * R, 0.3 * R, R};
    return integrate_panels(
               [&](double r) { return r * r * a.radial(r) * b.radial(r); }, pts, 1e-12)
        .value;
}
}  // namespace

TEST(Hydrogenic, Orthonormal)
{
    double const beta = 0.7;
    HydrogenicState const s1(1, 0, beta), s2(2, 0, beta), s3(3, 0, beta), p2(2, 1, beta);
    EXPECT_NEAR(overlap(s1, s1), 1.0, 1e-12);
    EXPECT_NEAR(overlap(p2, p2), 1.0, 1e-12);
    EXPECT_NEAR(overlap(s3, s3), 1.0, 1e-12);
    EXPECT_NEAR(overlap(s1, s2), 0.0, 1e-12);
    EXPECT_NEAR(overlap(s2, s3), 0.0, 1e-12);
}

TEST(Hydrogenic, DensityAtOrigin)
{
    double const beta = 0.01;
    for (int n : {1, 2, 3})
    {
        HydrogenicState const s(n, 0, beta);
        EXPECT_NEAR(s.density(0), std::pow(beta, 3) / (pi * n * n * n), 1e-12 * s.density(0));
    }
    EXPECT_EQ(HydrogenicState(2, 1, beta).density(0), 0.0);
}

TEST(Hydrogenic, InvalidQuantumNumbers)
{
    EXPECT_THROW(HydrogenicState(1, 1, 1.0), DomainError);
    EXPECT_THROW(HydrogenicState(0, 0, 1.0), DomainError);
    EXPECT_THROW(HydrogenicState(1, 0, 0.0), DomainError);
}

// Reference shifts: 30-digit quadrature of -alpha^2 int r^2 U_1 R^2 for Z = 1.
TEST(Shift, HydrogenReference)
{
    Constants const c;
    double const a = c.alpha();
    auto U = [](double r) { return uehling_point_position(1, r); };
    struct Case
    {
        int n, l;
        double dE;
    };
    for (auto const [n, l, ref] : {Case{1, 0, -2.38563089058957740808e-10},
                                   Case{2, 0, -2.98201332878174411527e-11},
                                   Case{2, 1, -8.48980912549019045219e-17}})
    {
        HydrogenicState const psi(n, l, a);
        auto const q = first_order_shift(U, psi, a);
        EXPECT_NEAR(q.value, a * ref, 1e-9 * std::abs(a * ref)) << n << l;
    }
}

TEST(Shift, PointLimit)
{
    double const a = Constants::default_alpha;
    EXPECT_NEAR(point_limit_shift(2, 0, 1, a), -std::pow(a, 5) / (30 * pi), 1e-25);
    EXPECT_EQ(point_limit_shift(2, 1, 1, a), 0.0);
    EXPECT_NEAR(point_limit_shift(1, 0, 1, a) / point_limit_shift(2, 0, 1, a), 8.0, 1e-12);
    EXPECT_NEAR(point_limit_shift(1, 0, 1, a, 10) / point_limit_shift(1, 0, 1, a), 1000, 1e-9);
    EXPECT_NEAR(coarse_2s_estimate(1, a), -std::pow(a, 5) / 30, 1e-25);
}

TEST(Shift, ReportRows)
{
    Constants const c;
    auto const rep = shift_report(NuclearModel::point(1), {{1, 0}, {2, 0}, {2, 1}}, c);
    ASSERT_EQ(rep.rows.size(), 3u);
    EXPECT_NEAR(rep.rows[1].delta_E / rep.rows[1].point_limit, 1.0, 0.02);
    EXPECT_NEAR(rep.rows[0].delta_E / rep.rows[1].delta_E, 8.0, 1e-3);
    EXPECT_LT(std::abs(rep.rows[2].delta_E), 1e-5 * std::abs(rep.rows[1].delta_E));
    ASSERT_EQ(rep.splitting.size(), 1u);
    EXPECT_EQ(rep.splitting[0].first, 2);
    EXPECT_EQ(rep.density, "schroedinger");
}

TEST(Shift, ReportIsThreadIndependent)
{
    Constants const c;
    ShiftOptions one;
    ShiftOptions three;
    three.threads = 3;
    auto const g = NuclearModel::gaussian(1, 0.01);
    auto const a = shift_report(g, {{1, 0}, {2, 0}}, c, one);
    auto const b = shift_report(g, {{1, 0}, {2, 0}}, c, three);
    for (std::size_t i = 0; i < a.rows.size(); ++i)
        EXPECT_EQ(a.rows[i].delta_E, b.rows[i].delta_E);
}

TEST(Shift, MuonicEnhancement)
{
    Constants const c;
    double const m = reduced_mass(masses::muon, masses::proton);
    auto const rep = muonic_report(NuclearModel::point(1), {{2, 0}, {2, 1}}, c.with_mass(m));
    // 2s-2p vacuum polarization in muonic hydrogen is about -205 meV.
    double const split_ev = to_ev(rep.splitting.at(0).second, c);
    EXPECT_NEAR(split_ev, -0.2050, 0.0005);
    EXPECT_GT(rep.enhancement_over_electronic, 1e6);
}

TEST(Shift, TableCoverageIsChecked)
{
    Constants const c;
    double const r[] = {1e-3, 1e-2, 1e-1};
    auto const table = uehling_point_table(1, r);
    HydrogenicState const psi(1, 0, c.alpha());
    EXPECT_THROW(first_order_shift(table, psi, c.alpha()), CoverageError);
}

TEST(EffectivePotential, LogEnhancementNearNucleus)
{
    double const a = Constants::default_alpha;
    auto const far = effective_potential(1, a, 1.0);
    auto const near = effective_potential(1, a, 1e-6);
    EXPECT_FALSE(far.log_enhanced);
    EXPECT_TRUE(near.log_enhanced);
    EXPECT_LT(near.relative_difference, 1e-4);
    EXPECT_LT(near.numeric, near.coulomb);
}

TEST(EffectivePotential, EffectiveChargeGrowsWithoutBound)
{
    auto const d = unboundedness_diagnostic(1, Constants::default_alpha);
    EXPECT_TRUE(d.monotone_growth);
    EXPECT_LT(d.log_radius_at_bound, -100);
    EXPECT_GT(d.rows.back().z_eff, d.rows.front().z_eff);
}
