#include <cmath>

#include <gtest/gtest.h>

#include "vacpol/constants.hpp"
#include "vacpol/errors.hpp"
#include "vacpol/nuclear_model.hpp"

using namespace vacpol;

TEST(Constants, DefaultsAreElectronic)
{
    Constants c;
    EXPECT_EQ(c.m_eff(), 1.0);
    EXPECT_EQ(c.alpha(), Constants::default_alpha);
    EXPECT_NEAR(1 / c.alpha(), 137.035999, 1e-5);
}

TEST(Constants, WithMassKeepsTheRest)
{
    Constants c;
    auto const mu = c.with_mass(masses::muon);
    EXPECT_EQ(mu.m_eff(), masses::muon);
    EXPECT_EQ(mu.alpha(), c.alpha());
    EXPECT_EQ(mu.electron_compton_fm(), c.electron_compton_fm());
}

TEST(Constants, RejectsNonPositive)
{
    EXPECT_THROW(Constants(0.0, 1.0), DomainError);
    EXPECT_THROW(Constants(1e-2, -1.0), DomainError);
}

TEST(Constants, ReducedMass)
{
    EXPECT_DOUBLE_EQ(reduced_mass(2.0, 2.0), 1.0);
    // muon-proton reduced mass, 185.84 electron masses
    EXPECT_NEAR(reduced_mass(masses::muon, masses::proton), 185.8409, 1e-3);
}

TEST(Constants, FemtometerConversion)
{
    Constants c;
    EXPECT_DOUBLE_EQ(fm_to_natural(c.electron_compton_fm(), c), 1.0);
    EXPECT_NEAR(to_ev(1.0, c), 510998.95, 1e-6);
}

TEST(NuclearModel, KindNamesRoundTrip)
{
    for (auto k : {NuclearKind::point, NuclearKind::gaussian, NuclearKind::uniform_ball})
        EXPECT_EQ(nuclear_kind_from_string(to_string(k)), k);
    EXPECT_THROW(nuclear_kind_from_string("shell"), DomainError);
}

TEST(NuclearModel, RejectsBadParameters)
{
    EXPECT_THROW(NuclearModel::gaussian(1, 0), DomainError);
    EXPECT_THROW(NuclearModel::uniform_ball(1, -1), DomainError);
    EXPECT_THROW(NuclearModel::point(-1), DomainError);
}

TEST(NuclearModel, PointHasNoDensity)
{
    EXPECT_THROW(density(NuclearModel::point(1), 1.0), UnsupportedOperation);
}

TEST(NuclearModel, FourierAtZeroIsTotalCharge)
{
    double const norm = std::pow(2 * std::numbers::pi, -1.5);
    for (auto const& m : {NuclearModel::point(3),
                          NuclearModel::gaussian(3, 0.7),
                          NuclearModel::uniform_ball(3, 1.3)})
    {
        EXPECT_NEAR(density_fourier(m, 0.0), 3 * norm, 1e-15) << m.describe();
    }
}

TEST(NuclearModel, PotentialIsCoulombOutside)
{
    auto const ball = NuclearModel::uniform_ball(2, 1.0);
    EXPECT_DOUBLE_EQ(potential(ball, 2.0), 1.0);
    // Inside the ball: Z (3 R^2 - r^2) / (2 R^3)
    EXPECT_DOUBLE_EQ(potential(ball, 0.0), 3.0);
    auto const g = NuclearModel::gaussian(1, 0.1);
    EXPECT_NEAR(potential(g, 5.0), 0.2, 1e-15);
    EXPECT_NEAR(potential(NuclearModel::point(2), 4.0), 0.5, 1e-15);
}

TEST(NuclearModel, GaussianPotentialAtOrigin)
{
    // phi(0) = Z sqrt(2/pi) / a
    auto const g = NuclearModel::gaussian(1, 2.0);
    EXPECT_NEAR(potential(g, 0.0), std::sqrt(2 / std::numbers::pi) / 2, 1e-15);
}

TEST(NuclearModel, PotentialFourierSingularAtZero)
{
    EXPECT_THROW(potential_fourier(NuclearModel::point(1), 0.0), SingularityError);
    double const k = 0.3;
    double const expect = 4 * std::numbers::pi * density_fourier(NuclearModel::point(1), k) / (k * k);
    EXPECT_DOUBLE_EQ(potential_fourier(NuclearModel::point(1), k), expect);
}

TEST(NuclearModel, WithChargeScales)
{
    auto const g = NuclearModel::gaussian(1, 0.5).with_charge(4);
    EXPECT_EQ(g.Z(), 4);
    EXPECT_EQ(g.width(), 0.5);
    EXPECT_EQ(g.kind(), NuclearKind::gaussian);
}
