#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "vacpol/errors.hpp"
#include "vacpol/nuclear_model.hpp"
#include "vacpol/quadrature.hpp"
#include "vacpol/uehling_potential.hpp"

using namespace vacpol;
using std::numbers::pi;

// References: 30-digit quadrature of the s-integral representation.
TEST(UehlingPoint, MatchesReference)
{
    EXPECT_NEAR(uehling_point_position(1, 0.01), 68.2888058974858183259573, 1e-10 * 68.29);
    EXPECT_NEAR(uehling_point_position(1, 1.0), 0.00762516067318353208599, 1e-10 * 7.6e-3);
    EXPECT_NEAR(uehling_point_position(1, 5.0), 8.58064443228521294506e-8, 1e-10 * 8.6e-8);
}

TEST(UehlingPoint, LinearInCharge)
{
    for (double r : {1e-3, 0.2, 7.0})
        EXPECT_EQ(uehling_point_position(2, r), 2 * uehling_point_position(1, r));
}

TEST(UehlingPoint, RejectsNonPositiveRadius)
{
    EXPECT_THROW(uehling_point_position(1, 0.0), DomainError);
}

TEST(UehlingPoint, SmallRadiusLogLaw)
{
    double const r = 1e-6;
    double const law = -(2 / (3 * pi * r)) * (std::log(r) + 5.0 / 6 + std::numbers::egamma);
    EXPECT_NEAR(uehling_point_position(1, r) / law, 1.0, 1e-5);
}

TEST(UehlingPoint, PrimitiveReference)
{
    EXPECT_NEAR(uehling_point_primitive(0.5), 0.0119408179749332212096, 1e-12);
}

TEST(UehlingPoint, PrimitiveDerivative)
{
    // W'(x) = -x U_1(x)
    for (double x : {0.05, 0.5, 3.0})
    {
        double const h = 1e-4 * x;
        double const d = (uehling_point_primitive(x + h) - uehling_point_primitive(x - h)) / (2 * h);
        EXPECT_NEAR(d, -x * uehling_point_position(1, x), 1e-7 * x * uehling_point_position(1, x));
    }
}

TEST(UehlingPoint, TotalChargeIntegral)
{
    // int_0^inf r^2 U_1(r) dr = 1/(15 pi)
    auto const rU = [](double r) { return r * r * uehling_point_position(1, r); };
    double const pts[] = {1e-9, 1e-6, 1e-4, 1e-2, 0.1, 1, 5, 40};
    auto const q = integrate_panels(rU, pts, 1e-11);
    EXPECT_NEAR(q.value, 1 / (15 * pi), 1e-9);
}

TEST(UehlingExtended, ReferenceValues)
{
    auto const g = NuclearModel::gaussian(1, 1.0);
    EXPECT_NEAR(uehling_position_value(g, 0.5).value, 0.0121028037056977685335, 1e-16);
    EXPECT_NEAR(uehling_position_value(g, 3.0).value, 0.000297925589513516190914, 1e-15);
}

TEST(UehlingExtended, RoutesAgree)
{
    auto const g = NuclearModel::gaussian(1, 0.3);
    for (double r : {0.1, 0.7, 2.0})
    {
        UehlingOptions f;
        f.route = UehlingRoute::fourier;
        UehlingOptions c;
        c.route = UehlingRoute::convolution;
        double const a = uehling_position_value(g, r, f).value;
        double const b = uehling_position_value(g, r, c).value;
        EXPECT_NEAR(a, b, 1e-9 * std::abs(a)) << "r=" << r;
    }
}

TEST(UehlingExtended, ApproachesPointOutside)
{
    auto const b = NuclearModel::uniform_ball(1, 0.01);
    for (double r : {1.0, 4.0})
    {
        double const ext = uehling_position_value(b, r).value;
        EXPECT_NEAR(ext / uehling_point_position(1, r), 1.0, 1e-3);
    }
}

TEST(UehlingExtended, FiniteAtOrigin)
{
    auto const g = NuclearModel::gaussian(1, 0.5);
    double const u0 = uehling_position_value(g, 0.0).value;
    double const u1 = uehling_position_value(g, 1e-3).value;
    EXPECT_TRUE(std::isfinite(u0));
    EXPECT_NEAR(u0, u1, 1e-5 * u0);
}

TEST(UehlingExtended, TableIsThreadIndependent)
{
    auto const g = NuclearModel::gaussian(1, 0.5);
    auto const radii = log_spaced(1e-2, 20, 17);
    UehlingOptions one;
    UehlingOptions four;
    four.threads = 4;
    auto const a = uehling_position(g, radii, one);
    auto const b = uehling_position(g, radii, four);
    EXPECT_EQ(a.values, b.values);
    EXPECT_EQ(a.meta, b.meta);
}

TEST(UehlingExtended, PointModelRejected)
{
    double const r[] = {1.0};
    EXPECT_THROW(uehling_position(NuclearModel::point(1), r), UnsupportedOperation);
}

TEST(RadialTable, InterpolationReproducesSmoothData)
{
    auto const radii = log_spaced(1e-3, 10, 200);
    auto const t = uehling_point_table(1, radii);
    for (double r : {2e-3, 0.37, 8.1})
        EXPECT_NEAR(t.interpolate(r) / uehling_point_position(1, r), 1.0, 1e-5);
    EXPECT_THROW(t.interpolate(20.0), CoverageError);
}

TEST(RadialTable, LogSpacing)
{
    auto const r = log_spaced(1, 1000, 4);
    ASSERT_EQ(r.size(), 4u);
    EXPECT_DOUBLE_EQ(r[1], 10.0);
    EXPECT_EQ(r.back(), 1000.0);
}
