#include "vacpol/divergence.hpp"

#include <cmath>
#include <numbers>
#include <span>

#include <boost/math/quadrature/gauss.hpp>

#include "vacpol/errors.hpp"

namespace vacpol
{
namespace
{
constexpr double pi = std::numbers::pi;
using AngularRule = boost::math::quadrature::gauss<double, 48>;

// N / (E- E+ (E- + E+)) without the cancellation in N.
double diagonal_integrand(double p, double k, double mu)
{
    double const A = p * p + k * k / 4 + 1;
    double const B = p * k * mu;
    double const prod = std::sqrt((A - B) * (A + B));
    double const N = B * B / (A + prod) - k * k / 2;
    return N / (prod * (std::sqrt(A - B) + std::sqrt(A + B)));
}

double angular_diagonal(double p, double k)
{
    return AngularRule::integrate(
        [p, k](double mu) { return diagonal_integrand(p, k, mu); }, -1.0, 1.0);
}

double angular_renormalized(double p, double k)
{
    double const e2 = 1 + p * p;
    double const e5 = e2 * e2 * std::sqrt(e2);
    return AngularRule::integrate(
        [p, k, e5](double mu) {
            double const counter
                = k * k * (p * p * (1 - mu * mu) + 1) / (4 * e5);
            return diagonal_integrand(p, k, mu) + counter;
        },
        -1.0,
        1.0);
}
}  // namespace

LinearFit linear_fit(std::span<double const> x, std::span<double const> y)
{
    if (x.size() != y.size() || x.size() < 2)
    {
        throw DomainError("linear_fit needs two equally sized samples");
    }
    double const n = static_cast<double>(x.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
    {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
    {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    fit.r_squared = syy > 0 ? sxy * sxy / (sxx * syy) : 1.0;
    return fit;
}

QuadResult f0_integral(double xi)
{
    if (!(xi > 0))
    {
        throw SingularityError(
            "F_0 diverges logarithmically at xi = 0; use xi > 0");
    }
    auto integrand = [xi](double p) {
        double const x = p * xi;
        double const j0 = std::sph_bessel(0, x);
        double const j2 = std::sph_bessel(2, x);
        double const e2 = 1 + p * p;
        double const bracket = j0 - p * p * (j0 - 2 * j2) / (3 * e2);
        return p * p / (e2 * std::sqrt(e2)) * bracket;
    };
    OscillatoryOptions opts;
    opts.rel_tol = 1e-11;
    opts.inner_scale = 1.0;
    auto res = integrate_oscillatory(integrand, pi / xi, opts);
    double const pre = -1 / (4 * pi * pi);
    return {pre * res.value, std::abs(pre) * res.abs_error};
}

DivergenceStudy diagonal_divergence_study(double phi_hat,
                                          double k,
                                          std::vector<double> const& cutoffs)
{
    if (cutoffs.empty())
    {
        throw DomainError("divergence study needs at least one cut-off");
    }
    for (std::size_t i = 0; i < cutoffs.size(); ++i)
    {
        if (!(cutoffs[i] >= 1) || (i > 0 && !(cutoffs[i] > cutoffs[i - 1])))
        {
            throw DomainError("cut-offs must be increasing and >= 1");
        }
    }
    DivergenceStudy out;
    out.k = k;
    out.phi_hat = phi_hat;
    out.cutoffs = cutoffs;
    out.expected_slope = -phi_hat * k * k / (6 * pi * pi);

    double const pre = phi_hat / (4 * pi * pi * pi) * 2 * pi;
    auto radial = [k](double p) { return p * p * angular_diagonal(p, k); };

    double running = 0;
    double lower = 0;
    for (double cutoff : cutoffs)
    {
        std::vector<double> pts;
        if (lower == 0)
        {
            pts = decade_breakpoints(1.0, cutoff);
        }
        else
        {
            pts = {lower, cutoff};
        }
        running += integrate_panels(radial, pts, 1e-12).value;
        lower = cutoff;
        out.values.push_back(pre * running);
    }
    for (std::size_t i = 0; i + 1 < out.values.size(); ++i)
    {
        out.increments.push_back(out.values[i + 1] - out.values[i]);
    }

    if (cutoffs.size() >= 2)
    {
        std::vector<double> lx;
        for (double c : cutoffs)
            lx.push_back(std::log(c));
        out.fit = linear_fit(lx, out.values);
    }
    return out;
}

DivergenceStudy diagonal_divergence_study(NuclearModel const& model,
                                          double k,
                                          std::vector<double> const& cutoffs)
{
    return diagonal_divergence_study(potential_fourier(model, k), k, cutoffs);
}

QuadResult renormalized_density_integral(double phi_hat, double k)
{
    if (!(k > 0))
    {
        throw DomainError("renormalized_density_integral needs k > 0");
    }
    auto radial = [k](double p) { return p * p * angular_renormalized(p, k); };
    auto pts = decade_breakpoints(std::min(1.0, k), 1e7);
    auto res = integrate_panels(radial, pts, 1e-12);
    double const pre = phi_hat / (4 * pi * pi * pi) * 2 * pi;
    return {pre * res.value, std::abs(pre) * res.abs_error};
}
}  // namespace vacpol
