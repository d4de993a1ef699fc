#include "vacpol/polarization_kernel.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "vacpol/errors.hpp"

namespace vacpol
{
namespace
{
constexpr double pi = std::numbers::pi;

// (k^2/2) sum_j (-1)^{j+1} u^j/j I_{j+1}, u = k^2/4, I_m = int_0^1 (1-x^2)^m.
double c_series(double k)
{
    double const u = k * k / 4;
    double I = 8.0 / 15.0;  // I_2
    double upow = u;
    double sum = 0;
    for (int j = 1; j < 200; ++j)
    {
        double const term = upow / j * I;
        sum += (j % 2 == 1) ? term : -term;
        if (term < 1e-18 * std::abs(sum))
        {
            break;
        }
        upow *= u;
        int const m = j + 2;
        I *= 2.0 * m / (2.0 * m + 1);
    }
    return k * k / 2 * sum;
}

double c_stable_closed(double k)
{
    double const t = 4 / (k * k);
    double const s = std::sqrt(1 + t);
    // log((s+1)/(s-1)) with s - 1 = t/(s+1)
    double const L = 2 * std::log1p(s) - std::log(t);
    return k * k / 3 * ((1 - t / 2) * s * L + t - 5.0 / 3.0);
}
}  // namespace

double c_closed(double k)
{
    k = std::abs(k);
    if (k == 0)
    {
        return 0;
    }
    if (k < 1)
    {
        return c_series(k);
    }
    if (k > 1e100)
    {
        return k * k * (2.0 / 3.0 * std::log(k) - 5.0 / 9.0) + 2;
    }
    return c_stable_closed(k);
}

QuadResult c_integral(double k)
{
    if (!(k >= 0))
    {
        throw DomainError("c_integral needs k >= 0");
    }
    if (k == 0)
    {
        return {};
    }
    double const k2 = k * k;
    // In y = 1 - x the weight 1 - x^2 = y (2 - y) is formed without
    // cancellation near the end point.
    auto integrand = [k2](double y) {
        double const w = y * (2 - y);
        return w * std::log1p(k2 * w / 4);
    };
    // The logarithm turns over where y ~ 2/k^2; cluster panels there.
    std::vector<double> pts{0.0};
    int const lowest = std::min(15, static_cast<int>(std::ceil(std::log10(k2))) + 3);
    for (int e = lowest; e >= 2; --e)
    {
        pts.push_back(std::pow(10.0, -e));
    }
    pts.push_back(0.1);
    pts.push_back(0.5);
    pts.push_back(1.0);
    auto res = integrate_panels(integrand, pts, 1e-13, 30);
    QuadResult out{k2 / 2 * res.value, k2 / 2 * res.abs_error};
    if (out.abs_error > 1e-11 * std::abs(out.value))
    {
        throw QuadratureError("c_integral missed its 1e-11 tolerance",
                              out.value,
                              out.abs_error);
    }
    return out;
}

double vacuum_density_fourier(NuclearModel const& model, double k)
{
    if (!(k >= 0))
    {
        throw DomainError("vacuum_density_fourier needs k >= 0");
    }
    if (k == 0)
    {
        return 0;
    }
    return potential_fourier(model, k) * c_closed(k) / (4 * pi * pi);
}

double uehling_fourier(NuclearModel const& model, double k)
{
    if (!(k > 0))
    {
        throw DomainError("uehling_fourier needs k > 0");
    }
    double const C = c_closed(k);
    double const n_hat = density_fourier(model, k);
    double const via_potential = potential_fourier(model, k) * C / (pi * k * k);
    double const via_density = 4 * n_hat * C / (k * k * k * k);
    double const scale = std::max(std::abs(via_potential), std::abs(via_density));
    // Relative agreement is only meaningful while no factor is subnormal.
    constexpr double full_precision = std::numeric_limits<double>::min()
                                      / std::numeric_limits<double>::epsilon();
    bool const comparable = std::min(std::abs(n_hat), scale) >= full_precision;
    if (comparable && std::abs(via_potential - via_density) > 1e-14 * scale)
    {
        throw InvariantViolation(
            "Uehling transform routes disagree at k = " + std::to_string(k));
    }
    return via_density;
}

KernelEval evaluate_kernel(NuclearModel const& model, double k)
{
    KernelEval out;
    out.k = k;
    out.C = c_closed(k);
    out.rho_vac_hat = vacuum_density_fourier(model, k);
    out.U_hat = uehling_fourier(model, k);
    return out;
}
}  // namespace vacpol
