#include "vacpol/fourier.hpp"

#include <cmath>
#include <numbers>

#include "vacpol/errors.hpp"

namespace vacpol
{
QuadResult fourier_radial(RealFunction const& f,
                          double k,
                          double length_scale,
                          double rel_tol)
{
    if (!(k >= 0))
    {
        throw DomainError("fourier_radial needs k >= 0");
    }
    double const norm = std::sqrt(2 / std::numbers::pi);
    if (k == 0)
    {
        // Map [0, inf) onto [0, 1) with r = s/(1-s) in decade panels.
        auto g = [&](double s) {
            if (s >= 1)
            {
                return 0.0;
            }
            double const r = length_scale * s / (1 - s);
            double const jac = length_scale / ((1 - s) * (1 - s));
            return r * r * f(r) * jac;
        };
        double const pts[] = {0.0, 0.25, 0.5, 0.75, 0.9, 0.99, 0.999, 1.0};
        auto res = integrate_panels(g, pts, rel_tol);
        return {norm * res.value, norm * res.abs_error};
    }

    OscillatoryOptions opts;
    opts.rel_tol = rel_tol;
    opts.inner_scale = length_scale;
    auto res = integrate_oscillatory(
        [&](double r) { return r * std::sin(k * r) * f(r); },
        std::numbers::pi / k,
        opts);
    return {norm * res.value / k, norm * res.abs_error / k};
}
}  // namespace vacpol
