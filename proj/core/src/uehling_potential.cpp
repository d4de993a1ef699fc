#include "vacpol/uehling_potential.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "vacpol/errors.hpp"
#include "vacpol/fourier.hpp"
#include "vacpol/parallel.hpp"
#include "vacpol/polarization_kernel.hpp"

namespace vacpol
{
namespace
{
constexpr double pi = std::numbers::pi;

// Panels in t = acosh(s) up to where exp(-4 rate sinh^2(t/2)) < e^-45.
std::vector<double> t_panels(double rate)
{
    // rate * 4 sinh^2(t/2) >= 45
    double const t_max = 2 * std::asinh(std::sqrt(45 / (4 * rate)));
    std::vector<double> pts{0.0};
    for (double t = 0.5; t < t_max; t *= 2)
    {
        pts.push_back(t);
    }
    pts.push_back(t_max);
    return pts;
}

double tail_radius(NuclearModel const& model)
{
    switch (model.kind())
    {
        case NuclearKind::gaussian:
            return 14 * model.width();
        case NuclearKind::uniform_ball:
            return model.width();
        case NuclearKind::point:
            break;
    }
    return 0;
}

QuadResult fourier_route(NuclearModel const& model, double r, double rel_tol)
{
    auto u_hat = [&model](double k) { return uehling_fourier(model, k); };
    return fourier_radial(u_hat, r, 1.0 / model.width(), rel_tol);
}

QuadResult convolution_route(NuclearModel const& model, double r, double rel_tol)
{
    if (!(r > 0))
    {
        throw DomainError("convolution route needs r > 0");
    }
    auto integrand = [&](double s) {
        double const n = density(model, s);
        if (n == 0)
        {
            return 0.0;
        }
        return s * n
               * (uehling_point_primitive(std::abs(r - s))
                  - uehling_point_primitive(r + s));
    };
    double const s_max = tail_radius(model);
    std::vector<double> pts{0.0};
    if (model.kind() == NuclearKind::gaussian)
    {
        for (double s = model.width(); s < s_max; s += 2 * model.width())
        {
            pts.push_back(s);
        }
    }
    if (r < s_max)
    {
        pts.push_back(r);
    }
    pts.push_back(s_max);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    auto res = integrate_panels(integrand, pts, rel_tol * 1e-2, 30);
    double const pre = 2 * pi / r;
    return {pre * res.value, pre * res.abs_error};
}
}  // namespace

QuadResult uehling_point_position_detail(double Z, double r)
{
    if (!(r > 0))
    {
        throw DomainError("uehling_point_position needs r > 0");
    }
    auto integrand = [r](double t) {
        double const c = std::cosh(t);
        double const th = std::tanh(t);
        double const sh = std::sinh(0.5 * t);
        return std::exp(-4 * r * sh * sh) * (1 + 0.5 / (c * c)) * th * th;
    };
    auto pts = t_panels(r);
    auto res = integrate_panels(integrand, pts, 1e-13);
    double const pre = 2 * Z / (3 * pi * r) * std::exp(-2 * r);
    return {pre * res.value, pre * res.abs_error};
}

double uehling_point_position(double Z, double r)
{
    return uehling_point_position_detail(Z, r).value;
}

double uehling_point_primitive(double x)
{
    if (!(x >= 0))
    {
        throw DomainError("uehling_point_primitive needs x >= 0");
    }
    auto integrand = [x](double t) {
        double const c = std::cosh(t);
        double const th = std::tanh(t);
        double const sh = std::sinh(0.5 * t);
        return std::exp(-4 * x * sh * sh) * (1 + 0.5 / (c * c)) * th * th / c;
    };
    // The 1/cosh factor alone bounds the range by t = 40 (e^-40).
    std::vector<double> pts;
    if (x > 0)
    {
        pts = t_panels(x);
    }
    if (pts.empty() || pts.back() > 40)
    {
        pts = {0.0, 0.5, 1, 2, 4, 8, 16, 40};
    }
    auto res = integrate_panels(integrand, pts, 1e-13);
    return std::exp(-2 * x) * res.value / (3 * pi);
}

QuadResult uehling_position_value(NuclearModel const& model,
                                  double r,
                                  UehlingOptions const& options)
{
    if (model.kind() == NuclearKind::point)
    {
        throw UnsupportedOperation(
            "uehling_position handles extended nuclei only; "
            "use uehling_point_position for a point nucleus");
    }
    if (!(r >= 0))
    {
        throw DomainError("uehling_position needs r >= 0");
    }
    // Work with unit charge so the result is exactly linear in Z.
    auto const unit = model.with_charge(1.0);
    QuadResult res;
    bool const use_fourier
        = options.route == UehlingRoute::fourier
          || (options.route == UehlingRoute::automatic
              && r < options.switch_radius)
          || r == 0;
    if (use_fourier)
    {
        res = fourier_route(unit, r, options.rel_tol);
    }
    else
    {
        res = convolution_route(unit, r, options.rel_tol);
    }
    return {model.Z() * res.value, model.Z() * res.abs_error};
}

RadialTable uehling_position(NuclearModel const& model,
                             std::span<double const> radii,
                             UehlingOptions const& options)
{
    if (model.kind() == NuclearKind::point)
    {
        throw UnsupportedOperation(
            "uehling_position handles extended nuclei only; "
            "use uehling_point_position for a point nucleus");
    }
    RadialTable table;
    table.r.assign(radii.begin(), radii.end());
    table.values.resize(radii.size());
    table.abs_error.resize(radii.size());
    parallel_for(radii.size(), options.threads, [&](std::size_t i) {
        auto res = uehling_position_value(model, radii[i], options);
        table.values[i] = res.value;
        table.abs_error[i] = res.abs_error;
    });
    switch (options.route)
    {
        case UehlingRoute::fourier:
            table.meta = "uehling:" + model.describe()
                         + ";route=fourier-oscillatory-wynn";
            break;
        case UehlingRoute::convolution:
            table.meta = "uehling:" + model.describe()
                         + ";route=position-convolution-s-integral";
            break;
        case UehlingRoute::automatic:
            table.meta = "uehling:" + model.describe()
                         + ";route=fourier-oscillatory-wynn(r<"
                         + std::to_string(options.switch_radius)
                         + ")+position-convolution-s-integral";
            break;
    }
    table.validate();
    return table;
}

RadialTable uehling_point_table(double Z,
                                std::span<double const> radii,
                                unsigned threads)
{
    RadialTable table;
    table.r.assign(radii.begin(), radii.end());
    table.values.resize(radii.size());
    table.abs_error.resize(radii.size());
    parallel_for(radii.size(), threads, [&](std::size_t i) {
        auto res = uehling_point_position_detail(Z, radii[i]);
        table.values[i] = res.value;
        table.abs_error[i] = res.abs_error;
    });
    table.meta = "uehling:point(Z=" + std::to_string(Z)
                 + ");route=s-integral-gauss-kronrod";
    table.validate();
    return table;
}
}  // namespace vacpol
