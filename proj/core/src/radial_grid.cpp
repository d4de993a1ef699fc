#include "vacpol/radial_grid.hpp"

#include <cmath>

#include <fmt/format.h>

#include "vacpol/errors.hpp"

namespace vacpol
{
std::string_view to_string(GridScheme scheme)
{
    return scheme == GridScheme::uniform ? "uniform" : "log";
}

GridScheme grid_scheme_from_string(std::string_view name)
{
    if (name == "uniform")
        return GridScheme::uniform;
    if (name == "log")
        return GridScheme::log;
    throw DomainError(fmt::format("unknown grid scheme '{}'", name));
}

RadialGrid RadialGrid::uniform(double r_max, std::size_t n_points)
{
    return RadialGrid(GridScheme::uniform, 0.0, r_max, n_points);
}

RadialGrid RadialGrid::log(double r_min, double r_max, std::size_t n_points)
{
    if (!(r_min > 0) || !(r_min < r_max))
    {
        throw DomainError("log grid needs 0 < r_min < r_max");
    }
    return RadialGrid(GridScheme::log, r_min, r_max, n_points);
}

RadialGrid::RadialGrid(GridScheme scheme,
                       double r_min,
                       double r_max,
                       std::size_t n)
    : scheme_(scheme), r_min_(r_min), r_max_(r_max)
{
    if (!(r_max > 0) || !std::isfinite(r_max))
    {
        throw DomainError("grid needs a finite r_max > 0");
    }
    if (n < 64)
    {
        throw DomainError(
            fmt::format("grid needs at least 64 points, got {}", n));
    }
    double const span
        = scheme == GridScheme::uniform ? r_max : std::log(r_max / r_min);
    h_ = span / (static_cast<double>(n) + 0.5);

    auto map = [&](double u) {
        return scheme == GridScheme::uniform ? u : r_min * std::exp(u);
    };
    auto jac = [&](double u) {
        return scheme == GridScheme::uniform ? 1.0 : r_min * std::exp(u);
    };
    nodes_.resize(n);
    mids_.resize(n);
    wn_.resize(n);
    wm_.resize(n);
    for (std::size_t i = 0; i < n; ++i)
    {
        double const un = static_cast<double>(i + 1) * h_;
        double const um = un - h_ / 2;
        nodes_[i] = map(un);
        mids_[i] = map(um);
        wn_[i] = jac(un) * h_;
        wm_[i] = jac(um) * h_;
    }
}

double RadialGrid::origin() const noexcept
{
    return scheme_ == GridScheme::uniform ? 0.0 : r_min_;
}

RadialGrid RadialGrid::enlarged(double factor) const
{
    if (!(factor >= 1))
    {
        throw DomainError("enlargement factor must be >= 1");
    }
    double const r_new = r_max_ * factor;
    double const span = scheme_ == GridScheme::uniform
                            ? r_new
                            : std::log(r_new / r_min_);
    auto const n = static_cast<std::size_t>(std::ceil(span / h_ - 0.5));
    return RadialGrid(scheme_, r_min_, r_new, n);
}

RadialGrid RadialGrid::refined(std::size_t factor) const
{
    return RadialGrid(scheme_, r_min_, r_max_, n_points() * factor);
}

std::string RadialGrid::describe() const
{
    if (scheme_ == GridScheme::uniform)
    {
        return fmt::format("uniform(r_max={:.17g}, n={})", r_max_, n_points());
    }
    return fmt::format(
        "log(r_min={:.17g}, r_max={:.17g}, n={})", r_min_, r_max_, n_points());
}
}  // namespace vacpol
