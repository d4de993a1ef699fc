#include "vacpol/hydrogenic.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "vacpol/errors.hpp"

namespace vacpol
{
HydrogenicState::HydrogenicState(int n, int l, double coupling)
    : n_(n), l_(l), beta_(coupling)
{
    if (n < 1 || l < 0 || l > n - 1)
    {
        throw DomainError(
            fmt::format("invalid hydrogenic quantum numbers n={} l={}", n, l));
    }
    if (!(coupling > 0) || !std::isfinite(coupling))
    {
        throw DomainError("hydrogenic coupling must be positive");
    }
    // (2 beta / n)^{3/2} sqrt((n-l-1)! / (2n (n+l)!)), via lgamma.
    double const lg = std::lgamma(n - l) - std::lgamma(n + l + 1);
    norm_ = std::pow(2 * beta_ / n, 1.5) * std::sqrt(std::exp(lg) / (2.0 * n));
}

double HydrogenicState::radial(double r) const
{
    if (!(r >= 0))
    {
        throw DomainError("radius must be non-negative");
    }
    double const rho = 2 * beta_ * r / n_;
    double const lag = std::assoc_laguerre(static_cast<unsigned>(n_ - l_ - 1),
                                           static_cast<unsigned>(2 * l_ + 1),
                                           rho);
    return norm_ * std::exp(-rho / 2) * std::pow(rho, l_) * lag;
}

double HydrogenicState::density(double r) const
{
    double const R = radial(r);
    return R * R / (4 * std::numbers::pi);
}

double HydrogenicState::support_radius(double tail) const
{
    // The radial probability decays like r^{2n} e^{-2 beta r / n}; step
    // outward until the tail estimate drops below the requested mass.
    // Start beyond the outermost radial node (rho > 4n).
    double r = 2.5 * n_ * n_ / beta_;
    for (int it = 0; it < 200; ++it)
    {
        double const R = radial(r);
        double const scale = n_ / (2 * beta_);
        if (r * r * R * R * scale * 4 < tail)
        {
            return r;
        }
        r *= 1.25;
    }
    return r;
}

double hydrogenic_radial(int n, int l, double coupling, double r)
{
    return HydrogenicState(n, l, coupling).radial(r);
}
}  // namespace vacpol
