#include "vacpol/radial_table.hpp"

#include <algorithm>
#include <cmath>

#include "vacpol/errors.hpp"

namespace vacpol
{
namespace
{
// Fritsch-Carlson slopes for one interior node.
double pchip_slope(double h0, double h1, double d0, double d1)
{
    if (d0 * d1 <= 0)
    {
        return 0;
    }
    double const w1 = 2 * h1 + h0;
    double const w2 = h1 + 2 * h0;
    return (w1 + w2) / (w1 / d0 + w2 / d1);
}
}  // namespace

void RadialTable::validate() const
{
    if (r.empty() || values.size() != r.size() || abs_error.size() != r.size())
    {
        throw DomainError("radial table columns have inconsistent sizes");
    }
    if (!(r.front() > 0))
    {
        throw DomainError("radial table radii must be positive");
    }
    for (std::size_t i = 0; i < r.size(); ++i)
    {
        if (i > 0 && !(r[i] > r[i - 1]))
        {
            throw DomainError("radial table radii must be strictly increasing");
        }
        if (!std::isfinite(values[i]))
        {
            throw DomainError("radial table holds a non-finite value");
        }
    }
}

double RadialTable::interpolate(double radius) const
{
    if (radius < r.front() || radius > r.back())
    {
        throw CoverageError("radius outside the tabulated range");
    }
    if (r.size() == 1)
    {
        return values.front();
    }
    auto hi = std::upper_bound(r.begin(), r.end(), radius);
    std::size_t i = std::min<std::size_t>(
        std::max<std::ptrdiff_t>(hi - r.begin(), 1) - 1, r.size() - 2);

    // Work on up to four nodes around the interval [i, i+1].
    std::size_t const lo = i > 0 ? i - 1 : i;
    std::size_t const up = std::min(i + 2, r.size() - 1);
    bool positive = true;
    for (std::size_t j = lo; j <= up; ++j)
    {
        positive = positive && values[j] > 0;
    }
    auto y = [&](std::size_t j) {
        return positive ? std::log(values[j]) : values[j];
    };
    auto x = [&](std::size_t j) { return std::log(r[j]); };

    double const h = x(i + 1) - x(i);
    double const d = (y(i + 1) - y(i)) / h;
    double m0 = d;
    double m1 = d;
    if (i > lo)
    {
        double const hp = x(i) - x(i - 1);
        m0 = pchip_slope(hp, h, (y(i) - y(i - 1)) / hp, d);
    }
    if (i + 1 < up)
    {
        double const hn = x(i + 2) - x(i + 1);
        m1 = pchip_slope(h, hn, d, (y(i + 2) - y(i + 1)) / hn);
    }
    double const t = (std::log(radius) - x(i)) / h;
    double const t2 = t * t;
    double const t3 = t2 * t;
    double const v = (2 * t3 - 3 * t2 + 1) * y(i) + (t3 - 2 * t2 + t) * h * m0
                     + (-2 * t3 + 3 * t2) * y(i + 1) + (t3 - t2) * h * m1;
    return positive ? std::exp(v) : v;
}

std::vector<double> log_spaced(double lo, double hi, std::size_t count)
{
    if (!(lo > 0) || !(hi > lo) || count < 2)
    {
        throw DomainError("log_spaced needs 0 < lo < hi and count >= 2");
    }
    std::vector<double> out(count);
    double const step = std::log(hi / lo) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i)
    {
        out[i] = lo * std::exp(step * static_cast<double>(i));
    }
    out.back() = hi;
    return out;
}
}  // namespace vacpol
