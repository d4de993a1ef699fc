#include "vacpol/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "vacpol/errors.hpp"

namespace vacpol
{
namespace
{
constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr double round_off = 64;
}

QuadResult integrate_interval(
    RealFunction const& f, double a, double b, double rel_tol, unsigned max_depth)
{
    using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
    if (a == b)
    {
        return {};
    }
    struct Segment
    {
        double a, b, value, error, l1;
        unsigned depth;
        bool operator<(Segment const& o) const { return error < o.error; }
    };
    auto rule = [&f](double lo, double hi, unsigned depth) {
        Segment s{lo, hi, 0, 0, 0, depth};
        // max_depth = 0 makes Boost apply the 61-point pair once. Its error
        // estimate comes back on the reference interval [-1, 1]; rescale.
        s.value = GK::integrate(f, lo, hi, 0, 0.0, &s.error, &s.l1);
        s.error *= (hi - lo) / 2;
        return s;
    };
    // Globally adaptive: always bisect the panel with the largest error.
    std::priority_queue<Segment> queue;
    queue.push(rule(a, b, 0));
    double value = queue.top().value;
    double error = queue.top().error;
    double l1 = queue.top().l1;
    constexpr std::size_t max_segments = 4000;
    // Integrands below the smallest normal double have no relative precision.
    double const subnormal_floor = (b - a) * std::numeric_limits<double>::min();
    while (std::isfinite(value))
    {
        double const target
            = std::max({rel_tol * std::abs(value), round_off * eps * l1, subnormal_floor});
        if (error <= target || queue.size() >= max_segments)
            break;
        Segment const top = queue.top();
        if (top.depth >= max_depth)
            break;
        queue.pop();
        double const mid = 0.5 * (top.a + top.b);
        Segment const left = rule(top.a, mid, top.depth + 1);
        Segment const right = rule(mid, top.b, top.depth + 1);
        value += left.value + right.value - top.value;
        error += left.error + right.error - top.error;
        l1 += left.l1 + right.l1 - top.l1;
        queue.push(left);
        queue.push(right);
    }
    // Re-sum to drop the drift of the running updates.
    value = 0;
    error = 0;
    l1 = 0;
    while (!queue.empty())
    {
        value += queue.top().value;
        error += queue.top().error;
        l1 += queue.top().l1;
        queue.pop();
    }
    if (!std::isfinite(value))
    {
        throw QuadratureError("non-finite integral on [" + std::to_string(a)
                                  + ", " + std::to_string(b) + "]",
                              value,
                              error);
    }
    // Errors at the round-off level of the L1 norm are accepted.
    double const floor = std::max(round_off * eps * l1, subnormal_floor);
    if (error > std::max(rel_tol * l1, floor) * 10)
    {
        throw QuadratureError("Gauss-Kronrod did not converge on ["
                                  + std::to_string(a) + ", "
                                  + std::to_string(b) + "]",
                              value,
                              error);
    }
    return {value, error};
}

QuadResult integrate_panels(RealFunction const& f,
                            std::span<double const> breakpoints,
                            double rel_tol,
                            unsigned max_depth)
{
    QuadResult total;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
    {
        QuadResult piece;
        try
        {
            piece = integrate_interval(
                f, breakpoints[i], breakpoints[i + 1], rel_tol, max_depth);
        }
        catch (QuadratureError const& e)
        {
            // A panel that is small against the whole integral only has to
            // meet the tolerance relative to the total (tails where the
            // integrand is a round-off dominated difference).
            double const whole = std::abs(total.value + e.estimate());
            if (!std::isfinite(e.estimate()) || e.abs_error() > rel_tol * whole)
                throw;
            piece = {e.estimate(), e.abs_error()};
        }
        total.value += piece.value;
        total.abs_error += piece.abs_error;
    }
    return total;
}

std::vector<double> decade_breakpoints(double lo, double hi)
{
    std::vector<double> points{0.0};
    for (double x = lo; x < hi; x *= 10)
    {
        points.push_back(x);
    }
    points.push_back(hi);
    return points;
}

QuadResult wynn_epsilon(std::span<double const> partial_sums)
{
    std::size_t const n = partial_sums.size();
    if (n == 0)
    {
        return {};
    }
    if (n < 3)
    {
        double last = partial_sums.back();
        double prev = n == 2 ? partial_sums[0] : 0.0;
        return {last, std::abs(last - prev)};
    }

    // prev holds column k-1, cur holds column k of the epsilon table.
    std::vector<double> prev(n + 1, 0.0);
    std::vector<double> cur(partial_sums.begin(), partial_sums.end());
    double best = cur.back();
    double best_prev = cur[cur.size() - 2];
    for (int k = 1; cur.size() >= 2; ++k)
    {
        std::vector<double> next(cur.size() - 1);
        bool ok = true;
        for (std::size_t j = 0; j + 1 < cur.size(); ++j)
        {
            double diff = cur[j + 1] - cur[j];
            if (diff == 0 || !std::isfinite(diff))
            {
                ok = false;
                break;
            }
            next[j] = prev[j + 1] + 1.0 / diff;
        }
        if (!ok)
        {
            break;
        }
        if (k % 2 == 0)
        {
            if (next.size() >= 2)
            {
                best_prev = next[next.size() - 2];
            }
            else
            {
                best_prev = best;
            }
            best = next.back();
        }
        prev = std::move(cur);
        cur = std::move(next);
    }
    return {best, std::abs(best - best_prev)};
}

QuadResult integrate_oscillatory(RealFunction const& f,
                                 double half_period,
                                 OscillatoryOptions const& options)
{
    if (!(half_period > 0) || !std::isfinite(half_period))
    {
        throw DomainError("oscillatory quadrature needs a positive half period");
    }
    double const piece_tol = std::min(options.rel_tol * 1e-2, 1e-12);

    // First half period: decade panels resolve slowly varying integrands.
    std::vector<double> first;
    if (half_period > 10 * options.inner_scale)
    {
        first = decade_breakpoints(options.inner_scale, half_period);
    }
    else
    {
        first = {0.0, half_period};
    }
    auto head = integrate_panels(f, first, piece_tol);

    std::vector<double> sums{head.value};
    double abs_error = head.abs_error;
    double scale = std::abs(head.value);
    double total = head.value;
    double last_estimate = std::numeric_limits<double>::quiet_NaN();
    int small_run = 0;
    int stable_run = 0;

    for (int seg = 1; seg <= options.max_segments; ++seg)
    {
        double a = seg * half_period;
        auto piece = integrate_interval(f, a, a + half_period, piece_tol);
        total += piece.value;
        abs_error += piece.abs_error;
        sums.push_back(total);
        scale = std::max(scale, std::abs(total));

        double const floor = std::max(options.abs_tol, 64 * eps * scale);

        // Direct convergence: pieces have become negligible.
        if (std::abs(piece.value) <= std::max(floor, options.rel_tol * 1e-2 * scale))
        {
            if (++small_run >= 3)
            {
                return {total, abs_error + 3 * std::abs(piece.value)};
            }
        }
        else
        {
            small_run = 0;
        }

        if (seg < options.min_segments || sums.size() < 4)
        {
            continue;
        }
        // Extrapolate from a bounded window of the most recent partial sums.
        std::size_t const window = std::min<std::size_t>(sums.size(), 24);
        auto est = wynn_epsilon(
            std::span<double const>(sums).subspan(sums.size() - window));
        if (std::isfinite(last_estimate))
        {
            double const change = std::abs(est.value - last_estimate);
            double const tol
                = std::max(floor, options.rel_tol * std::abs(est.value));
            if (change <= tol)
            {
                if (++stable_run >= 2)
                {
                    return {est.value, change + abs_error};
                }
            }
            else
            {
                stable_run = 0;
            }
        }
        last_estimate = est.value;
    }
    throw QuadratureError("oscillatory quadrature exhausted "
                              + std::to_string(options.max_segments)
                              + " segments",
                          last_estimate,
                          std::abs(total - last_estimate));
}
}  // namespace vacpol
