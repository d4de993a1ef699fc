#include "vacpol/shift_engine.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include <fmt/format.h>

#include "vacpol/errors.hpp"
#include "vacpol/parallel.hpp"
#include "vacpol/radial_dirac.hpp"
#include "vacpol/uehling_potential.hpp"

namespace vacpol
{
namespace
{
constexpr double pi = std::numbers::pi;
// Beyond this radius e^{-2r} is below the double range.
constexpr double underflow_radius = 350;

std::vector<double> shift_breakpoints(HydrogenicState const& psi, double hi)
{
    double const bohr = psi.n() / psi.coupling();
    std::vector<double> pts = decade_breakpoints(1e-8 * bohr, hi);
    // Resolve the electron Compton scale and the Bohr scale.
    for (double s : {0.5, 1.0, 2.0, 4.0})
    {
        for (double base : {1.0, bohr})
        {
            double const v = s * base;
            if (v > pts[1] && v < hi)
                pts.push_back(v);
        }
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

double outside_mass(HydrogenicState const& psi, double lo, double hi)
{
    auto dens = [&psi](double r) {
        double const R = psi.radial(r);
        return r * r * R * R;
    };
    double mass = 0;
    if (lo > 0)
    {
        mass += integrate_interval(dens, 0, lo, 1e-8).value;
    }
    double const outer = std::max(psi.support_radius(1e-16), hi);
    if (outer > hi)
    {
        mass += integrate_panels(dens, decade_breakpoints(hi, outer), 1e-8)
                    .value;
    }
    return mass;
}

QuadResult dirac_density_shift(RealFunction const& U,
                               NuclearModel const& model,
                               ShiftState const& st,
                               Constants const& c)
{
    double const beta = model.Z() * c.alpha() * c.m_eff();
    double const bohr = st.n / beta;
    auto const grid = RadialGrid::log(1e-6 / beta, 60 * st.n * bohr, 2000);
    int const kappa = -(st.l + 1);
    SolveOptions opts;
    opts.gap_only = true;
    auto const spec = solve_channel(
        nuclear_potential_energy(model, c), kappa, grid, c.m_eff(), opts);
    auto const k = static_cast<std::size_t>(st.n - st.l - 1);
    if (spec.spinors.size() <= k)
    {
        throw ConvergenceError(
            fmt::format("Dirac state n={} l={} not found on the grid", st.n, st.l),
            static_cast<double>(spec.spinors.size()));
    }
    auto const& s = spec.spinors[k];
    double sum = 0;
    for (std::size_t i = 0; i < grid.n_points(); ++i)
    {
        sum += grid.node_weights()[i] * s.upper[i] * s.upper[i]
               * U(grid.nodes()[i]);
        sum += grid.mid_weights()[i] * s.lower[i] * s.lower[i]
               * U(grid.midpoints()[i]);
    }
    double const a2 = c.alpha() * c.alpha();
    return {-a2 * sum, 0.0};
}
}  // namespace

QuadResult first_order_shift(RealFunction const& U,
                             HydrogenicState const& psi,
                             double alpha,
                             double rel_tol)
{
    double const hi = psi.support_radius(1e-16);
    auto integrand = [&](double r) {
        double const R = psi.radial(r);
        return r * r * U(r) * R * R;
    };
    auto const res = integrate_panels(integrand, shift_breakpoints(psi, hi), rel_tol);
    double const a2 = alpha * alpha;
    return {-a2 * res.value, a2 * res.abs_error};
}

QuadResult first_order_shift(RadialTable const& U,
                             HydrogenicState const& psi,
                             double alpha,
                             double rel_tol)
{
    U.validate();
    double const lo = U.r.front();
    double const hi = U.r.back();
    double const missing = outside_mass(psi, lo, hi);
    if (missing > 1e-8)
    {
        throw CoverageError(fmt::format(
            "potential table [{:.3g}, {:.3g}] misses radial probability {:.3g} "
            "of state n={} l={}",
            lo,
            hi,
            missing,
            psi.n(),
            psi.l()));
    }
    auto integrand = [&](double r) {
        double const R = psi.radial(r);
        return r * r * U.interpolate(r) * R * R;
    };
    std::vector<double> pts;
    std::size_t const stride = 8;
    for (std::size_t i = 0; i < U.size(); i += stride)
        pts.push_back(U.r[i]);
    if (pts.back() != hi)
        pts.push_back(hi);
    auto const res = integrate_panels(integrand, pts, rel_tol);
    double const a2 = alpha * alpha;
    return {-a2 * res.value, a2 * res.abs_error};
}

double point_limit_shift(int n, int l, double Z, double alpha, double m)
{
    if (n < 1 || l < 0 || l > n - 1)
    {
        throw DomainError(
            fmt::format("invalid quantum numbers n={} l={}", n, l));
    }
    if (l != 0)
    {
        return 0.0;
    }
    double const za = Z * alpha * m;
    double const psi0 = za * za * za / (pi * n * n * n);
    return -4 * Z * alpha * alpha / 15 * psi0;
}

double coarse_2s_estimate(double Z, double alpha, double m)
{
    return -std::pow(Z, 4) * std::pow(alpha, 5) * m / 30;
}

EffectivePotential effective_potential(double Z, double alpha, double r)
{
    if (!(r > 0))
    {
        throw DomainError("effective potential needs r > 0");
    }
    EffectivePotential out;
    out.r = r;
    out.coulomb = -alpha * Z / r;
    out.numeric = out.coulomb - alpha * alpha * uehling_point_position(Z, r);
    double const lg = std::log(r) + 5.0 / 6 + Constants::euler_gamma;
    out.approximation = out.coulomb + alpha * alpha * (2 * Z / (3 * pi * r)) * lg;
    out.relative_difference
        = std::abs(out.numeric - out.approximation) / std::abs(out.approximation);
    out.log_enhanced = std::abs(std::log(r)) > 5.0 / 6 + Constants::euler_gamma;
    return out;
}

UnboundednessDiagnostic unboundedness_diagnostic(double Z,
                                                 double alpha,
                                                 double bound_factor)
{
    UnboundednessDiagnostic out;
    out.bound_factor = bound_factor;
    double const c = 2 * alpha / (3 * pi);
    auto z_eff = [&](double log_r) {
        return Z * (1 - c * (log_r + 5.0 / 6 + Constants::euler_gamma));
    };
    out.monotone_growth = true;
    double prev = -1;
    for (int e = 0; e <= 300; e += 10)
    {
        UnboundednessRow row;
        row.log10_r = -e;
        row.z_eff = z_eff(-e * std::log(10.0));
        if (e > 0 && e <= 8)
        {
            double const r = std::pow(10.0, -e);
            row.z_eff_numeric = -r * effective_potential(Z, alpha, r).numeric / alpha;
        }
        if (!(row.z_eff > prev))
            out.monotone_growth = false;
        prev = row.z_eff;
        out.rows.push_back(row);
    }
    // Solve Z (1 - c (log r + 5/6 + gamma)) = bound_factor Z for log r.
    out.log_radius_at_bound
        = -(bound_factor - 1) / c - 5.0 / 6 - Constants::euler_gamma;
    return out;
}

RadialTable shift_potential_table(NuclearModel const& model,
                                  double r_outer,
                                  ShiftOptions const& options)
{
    if (model.kind() == NuclearKind::point)
    {
        throw UnsupportedOperation(
            "point nuclei use the closed-form potential, not a table");
    }
    double const lo = std::min(1e-3 * model.width(), 1e-6);
    double const hi = std::min(r_outer, underflow_radius);
    auto const decades = std::log10(hi / lo);
    auto const count = static_cast<std::size_t>(
        std::ceil(decades * static_cast<double>(options.points_per_decade)))
        + 1;
    auto const radii = log_spaced(lo, hi, count);
    UehlingOptions uo;
    uo.threads = options.threads;
    RadialTable table = uehling_position(model, radii, uo);
    if (r_outer > hi)
    {
        // U < e^{-2r} underflows here; extend with exact-to-double zeros.
        for (double r = hi * 1.5; ; r *= 1.5)
        {
            r = std::min(r, r_outer);
            table.r.push_back(r);
            table.values.push_back(0.0);
            table.abs_error.push_back(0.0);
            if (r >= r_outer)
                break;
        }
        table.meta += fmt::format("; zero beyond r={:.17g}", hi);
    }
    return table;
}

ShiftReport shift_report(NuclearModel const& model,
                         std::vector<ShiftState> const& states,
                         Constants const& constants,
                         ShiftOptions const& options)
{
    ShiftReport rep;
    rep.model = model.describe();
    rep.m_eff = constants.m_eff();
    rep.alpha = constants.alpha();
    rep.rest_energy_ev = constants.electron_rest_energy_ev();
    rep.density = options.dirac_density ? "dirac (extension)" : "schroedinger";
    rep.coarse_2s_estimate
        = coarse_2s_estimate(model.Z(), constants.alpha(), constants.m_eff());

    double const beta = model.Z() * constants.alpha() * constants.m_eff();
    if (!(beta > 0))
    {
        throw DomainError("shift needs Z alpha m_eff > 0");
    }
    std::vector<HydrogenicState> psis;
    double r_outer = 0;
    for (auto const& st : states)
    {
        psis.emplace_back(st.n, st.l, beta);
        r_outer = std::max(r_outer, psis.back().support_radius(1e-16));
    }

    RealFunction U;
    RadialTable table;
    if (model.kind() == NuclearKind::point)
    {
        double const Z = model.Z();
        U = [Z](double r) { return uehling_point_position(Z, r); };
    }
    else
    {
        table = shift_potential_table(model, r_outer, options);
        double const front = table.r.front();
        U = [&table, front](double r) {
            return table.interpolate(std::max(r, front));
        };
    }

    rep.rows.resize(states.size());
    parallel_for(states.size(), options.threads, [&](std::size_t i) {
        auto const& st = states[i];
        QuadResult q;
        if (options.dirac_density)
        {
            q = dirac_density_shift(U, model, st, constants);
        }
        else if (model.kind() == NuclearKind::point)
        {
            q = first_order_shift(U, psis[i], constants.alpha(), options.rel_tol);
        }
        else
        {
            q = first_order_shift(table, psis[i], constants.alpha(), options.rel_tol);
        }
        ShiftRow& row = rep.rows[i];
        row.n = st.n;
        row.l = st.l;
        row.delta_E = q.value;
        row.delta_E_error = q.abs_error;
        row.delta_E_ev = to_ev(q.value, constants);
        row.point_limit = point_limit_shift(
            st.n, st.l, model.Z(), constants.alpha(), constants.m_eff());
        row.point_limit_ev = to_ev(row.point_limit, constants);
    });

    std::map<int, std::pair<std::optional<double>, std::optional<double>>> by_n;
    for (auto const& row : rep.rows)
    {
        if (row.l == 0)
            by_n[row.n].first = row.delta_E;
        if (row.l == 1)
            by_n[row.n].second = row.delta_E;
    }
    for (auto const& [n, pair] : by_n)
    {
        if (pair.first && pair.second)
            rep.splitting.emplace_back(n, *pair.first - *pair.second);
    }
    return rep;
}

ShiftReport muonic_report(NuclearModel const& model,
                          std::vector<ShiftState> const& states,
                          Constants const& constants,
                          ShiftOptions const& options)
{
    ShiftReport rep = shift_report(model, states, constants, options);
    auto split2 = [](ShiftReport const& r) -> std::optional<double> {
        for (auto const& [n, v] : r.splitting)
            if (n == 2)
                return v;
        return std::nullopt;
    };
    auto const mine = split2(rep);
    if (!mine)
    {
        return rep;
    }
    if (constants.m_eff() == 1.0)
    {
        rep.enhancement_over_electronic = 1.0;
        return rep;
    }
    std::vector<ShiftState> const pair{{2, 0}, {2, 1}};
    ShiftReport const electronic
        = shift_report(model, pair, constants.with_mass(1.0), options);
    auto const base = split2(electronic);
    if (base && *base != 0)
    {
        rep.enhancement_over_electronic = std::abs(*mine) / std::abs(*base);
    }
    return rep;
}
}  // namespace vacpol
