#include "vacpol/radial_dirac.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>
#include <lapacke.h>

#include "vacpol/errors.hpp"

namespace vacpol
{
double coulomb_dirac_energy(int n_r, int kappa, double zalpha)
{
    if (zalpha >= 1)
    {
        throw SupercriticalError(fmt::format(
            "Z alpha = {} >= 1: the Coulomb-Dirac operator needs Z alpha < 1",
            zalpha));
    }
    if (!(zalpha >= 0))
    {
        throw DomainError("Z alpha must be non-negative");
    }
    if (kappa == 0)
    {
        throw DomainError("kappa must be a non-zero integer");
    }
    if (n_r < 0 || (kappa > 0 && n_r < 1))
    {
        throw DomainError(fmt::format(
            "n_r = {} not allowed for kappa = {} (n_r >= 1 when kappa > 0)",
            n_r,
            kappa));
    }
    double const k2 = static_cast<double>(kappa) * kappa;
    double const d = n_r + std::sqrt(k2 - zalpha * zalpha);
    return 1 / std::sqrt(1 + zalpha * zalpha / (d * d));
}

double coulomb_dirac_level(std::size_t k, int kappa, double zalpha)
{
    int const n_r = static_cast<int>(k) + (kappa > 0 ? 1 : 0);
    return coulomb_dirac_energy(n_r, kappa, zalpha);
}

Tridiagonal build_radial_operator(RealFunction const& potential,
                                  int kappa,
                                  RadialGrid const& grid,
                                  double m)
{
    if (kappa == 0)
    {
        throw DomainError("kappa must be a non-zero integer");
    }
    if (!(m > 0))
    {
        throw DomainError("mass must be positive");
    }
    auto const& rn = grid.nodes();
    auto const& rm = grid.midpoints();
    auto const& wn = grid.node_weights();
    auto const& wm = grid.mid_weights();
    std::size_t const n = grid.n_points();
    double const kap = kappa;

    Tridiagonal t;
    t.diag.resize(2 * n);
    t.off.resize(2 * n - 1);
    for (std::size_t j = 0; j < n; ++j)
    {
        double const vm = potential(rm[j]);
        double const vn = potential(rn[j]);
        if (!std::isfinite(vm) || !std::isfinite(vn))
        {
            throw DomainError(fmt::format(
                "potential is not finite near r = {:.6g}", rm[j]));
        }
        t.diag[2 * j] = -m + vm;
        t.diag[2 * j + 1] = m + vn;
        // r_m^-kappa (r^kappa G)' between node j-1 and node j.
        double const scale = std::pow(rm[j], -kap);
        t.off[2 * j] = scale * std::pow(rn[j], kap) / std::sqrt(wm[j] * wn[j]);
        if (j + 1 < n)
        {
            double const s1 = std::pow(rm[j + 1], -kap);
            t.off[2 * j + 1]
                = -s1 * std::pow(rn[j], kap) / std::sqrt(wm[j + 1] * wn[j]);
        }
    }
    return t;
}

RealFunction nuclear_potential_energy(NuclearModel const& model,
                                      Constants const& constants)
{
    double const alpha = constants.alpha();
    return [model, alpha](double r) { return -alpha * potential(model, r); };
}

RealFunction coulomb_potential_energy(double zalpha)
{
    return [zalpha](double r) { return -zalpha / r; };
}

double RadialSpinor::norm_inside(RadialGrid const& grid, double radius) const
{
    double s = 0;
    for (std::size_t i = 0; i < upper.size(); ++i)
    {
        if (grid.nodes()[i] <= radius)
            s += grid.node_weights()[i] * upper[i] * upper[i];
        if (grid.midpoints()[i] <= radius)
            s += grid.mid_weights()[i] * lower[i] * lower[i];
    }
    return s;
}

std::vector<double> ChannelSpectrum::gap_energies() const
{
    std::vector<double> out;
    out.reserve(gap_states.size());
    for (auto i : gap_states)
    {
        out.push_back(eigenvalues[i]);
    }
    return out;
}

namespace
{
struct GapPairs
{
    std::vector<double> values;
    std::vector<std::vector<double>> vectors;
};

GapPairs gap_eigenpairs(Tridiagonal const& t, double lo, double hi)
{
    lapack_int const n = static_cast<lapack_int>(t.size());
    std::vector<double> d = t.diag;
    std::vector<double> e = t.off;
    std::vector<double> w(t.size());
    std::vector<lapack_int> iblock(t.size()), isplit(t.size());
    lapack_int found = 0, nsplit = 0;
    double const abstol = 2 * LAPACKE_dlamch('S');
    lapack_int info = LAPACKE_dstebz('V',
                                     'B',
                                     n,
                                     lo,
                                     hi,
                                     0,
                                     0,
                                     abstol,
                                     d.data(),
                                     e.data(),
                                     &found,
                                     &nsplit,
                                     w.data(),
                                     iblock.data(),
                                     isplit.data());
    if (info != 0)
    {
        throw ConvergenceError(
            fmt::format("bisection failed (dstebz info {})", info), info);
    }
    GapPairs out;
    if (found == 0)
    {
        return out;
    }
    std::vector<double> z(static_cast<std::size_t>(n) * found);
    std::vector<lapack_int> ifail(found);
    info = LAPACKE_dstein(LAPACK_COL_MAJOR,
                          n,
                          d.data(),
                          e.data(),
                          found,
                          w.data(),
                          iblock.data(),
                          isplit.data(),
                          z.data(),
                          n,
                          ifail.data());
    if (info != 0)
    {
        throw ConvergenceError(
            fmt::format("inverse iteration failed (dstein info {})", info),
            info);
    }
    for (lapack_int k = 0; k < found; ++k)
    {
        out.values.push_back(w[k]);
        out.vectors.emplace_back(z.begin() + static_cast<std::ptrdiff_t>(k) * n,
                                 z.begin()
                                     + static_cast<std::ptrdiff_t>(k + 1) * n);
    }
    return out;
}

std::vector<double> all_eigenvalues(Tridiagonal const& t)
{
    std::vector<double> d = t.diag;
    std::vector<double> e = t.off;
    lapack_int const info
        = LAPACKE_dsterf(static_cast<lapack_int>(d.size()), d.data(), e.data());
    if (info != 0)
    {
        throw ConvergenceError(
            fmt::format("QL iteration failed (dsterf info {})", info), info);
    }
    return d;
}

RadialSpinor make_spinor(RadialGrid const& grid,
                         double energy,
                         std::vector<double> const& x)
{
    std::size_t const n = grid.n_points();
    RadialSpinor s;
    s.energy = energy;
    s.upper.resize(n);
    s.lower.resize(n);
    double norm = 0;
    for (double v : x)
        norm += v * v;
    norm = std::sqrt(norm);
    double amax = 0;
    for (std::size_t j = 0; j < n; ++j)
    {
        s.lower[j] = x[2 * j] / norm / std::sqrt(grid.mid_weights()[j]);
        s.upper[j] = x[2 * j + 1] / norm / std::sqrt(grid.node_weights()[j]);
        amax = std::max(amax, std::abs(x[2 * j + 1]));
    }
    // Fix the overall sign by the first significant upper value.
    for (std::size_t j = 0; j < n; ++j)
    {
        if (std::abs(x[2 * j + 1]) > 1e-3 * amax)
        {
            if (x[2 * j + 1] < 0)
            {
                for (auto& v : s.upper)
                    v = -v;
                for (auto& v : s.lower)
                    v = -v;
            }
            break;
        }
    }
    double const tiny = 1e-10 * amax;
    int last = 0;
    for (std::size_t j = 0; j < n; ++j)
    {
        double const v = x[2 * j + 1];
        if (std::abs(v) <= tiny)
            continue;
        int const sg = v > 0 ? 1 : -1;
        if (last != 0 && sg != last)
            ++s.sign_changes;
        last = sg;
    }
    for (std::size_t j = 0; j < n; ++j)
    {
        s.mean_radius += grid.node_weights()[j] * s.upper[j] * s.upper[j]
                             * grid.nodes()[j]
                         + grid.mid_weights()[j] * s.lower[j] * s.lower[j]
                               * grid.midpoints()[j];
    }
    return s;
}
}  // namespace

ChannelSpectrum solve_channel(RealFunction const& potential,
                              int kappa,
                              RadialGrid const& grid,
                              double m,
                              SolveOptions const& options)
{
    Tridiagonal const t = build_radial_operator(potential, kappa, grid, m);

    ChannelSpectrum out;
    out.kappa = kappa;
    out.m = m;
    out.grid = grid.describe();

    GapPairs gp = gap_eigenpairs(t, -m, m);
    std::vector<RadialSpinor> accepted;
    double const limit = static_cast<double>(grid.n_points())
                         / options.spurious_fraction;
    for (std::size_t k = 0; k < gp.values.size(); ++k)
    {
        RadialSpinor s = make_spinor(grid, gp.values[k], gp.vectors[k]);
        if (static_cast<double>(s.sign_changes) > limit)
        {
            out.spurious.push_back(s.energy);
            continue;
        }
        accepted.push_back(std::move(s));
    }
    std::stable_sort(
        accepted.begin(),
        accepted.end(),
        [](RadialSpinor const& a, RadialSpinor const& b) {
            double const tol
                = 1e-12 * std::max({1.0, std::abs(a.energy), std::abs(b.energy)});
            if (std::abs(a.energy - b.energy) <= tol)
                return a.mean_radius < b.mean_radius;
            return a.energy < b.energy;
        });
    std::sort(out.spurious.begin(), out.spurious.end());

    std::vector<double> const full
        = options.gap_only ? std::vector<double>{} : all_eigenvalues(t);
    for (double v : full)
    {
        if (v <= -m)
            out.eigenvalues.push_back(v);
    }
    // Merge accepted (already tie-broken) and spurious gap values.
    std::size_t ia = 0, is = 0;
    while (ia < accepted.size() || is < out.spurious.size())
    {
        bool const take_accepted
            = is == out.spurious.size()
              || (ia < accepted.size()
                  && accepted[ia].energy <= out.spurious[is]);
        if (take_accepted)
        {
            out.gap_states.push_back(out.eigenvalues.size());
            out.eigenvalues.push_back(accepted[ia++].energy);
        }
        else
        {
            out.eigenvalues.push_back(out.spurious[is++]);
        }
    }
    for (double v : full)
    {
        if (v > m)
            out.eigenvalues.push_back(v);
    }
    out.spinors = std::move(accepted);
    return out;
}

double richardson(double e_coarse, double h_coarse, double e_fine, double h_fine)
{
    if (!(h_fine < h_coarse))
    {
        throw DomainError("richardson needs h_fine < h_coarse");
    }
    double const c2 = h_coarse * h_coarse;
    double const f2 = h_fine * h_fine;
    return (e_fine * c2 - e_coarse * f2) / (c2 - f2);
}

BoxCheck check_box_size(RealFunction const& potential,
                        int kappa,
                        RadialGrid const& grid,
                        std::size_t count,
                        double m,
                        double tolerance)
{
    SolveOptions opts;
    opts.gap_only = true;
    BoxCheck out;
    out.base = solve_channel(potential, kappa, grid, m, opts).gap_energies();
    out.enlarged = solve_channel(potential, kappa, grid.enlarged(1.5), m, opts)
                       .gap_energies();
    if (out.base.size() < count || out.enlarged.size() < count)
    {
        out.max_change = std::numeric_limits<double>::infinity();
        out.converged = false;
        return out;
    }
    for (std::size_t i = 0; i < count; ++i)
    {
        out.max_change
            = std::max(out.max_change, std::abs(out.base[i] - out.enlarged[i]));
    }
    out.converged = out.max_change < tolerance;
    return out;
}
}  // namespace vacpol
