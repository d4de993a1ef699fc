#include "vacpol/spectral_lab.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include <fmt/format.h>
#include <lapacke.h>

#include "vacpol/errors.hpp"
#include "vacpol/parallel.hpp"

namespace vacpol
{
namespace
{
constexpr double near_zero = 1e-10;

std::vector<double> band_eigenvalues(Tridiagonal const& t)
{
    std::vector<double> d = t.diag;
    std::vector<double> e = t.off;
    lapack_int const info
        = LAPACKE_dsterf(static_cast<lapack_int>(d.size()), d.data(), e.data());
    if (info != 0)
    {
        throw ConvergenceError("QL iteration failed", info);
    }
    return d;
}

// acc(i, j) += weight * Re (T + i eta)^{-1}(i, j) for i <= j.
void accumulate_resolvent(Tridiagonal const& T,
                          double eta,
                          double weight,
                          Eigen::MatrixXd& acc)
{
    using cplx = std::complex<double>;
    std::size_t const n = T.size();
    auto const& a = T.diag;
    auto const& b = T.off;
    std::vector<cplx> fwd(n), bwd(n);
    fwd[0] = cplx(a[0], eta);
    for (std::size_t i = 1; i < n; ++i)
    {
        fwd[i] = cplx(a[i], eta) - b[i - 1] * b[i - 1] / fwd[i - 1];
    }
    bwd[n - 1] = cplx(a[n - 1], eta);
    for (std::size_t i = n - 1; i-- > 0;)
    {
        bwd[i] = cplx(a[i], eta) - b[i] * b[i] / bwd[i + 1];
    }
    // Multipliers -b_i / fwd_i link R(i, j) to R(i + 1, j).
    std::vector<cplx> mult(n > 0 ? n - 1 : 0);
    for (std::size_t i = 0; i + 1 < n; ++i)
    {
        mult[i] = -b[i] / fwd[i];
    }
    for (std::size_t j = 0; j < n; ++j)
    {
        cplx r = 1.0 / (fwd[j] + bwd[j] - cplx(a[j], eta));
        acc(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j))
            += weight * r.real();
        double const floor = 1e-20 * std::abs(r);
        for (std::size_t i = j; i-- > 0;)
        {
            r *= mult[i];
            acc(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))
                += weight * r.real();
            if (std::abs(r) < floor)
                break;
        }
    }
}

void mirror_upper(Eigen::MatrixXd& m)
{
    m.triangularView<Eigen::StrictlyLower>() = m.transpose();
}

struct SpectralRange
{
    double min_abs = 0;
    double max_abs = 0;
};

SpectralRange spectral_range(OperatorMatrix const& M)
{
    SpectralRange out{std::numeric_limits<double>::infinity(), 0};
    for (double v : band_eigenvalues(M.band))
    {
        out.min_abs = std::min(out.min_abs, std::abs(v));
        out.max_abs = std::max(out.max_abs, std::abs(v));
    }
    if (out.min_abs < near_zero)
    {
        throw GapCrossingError(fmt::format(
            "operator {} has an eigenvalue within {} of zero", M.model, near_zero));
    }
    return out;
}

void check_compatible(OperatorMatrix const& a, OperatorMatrix const& b)
{
    if (a.dimension() != b.dimension() || a.dimension() == 0)
    {
        throw DomainError("operator matrices must have the same dimension");
    }
}

struct ContourGrid
{
    double t_min = 0;
    double t_max = 0;
};

ContourGrid contour_grid(OperatorMatrix const& M_free,
                         OperatorMatrix const& M_pert,
                         double margin)
{
    auto const f = spectral_range(M_free);
    auto const p = spectral_range(M_pert);
    return {std::log(std::min(f.min_abs, p.min_abs)) - margin,
            std::log(std::max(f.max_abs, p.max_abs)) + margin};
}

// Adds (step / pi) sum_t eta Re[R_pert - R_free] over t = start + k stride.
void add_nodes(OperatorMatrix const& M_free,
               OperatorMatrix const& M_pert,
               double start,
               double stride,
               double t_max,
               double step,
               Eigen::MatrixXd& acc,
               std::size_t& count)
{
    for (double t = start; t <= t_max + 1e-12; t += stride)
    {
        double const eta = std::exp(t);
        double const w = step * eta / std::numbers::pi;
        accumulate_resolvent(M_pert.band, eta, w, acc);
        accumulate_resolvent(M_free.band, eta, -w, acc);
        ++count;
    }
}
}  // namespace

Eigen::MatrixXd OperatorMatrix::dense() const
{
    auto const n = static_cast<Eigen::Index>(dimension());
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
    {
        m(i, i) = band.diag[static_cast<std::size_t>(i)];
        if (i + 1 < n)
        {
            m(i, i + 1) = m(i + 1, i) = band.off[static_cast<std::size_t>(i)];
        }
    }
    return m;
}

OperatorMatrix operator_matrix(NuclearModel const& model,
                               Constants const& constants,
                               int kappa,
                               RadialGrid const& grid)
{
    OperatorMatrix M;
    M.band = build_radial_operator(
        nuclear_potential_energy(model, constants), kappa, grid, constants.m_eff());
    M.kappa = kappa;
    M.grid = grid.describe();
    M.model = model.describe();
    return M;
}

OperatorMatrix free_operator_matrix(int kappa, RadialGrid const& grid, double m)
{
    OperatorMatrix M;
    M.band = build_radial_operator([](double) { return 0.0; }, kappa, grid, m);
    M.kappa = kappa;
    M.grid = grid.describe();
    M.model = "free";
    return M;
}

Eigensystem eigensystem(OperatorMatrix const& M)
{
    auto const n = static_cast<lapack_int>(M.dimension());
    std::vector<double> d = M.band.diag;
    std::vector<double> e = M.band.off;
    e.push_back(0.0);
    Eigensystem out;
    out.values.resize(n);
    out.vectors.resize(n, n);
    std::vector<lapack_int> isuppz(2 * static_cast<std::size_t>(n));
    lapack_int found = 0;
    lapack_int const info = LAPACKE_dstevr(LAPACK_COL_MAJOR,
                                           'V',
                                           'A',
                                           n,
                                           d.data(),
                                           e.data(),
                                           0,
                                           0,
                                           0,
                                           0,
                                           0.0,
                                           &found,
                                           out.values.data(),
                                           out.vectors.data(),
                                           n,
                                           isuppz.data());
    if (info != 0 || found != n)
    {
        throw ConvergenceError(
            fmt::format("tridiagonal eigensolver failed (info {})", info), info);
    }
    return out;
}

Eigen::MatrixXd spectral_projector(OperatorMatrix const& M)
{
    Eigensystem const es = eigensystem(M);
    Eigen::Index first = es.values.size();
    for (Eigen::Index i = 0; i < es.values.size(); ++i)
    {
        if (std::abs(es.values[i]) < near_zero)
        {
            throw GapCrossingError(fmt::format(
                "eigenvalue {:.3e} of {} lies on the spectral cut",
                es.values[i],
                M.model));
        }
        if (es.values[i] > 0 && first == es.values.size())
        {
            first = i;
        }
    }
    auto const V = es.vectors.rightCols(es.values.size() - first);
    return V * V.transpose();
}

ProjectorPair projector_pair(OperatorMatrix const& M_free,
                             OperatorMatrix const& M_pert)
{
    check_compatible(M_free, M_pert);
    ProjectorPair out;
    out.P_plus_free = spectral_projector(M_free);
    out.P_plus_pert = spectral_projector(M_pert);
    out.Q = out.P_plus_pert - out.P_plus_free;
    out.rank_free = static_cast<std::size_t>(std::lround(out.P_plus_free.trace()));
    out.rank_pert = static_cast<std::size_t>(std::lround(out.P_plus_pert.trace()));
    out.idempotency_free
        = (out.P_plus_free * out.P_plus_free - out.P_plus_free).norm();
    out.idempotency_pert
        = (out.P_plus_pert * out.P_plus_pert - out.P_plus_pert).norm();
    out.trace_Q = out.Q.trace();
    return out;
}

Eigen::MatrixXd resolvent_real_part(Tridiagonal const& T, double eta)
{
    if (!(eta > 0))
    {
        throw DomainError("resolvent_real_part needs eta > 0");
    }
    auto const n = static_cast<Eigen::Index>(T.size());
    Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(n, n);
    accumulate_resolvent(T, eta, 1.0, acc);
    mirror_upper(acc);
    return acc;
}

ContourResult q_contour_fixed(OperatorMatrix const& M_free,
                              OperatorMatrix const& M_pert,
                              double step,
                              double margin)
{
    check_compatible(M_free, M_pert);
    if (!(step > 0))
    {
        throw DomainError("contour step must be positive");
    }
    auto const g = contour_grid(M_free, M_pert, margin);
    auto const n = static_cast<Eigen::Index>(M_free.dimension());
    ContourResult out;
    out.Q = Eigen::MatrixXd::Zero(n, n);
    out.step = step;
    add_nodes(M_free, M_pert, g.t_min, step, g.t_max, step, out.Q, out.nodes);
    mirror_upper(out.Q);
    return out;
}

ContourResult q_contour(OperatorMatrix const& M_free,
                        OperatorMatrix const& M_pert,
                        ContourOptions const& options)
{
    check_compatible(M_free, M_pert);
    if (!(options.initial_step > 0) || !(options.min_step > 0))
    {
        throw DomainError("contour steps must be positive");
    }
    auto const g = contour_grid(M_free, M_pert, options.margin);
    auto const n = static_cast<Eigen::Index>(M_free.dimension());
    double h = options.initial_step;
    // Nodes are t_min + k h; every halving adds the midpoints, so the
    // previous sum is reused with half its weight.
    double const t_max
        = g.t_min + std::ceil((g.t_max - g.t_min) / h) * h;

    ContourResult out;
    Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(n, n);
    add_nodes(M_free, M_pert, g.t_min, h, t_max, 1.0, sum, out.nodes);
    Eigen::MatrixXd current = h * sum;
    mirror_upper(current);

    while (h / 2 >= options.min_step * (1 - 1e-12))
    {
        add_nodes(M_free, M_pert, g.t_min + h / 2, h, t_max, 1.0, sum, out.nodes);
        h /= 2;
        Eigen::MatrixXd next = h * sum;
        mirror_upper(next);
        double const scale = next.norm();
        double const change
            = scale > 0 ? (next - current).norm() / scale : (next - current).norm();
        out.history.emplace_back(h, change);
        current = std::move(next);
        out.last_change = change;
        if (change <= options.tolerance || scale == 0)
        {
            out.Q = std::move(current);
            out.step = h;
            return out;
        }
    }
    throw ConvergenceError(
        fmt::format("contour integral not converged at step {}", h),
        out.last_change);
}

HsNormStudy hs_norm_study(std::vector<NuclearModel> const& models,
                          Constants const& constants,
                          int kappa,
                          std::vector<RadialGrid> const& grids,
                          unsigned threads)
{
    HsNormStudy out;
    std::size_t const ng = grids.size();
    out.rows.resize(models.size() * ng);
    parallel_for(out.rows.size(), threads, [&](std::size_t idx) {
        auto const& model = models[idx / ng];
        auto const& grid = grids[idx % ng];
        auto const M0 = free_operator_matrix(kappa, grid, constants.m_eff());
        auto const M1 = operator_matrix(model, constants, kappa, grid);
        Eigen::MatrixXd const Q = spectral_projector(M1) - spectral_projector(M0);
        HsNormRow& row = out.rows[idx];
        row.model = model.describe();
        row.zalpha = model.Z() * constants.alpha();
        row.n_points = grid.n_points();
        row.norm = Q.norm();
    });
    for (std::size_t mi = 0; mi < models.size(); ++mi)
    {
        bool ok = ng >= 3;
        double prev_diff = std::numeric_limits<double>::infinity();
        for (std::size_t gi = 0; gi < ng; ++gi)
        {
            auto& row = out.rows[mi * ng + gi];
            if (gi == 0)
            {
                row.difference = std::numeric_limits<double>::quiet_NaN();
                continue;
            }
            row.difference = row.norm - out.rows[mi * ng + gi - 1].norm;
            double const d = std::abs(row.difference);
            if (!(d < prev_diff) && d != 0)
                ok = false;
            prev_diff = d;
        }
        out.stabilizing.push_back(ok);
    }
    return out;
}
}  // namespace vacpol
