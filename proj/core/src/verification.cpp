#include "vacpol/verification.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include <fmt/format.h>

#include "vacpol/constants.hpp"
#include "vacpol/dirac_algebra.hpp"
#include "vacpol/divergence.hpp"
#include "vacpol/errors.hpp"
#include "vacpol/golden.hpp"
#include "vacpol/polarization_kernel.hpp"
#include "vacpol/radial_dirac.hpp"
#include "vacpol/radial_table.hpp"
#include "vacpol/shift_engine.hpp"
#include "vacpol/spectral_lab.hpp"
#include "vacpol/uehling_potential.hpp"

namespace vacpol
{
namespace
{
constexpr double pi = std::numbers::pi;

struct Check
{
    CriterionInfo info;
    std::function<bool(std::vector<std::string>&, VerifyOptions const&)> run;
};

std::string kv(std::string_view name, double v)
{
    return fmt::format("{}={:.6e}", name, v);
}

double rel(double a, double b)
{
    return std::abs(a - b) / std::abs(b);
}

bool c_dual_form(std::vector<std::string>& d, VerifyOptions const&)
{
    double worst = 0;
    for (double k : log_spaced(1e-3, 1e3, 60))
    {
        worst = std::max(worst, rel(c_integral(k).value, c_closed(k)));
    }
    d.push_back(kv("max_rel_diff", worst));
    return worst <= 1e-9;
}

bool c_small_k(std::vector<std::string>& d, VerifyOptions const&)
{
    bool ok = true;
    for (double k : {1e-3, 3e-3, 1e-2})
    {
        double const dev = std::abs(c_closed(k) / std::pow(k, 4) - 1.0 / 15);
        d.push_back(kv(fmt::format("dev(k={:g})", k), dev));
        ok = ok && dev <= 1e-3 / 15;
    }
    return ok;
}

bool c_large_k(std::vector<std::string>& d, VerifyOptions const&)
{
    bool ok = true;
    for (double k : {1e3, 1e4})
    {
        double const dev
            = std::abs(c_closed(k) / (k * k) - 2.0 / 3 * std::log(k) + 5.0 / 9);
        d.push_back(kv(fmt::format("dev(k={:g})", k), dev));
        ok = ok && dev <= 1e-2;
    }
    return ok;
}

bool uehling_small_r(std::vector<std::string>& d, VerifyOptions const&)
{
    bool ok = true;
    for (double r : {1e-4, 3e-4})
    {
        double const law = -(2.0 / (3 * pi * r))
                           * (std::log(r) + 5.0 / 6 + Constants::euler_gamma);
        double const ratio = uehling_point_position(1, r) / law;
        d.push_back(kv(fmt::format("ratio(r={:g})", r), ratio));
        ok = ok && std::abs(ratio - 1) <= 0.01;
    }
    return ok;
}

bool uehling_large_r(std::vector<std::string>& d, VerifyOptions const&)
{
    double prev_dev = INFINITY;
    bool monotone = true;
    double last = 0;
    for (double r : {5.0, 6.0, 7.0, 8.0, 9.0, 10.0})
    {
        double const law
            = std::exp(-2 * r) * std::pow(r, -2.5) / (4 * std::sqrt(pi));
        double const ratio = uehling_point_position(1, r) / law;
        d.push_back(kv(fmt::format("ratio(r={:g})", r), ratio));
        double const dev = std::abs(ratio - 1);
        monotone = monotone && dev < prev_dev;
        prev_dev = dev;
        last = ratio;
    }
    d.push_back(fmt::format("monotone={}", monotone));
    return monotone && std::abs(last - 1) <= 0.10;
}

bool route_identity(std::vector<std::string>& d, VerifyOptions const&)
{
    std::vector<NuclearModel> const models = {
        NuclearModel::point(1),
        NuclearModel::point(92),
        NuclearModel::gaussian(1, 1.0),
        NuclearModel::gaussian(20, 0.01),
        NuclearModel::uniform_ball(1, 1.0),
        NuclearModel::uniform_ball(82, 0.0185),
    };
    double worst = 0;
    for (auto const& m : models)
    {
        for (double k : log_spaced(1e-3, 1e3, 40))
        {
            double const C = c_closed(k);
            double const a = potential_fourier(m, k) * C / (pi * k * k);
            double const b = 4 * density_fourier(m, k) * C / (k * k * k * k);
            worst = std::max(worst, rel(a, b));
        }
    }
    d.push_back(kv("max_rel_diff", worst));
    return worst <= 1e-14;
}

bool zero_induced_charge(std::vector<std::string>& d, VerifyOptions const&)
{
    bool ok = true;
    for (auto const& m :
         {NuclearModel::point(1), NuclearModel::gaussian(1, 1.0)})
    {
        double const ratio = std::abs(vacuum_density_fourier(m, 1e-4))
                             / std::abs(vacuum_density_fourier(m, 1.0));
        d.push_back(kv(fmt::format("ratio({})", to_string(m.kind())), ratio));
        ok = ok && ratio <= 1e-6;
    }
    return ok;
}

bool uehling_shift(std::vector<std::string>& d, VerifyOptions const& o)
{
    Constants const c(1 / 137.036, 1.0);
    ShiftOptions so;
    so.threads = o.threads;
    auto const rep = shift_report(
        NuclearModel::point(1), {{1, 0}, {2, 0}, {2, 1}}, c, so);
    double const e10 = rep.rows[0].delta_E;
    double const e20 = rep.rows[1].delta_E;
    double const e21 = rep.rows[2].delta_E;
    double const formula = -4 * std::pow(c.alpha(), 5) / (15 * pi * 8);
    d.push_back(kv("dE(2,0)", e20));
    d.push_back(kv("formula", formula));
    d.push_back(kv("ratio_1s_2s", e10 / e20));
    d.push_back(kv("ratio_2p_2s", std::abs(e21 / e20)));
    return rel(e20, formula) <= 0.02 && std::abs(e10 / e20 - 8) <= 0.16
           && std::abs(e21) <= 0.01 * std::abs(e20);
}

bool effective_potential_check(std::vector<std::string>& d, VerifyOptions const&)
{
    double const alpha = Constants::default_alpha;
    bool ok = true;
    for (double r : {1e-4, 3e-4})
    {
        auto const e = effective_potential(1, alpha, r);
        // Also compare the alpha^2 corrections alone.
        double const corr_num = e.numeric - e.coulomb;
        double const corr_app = e.approximation - e.coulomb;
        d.push_back(kv(fmt::format("rel_diff(r={:g})", r), e.relative_difference));
        d.push_back(kv(fmt::format("correction_rel_diff(r={:g})", r),
                       rel(corr_num, corr_app)));
        ok = ok && e.relative_difference <= 0.01 && e.log_enhanced;
    }
    auto const diag = unboundedness_diagnostic(1, alpha);
    d.push_back(fmt::format("z_eff_monotone={}", diag.monotone_growth));
    d.push_back(kv("log_r_at_2Z", diag.log_radius_at_bound));
    return ok && diag.monotone_growth;
}

bool dirac_ordering(std::vector<std::string>& d, VerifyOptions const&)
{
    Constants const c;
    SolveOptions so;
    so.gap_only = true;
    double min_margin = INFINITY;
    bool positive = true;
    bool complete = true;
    for (double za : {0.3, 0.5, 0.8})
    {
        for (double a : {0.5, 1.0, 2.0})
        {
            auto const model = NuclearModel::gaussian(za / c.alpha(), a);
            auto const grid
                = RadialGrid::log(1e-6, std::max(60.0, 160.0 / za), 2000);
            for (int kappa : {-1, 1})
            {
                auto const e = solve_channel(
                    nuclear_potential_energy(model, c), kappa, grid, 1.0, so)
                                   .gap_energies();
                if (e.size() < 3)
                    complete = false;
                for (double v : e)
                    positive = positive && v > 0;
                for (std::size_t k = 0; k < std::min<std::size_t>(3, e.size()); ++k)
                {
                    min_margin = std::min(
                        min_margin, e[k] - coulomb_dirac_level(k, kappa, za));
                }
            }
        }
    }
    d.push_back(kv("min_margin", min_margin));
    d.push_back(fmt::format("all_positive={}", positive));

    auto const V = coulomb_potential_energy(0.5);
    auto const g1 = RadialGrid::log(1e-8, 40, 1000);
    auto const g2 = g1.refined(2);
    double const e1 = solve_channel(V, -1, g1, 1.0, so).gap_energies().at(0);
    double const e2 = solve_channel(V, -1, g2, 1.0, so).gap_energies().at(0);
    double const ext = richardson(e1, g1.step(), e2, g2.step());
    double const err = std::abs(ext - coulomb_dirac_energy(0, -1, 0.5));
    d.push_back(kv("coulomb_extrapolated_error", err));
    return complete && positive && min_margin >= 0 && err <= 1e-6;
}

bool contour_formula(std::vector<std::string>& d, VerifyOptions const&)
{
    Constants const c;
    auto const grid = RadialGrid::uniform(20, 800);
    auto const M0 = free_operator_matrix(-1, grid);
    auto const M1 = operator_matrix(NuclearModel::gaussian(0.5 / c.alpha(), 1.0),
                                    c, -1, grid);
    Eigen::MatrixXd const Qs = spectral_projector(M1) - spectral_projector(M0);
    auto const res = q_contour(M0, M1);
    double const r = (res.Q - Qs).norm() / Qs.norm();
    d.push_back(kv("rel_frobenius", r));
    d.push_back(kv("step", res.step));
    d.push_back(fmt::format("nodes={}", res.nodes));
    return r <= 1e-6;
}

Vec3 random_vec(std::mt19937_64& gen, double scale)
{
    std::uniform_real_distribution<double> u(-scale, scale);
    return {u(gen), u(gen), u(gen)};
}

bool q1_kernel(std::vector<std::string>& d, VerifyOptions const&)
{
    std::mt19937_64 gen(20240917);
    auto const model = NuclearModel::gaussian(1, 1.0);
    double worst = 0;
    for (int i = 0; i < 20; ++i)
    {
        Vec3 const p = random_vec(gen, 3);
        Vec3 const q = random_vec(gen, 3);
        double const phi = potential_fourier(model, (p - q).norm());
        auto const a = q1_trace_kernel(p, q, phi);
        auto const b = q1_trace_quadrature(p, q, phi);
        worst = std::max(worst, std::abs(a - b) / std::abs(b));
    }
    double diag = 0;
    for (int i = 0; i < 50; ++i)
    {
        Vec3 const p = random_vec(gen, 5);
        diag = std::max(diag, std::abs(q1_trace_kernel(p, p, 1.0)));
    }
    d.push_back(kv("max_rel_diff", worst));
    d.push_back(kv("max_diagonal", diag));
    return worst <= 1e-8 && diag <= 1e-300;
}

bool q2_cancellation(std::vector<std::string>& d, VerifyOptions const&)
{
    std::mt19937_64 gen(777);
    auto const model = NuclearModel::gaussian(1, 1.0);
    double worst = 0;
    for (int i = 0; i < 10; ++i)
    {
        auto const r = q2_density_cancellation(random_vec(gen, 3),
                                               random_vec(gen, 3),
                                               random_vec(gen, 3),
                                               model);
        worst = std::max(worst, r.residual / r.control);
    }
    d.push_back(kv("max_residual_over_control", worst));
    return worst <= 1e-6;
}

bool diagonal_log_divergence(std::vector<std::string>& d, VerifyOptions const&)
{
    auto const model = NuclearModel::gaussian(1, 1.0);
    double const k = 1.0;
    auto const study = diagonal_divergence_study(model, k, log_spaced(1e2, 1e4, 9));
    d.push_back(kv("r_squared", study.fit.r_squared));
    d.push_back(kv("slope", study.fit.slope));
    d.push_back(kv("expected_slope", study.expected_slope));
    return study.fit.r_squared >= 0.999;
}

bool golden_values(std::vector<std::string>& d, VerifyOptions const& o)
{
    auto const path
        = o.golden_path.empty() ? default_golden_path() : o.golden_path;
    auto const checks = check_golden(load_golden(path));
    bool ok = !checks.empty();
    for (auto const& c : checks)
    {
        if (!c.passed)
        {
            d.push_back(c.error.empty()
                            ? fmt::format("FAILED {} rel_diff={:.3e} tol={:.1e}",
                                          c.id, c.rel_diff, c.rel_tol)
                            : fmt::format("FAILED {}: {}", c.id, c.error));
            ok = false;
        }
    }
    d.push_back(fmt::format("entries={}", checks.size()));
    return ok;
}

std::vector<Check> const& registry()
{
    static std::vector<Check> const checks = {
        {{"c-dual-form", 1, "C(k) integral and closed forms agree"}, c_dual_form},
        {{"c-small-k", 2, "C(k)/k^4 -> 1/15 as k -> 0"}, c_small_k},
        {{"c-large-k", 3, "C(k)/k^2 ~ (2/3) log k - 5/9"}, c_large_k},
        {{"uehling-small-r", 4, "point U(r) logarithmic law at small r"},
         uehling_small_r},
        {{"uehling-large-r", 5, "point U(r) exponential law at large r"},
         uehling_large_r},
        {{"route-identity", 6, "potential and density momentum routes agree"},
         route_identity},
        {{"zero-induced-charge", 7, "induced charge vanishes at k -> 0"},
         zero_induced_charge},
        {{"uehling-shift", 8, "first-order shift against contact term"},
         uehling_shift},
        {{"effective-potential", 9, "effective potential near a point nucleus"},
         effective_potential_check},
        {{"dirac-ordering", 10, "extended-nucleus levels above Coulomb levels"},
         dirac_ordering},
        {{"contour-formula", 11, "contour integral reproduces spectral Q"},
         contour_formula},
        {{"q1-kernel", 12, "closed-form tr Q1 against 4x4 eta quadrature"},
         q1_kernel},
        {{"q2-cancellation", 13, "Q2 density cancels on a symmetric eta grid"},
         q2_cancellation},
        {{"diagonal-log-divergence", 14, "diagonal grows like log of cut-off"},
         diagonal_log_divergence},
        {{"golden-values", 15, "golden regression values"}, golden_values},
    };
    return checks;
}
}  // namespace

std::vector<CriterionInfo> criteria()
{
    std::vector<CriterionInfo> out;
    for (auto const& c : registry())
        out.push_back(c.info);
    return out;
}

CriterionResult run_criterion(std::string const& id, VerifyOptions const& options)
{
    auto const& reg = registry();
    auto it = std::find_if(reg.begin(), reg.end(), [&](Check const& c) {
        return c.info.id == id;
    });
    if (it == reg.end())
    {
        throw DomainError(fmt::format("unknown criterion '{}'", id));
    }
    CriterionResult r;
    r.id = it->info.id;
    r.number = it->info.number;
    r.title = it->info.title;
    auto const t0 = std::chrono::steady_clock::now();
    try
    {
        r.passed = it->run(r.details, options);
    }
    catch (std::exception const& e)
    {
        r.passed = false;
        r.details.push_back(fmt::format("error: {}", e.what()));
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                    .count();
    return r;
}

std::vector<CriterionResult> run_criteria(std::vector<std::string> const& ids,
                                          VerifyOptions const& options)
{
    std::vector<CriterionResult> out;
    if (ids.empty())
    {
        for (auto const& c : registry())
            out.push_back(run_criterion(c.info.id, options));
        return out;
    }
    for (auto const& id : ids)
        out.push_back(run_criterion(id, options));
    return out;
}
}  // namespace vacpol
