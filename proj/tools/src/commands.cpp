#include "commands.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <ostream>
#include <random>
#include <utility>

#include <fmt/format.h>
#include <fmt/ostream.h>
#include <json.hpp>

#include "vacpol/dirac_algebra.hpp"
#include "vacpol/errors.hpp"
#include "vacpol/golden.hpp"
#include "vacpol/parallel.hpp"
#include "vacpol/polarization_kernel.hpp"
#include "vacpol/radial_dirac.hpp"
#include "vacpol/serialize.hpp"
#include "vacpol/shift_engine.hpp"
#include "vacpol/spectral_lab.hpp"
#include "vacpol/uehling_potential.hpp"
#include "vacpol/verification.hpp"

namespace vacpol::cli
{
namespace
{
using ordered_json = nlohmann::ordered_json;

//! Output files are staged here and written together at the end.
class Staging
{
  public:
    explicit Staging(RunConfig const& cfg) : cfg_(cfg) {}

    void table(DataTable const& t, Provenance const& p)
    {
        bool const json = cfg_.format == "json";
        add(t.name + (json ? ".json" : ".csv"), json ? to_json(t, p) : to_csv(t, p));
    }

    void add(std::string const& name, std::string content)
    {
        files_.emplace_back(cfg_.out_dir / name, std::move(content));
    }

    std::vector<std::filesystem::path> commit() const
    {
        std::filesystem::create_directories(cfg_.out_dir);
        std::vector<std::filesystem::path> written;
        for (auto const& [path, content] : files_)
        {
            write_atomic(path, content);
            written.push_back(path);
        }
        return written;
    }

  private:
    RunConfig const& cfg_;
    std::vector<std::pair<std::filesystem::path, std::string>> files_;
};

Provenance provenance(RunConfig const& cfg, std::vector<std::string> sources)
{
    return {cfg.config_hash, std::move(sources)};
}

CommandOutcome cmd_uehling(RunConfig const& cfg, std::ostream& out)
{
    auto const& u = cfg.uehling;
    auto const& model = cfg.nucleus;
    auto const radii = log_spaced(u.r_min, u.r_max, u.points);

    RadialTable table;
    std::string source;
    if (model.kind() == NuclearKind::point)
    {
        table = uehling_point_table(model.Z(), radii, cfg.threads);
        source = "U(r): point-nucleus s-integral, s = cosh t, adaptive Gauss-Kronrod";
    }
    else
    {
        UehlingOptions opts;
        opts.route = u.route;
        opts.switch_radius = u.switch_radius;
        opts.threads = cfg.threads;
        table = uehling_position(model, radii, opts);
        source = "U(r): inverse Fourier transform of U_hat (oscillatory quadrature) "
                 "and/or n convolved with the point potential primitive W";
    }
    auto ut = radial_table_data(table, "uehling_position");
    ut.meta.emplace_back("model", model.describe());

    auto const ks = log_spaced(u.k_min, u.k_max, u.k_points);
    std::vector<KernelEval> rows(ks.size());
    parallel_for(ks.size(), cfg.threads, [&](std::size_t i) {
        rows[i] = evaluate_kernel(model, ks[i]);
    });
    auto kt = kernel_table_data(rows);
    kt.name = "uehling_kernel";
    kt.meta.emplace_back("model", model.describe());

    Staging stage(cfg);
    stage.table(ut, provenance(cfg, {source}));
    stage.table(kt,
                provenance(cfg,
                           {"C(k): closed form (series below k = 1)",
                            "rho_vac_hat = phi_hat C / (4 pi^2)",
                            "U_hat = phi_hat C / (pi k^2), cross-checked against "
                            "4 n_hat C / k^4"}));
    fmt::print(out,
               "uehling: {} radii in [{}, {}], {} wavenumbers, model {}\n",
               radii.size(),
               u.r_min,
               u.r_max,
               ks.size(),
               model.describe());
    return {stage.commit()};
}

RadialGrid spectrum_grid(SpectrumSettings const& s)
{
    return s.scheme == GridScheme::log ? RadialGrid::log(s.r_min, s.r_max, s.points)
                                       : RadialGrid::uniform(s.r_max, s.points);
}

CommandOutcome cmd_spectrum(RunConfig const& cfg, std::ostream& out)
{
    auto const& s = cfg.spectrum;
    double const m = cfg.constants.m_eff();
    double const za = cfg.zalpha();
    auto const potential = nuclear_potential_energy(cfg.nucleus, cfg.constants);
    auto const grid = spectrum_grid(s);
    std::size_t const nk = s.kappas.size();

    // Slot i: coarse grid of kappa i; slot nk + i: refined grid.
    std::size_t const jobs = s.refine ? 2 * nk : nk;
    std::vector<ChannelSpectrum> spectra(jobs);
    auto const fine = s.refine ? std::optional(grid.refined(2)) : std::nullopt;
    parallel_for(jobs, cfg.threads, [&](std::size_t i) {
        auto const& g = i < nk ? grid : *fine;
        spectra[i] = solve_channel(potential, s.kappas[i % nk], g, m);
    });

    DataTable cmp;
    cmp.name = "spectrum_comparison";
    cmp.columns = {"kappa", "level", "energy", "coulomb_energy", "difference"};
    if (s.refine)
    {
        cmp.columns.insert(cmp.columns.end(),
                           {"energy_refined", "richardson", "convergence"});
    }
    cmp.meta.emplace_back("model", cfg.nucleus.describe());
    cmp.meta.emplace_back("zalpha", format_double(za));
    cmp.meta.emplace_back("m", format_double(m));
    cmp.meta.emplace_back("grid", grid.describe());
    if (fine)
        cmp.meta.emplace_back("grid_refined", fine->describe());

    for (std::size_t i = 0; i < nk; ++i)
    {
        int const kappa = s.kappas[i];
        auto const e = spectra[i].gap_energies();
        std::size_t count = std::min(s.states, e.size());
        std::vector<double> ef;
        if (s.refine)
        {
            ef = spectra[nk + i].gap_energies();
            count = std::min(count, ef.size());
        }
        for (std::size_t k = 0; k < count; ++k)
        {
            double const coul = m * coulomb_dirac_level(k, kappa, za);
            std::vector<double> row{static_cast<double>(kappa),
                                    static_cast<double>(k),
                                    e[k],
                                    coul,
                                    e[k] - coul};
            if (s.refine)
            {
                row.push_back(ef[k]);
                row.push_back(richardson(e[k], grid.step(), ef[k], fine->step()));
                row.push_back(std::abs(ef[k] - e[k]));
            }
            cmp.rows.push_back(std::move(row));
        }
    }

    auto const prov = provenance(
        cfg,
        {"eigenvalues: staggered-grid radial Dirac operator, LAPACK bisection",
         "coulomb_energy: Sommerfeld formula",
         "richardson: second-order extrapolation in the grid step"});
    Staging stage(cfg);
    stage.add("spectrum.json", spectrum_json(spectra, prov, s.spinors));
    stage.table(cmp, prov);

    fmt::print(out, "spectrum: {} on {}\n", cfg.nucleus.describe(), grid.describe());
    for (auto const& r : cmp.rows)
    {
        fmt::print(out,
                   "  kappa {:+d} level {}: E = {:.12f}  coulomb = {:.12f}  diff = {:.3e}\n",
                   static_cast<int>(r[0]),
                   static_cast<int>(r[1]),
                   r[2],
                   r[3],
                   r[4]);
    }
    return {stage.commit()};
}

CommandOutcome cmd_shift(RunConfig const& cfg, std::ostream& out)
{
    auto const& s = cfg.shift;
    ShiftOptions opts;
    opts.dirac_density = s.dirac_density;
    opts.threads = cfg.threads;
    opts.points_per_decade = s.points_per_decade;
    // The muonic comparison against m_eff = 1 is only meaningful for heavy leptons.
    auto const report = cfg.constants.m_eff() != 1.0
                            ? muonic_report(cfg.nucleus, s.states, cfg.constants, opts)
                            : shift_report(cfg.nucleus, s.states, cfg.constants, opts);
    auto table = shift_table_data(report);
    if (!s.preset.empty())
        table.meta.emplace(table.meta.begin(), "preset", s.preset);

    Staging stage(cfg);
    stage.table(table,
                provenance(cfg,
                           {"delta_E: alpha <psi|U|psi>, adaptive radial quadrature",
                            "point_limit: -4 Z alpha^2 |psi(0)|^2 / 15 delta_l0",
                            "coarse_2s_estimate: -Z^4 alpha^5 m / 30"}));

    fmt::print(out,
               "shift: {}  m_eff = {}  density = {}\n",
               report.model,
               report.m_eff,
               report.density);
    fmt::print(out,
               "  {:>3} {:>3} {:>22} {:>22} {:>22}\n",
               "n",
               "l",
               "delta_E [m_e c^2]",
               "delta_E [eV]",
               "point limit [m_e c^2]");
    for (auto const& r : report.rows)
    {
        fmt::print(out,
                   "  {:>3} {:>3} {:>22.12e} {:>22.12e} {:>22.12e}\n",
                   r.n,
                   r.l,
                   r.delta_E,
                   r.delta_E_ev,
                   r.point_limit);
    }
    for (auto const& [n, v] : report.splitting)
        fmt::print(out, "  splitting n={}: {:.12e} m_e c^2\n", n, v);
    if (report.enhancement_over_electronic > 0)
    {
        fmt::print(out,
                   "  enhancement over m_eff = 1: {:.6g}\n",
                   report.enhancement_over_electronic);
    }
    return {stage.commit()};
}

Vec3 random_momentum(std::mt19937_64& rng, double scale)
{
    std::uniform_real_distribution<double> d(-scale, scale);
    double const x = d(rng);
    double const y = d(rng);
    double const z = d(rng);
    return {x, y, z};
}

CommandOutcome cmd_spectral_lab(RunConfig const& cfg, std::ostream& out)
{
    auto const& l = cfg.lab;
    auto const grid = RadialGrid::uniform(l.r_max, l.points);
    auto const m_free = free_operator_matrix(l.kappa, grid, cfg.constants.m_eff());
    auto const m_pert = operator_matrix(cfg.nucleus, cfg.constants, l.kappa, grid);

    auto const pair = projector_pair(m_free, m_pert);
    ContourOptions copts;
    copts.tolerance = l.contour_tolerance;
    auto const contour = q_contour(m_free, m_pert, copts);
    double const q_norm = pair.Q.norm();
    double const q_diff = (contour.Q - pair.Q).norm() / (q_norm > 0 ? q_norm : 1.0);

    DataTable ct;
    ct.name = "spectral_lab_contour";
    ct.columns = {"step", "change"};
    for (auto const& [step, change] : contour.history)
        ct.rows.push_back({step, change});
    ct.meta = {{"model", cfg.nucleus.describe()},
               {"kappa", std::to_string(l.kappa)},
               {"grid", grid.describe()},
               {"dimension", std::to_string(m_pert.dimension())},
               {"rank_free", std::to_string(pair.rank_free)},
               {"rank_pert", std::to_string(pair.rank_pert)},
               {"idempotency_free", format_double(pair.idempotency_free)},
               {"idempotency_pert", format_double(pair.idempotency_pert)},
               {"trace_Q", format_double(pair.trace_Q)},
               {"contour_step", format_double(contour.step)},
               {"contour_nodes", std::to_string(contour.nodes)},
               {"contour_vs_spectral_rel_frobenius", format_double(q_diff)}};

    std::vector<NuclearModel> models;
    for (double za : l.hs_zalphas)
        models.push_back(cfg.nucleus.with_charge(za / cfg.constants.alpha()));
    std::vector<RadialGrid> grids;
    for (auto n : l.hs_points)
        grids.push_back(RadialGrid::uniform(l.r_max, n));
    auto const hs = hs_norm_study(models, cfg.constants, l.kappa, grids, cfg.threads);
    DataTable ht;
    ht.name = "spectral_lab_hs_norm";
    ht.columns = {"zalpha", "points", "hs_norm", "difference"};
    for (auto const& r : hs.rows)
    {
        ht.rows.push_back(
            {r.zalpha, static_cast<double>(r.n_points), r.norm, r.difference});
    }
    for (std::size_t i = 0; i < hs.stabilizing.size() && i < l.hs_zalphas.size(); ++i)
    {
        ht.meta.emplace_back(fmt::format("stabilizing_zalpha_{}", format_double(l.hs_zalphas[i])),
                             hs.stabilizing[i] ? "yes" : "no");
    }

    // Random samples are drawn serially so they do not depend on threads.
    std::mt19937_64 rng(l.seed);
    std::vector<std::pair<Vec3, Vec3>> pairs(l.q1_pairs);
    for (auto& [p, q] : pairs)
    {
        p = random_momentum(rng, l.momentum_scale);
        q = random_momentum(rng, l.momentum_scale);
    }
    std::vector<std::array<Vec3, 3>> triples(l.q2_triples);
    for (auto& t : triples)
    {
        for (auto& p : t)
            p = random_momentum(rng, l.momentum_scale);
    }

    DataTable q1;
    q1.name = "spectral_lab_q1";
    q1.columns = {"px", "py", "pz", "qx", "qy", "qz", "closed_form", "quadrature",
                  "quadrature_imag", "rel_diff"};
    q1.rows.resize(pairs.size());
    parallel_for(pairs.size(), cfg.threads, [&](std::size_t i) {
        auto const& [p, q] = pairs[i];
        double const phi = potential_fourier(cfg.nucleus, (p - q).norm());
        auto const a = q1_trace_kernel(p, q, phi);
        auto const b = q1_trace_quadrature(p, q, phi);
        double const scale = std::max(std::abs(a), 1e-300);
        q1.rows[i] = {p.x(), p.y(), p.z(), q.x(), q.y(), q.z(),
                      a.real(), b.real(), b.imag(), std::abs(a - b) / scale};
    });

    DataTable q2;
    q2.name = "spectral_lab_q2";
    q2.columns = {"p1x", "p1y", "p1z", "p2x", "p2y", "p2z", "p3x", "p3y", "p3z",
                  "residual", "control", "term_scale"};
    q2.rows.resize(triples.size());
    parallel_for(triples.size(), cfg.threads, [&](std::size_t i) {
        auto const& t = triples[i];
        auto const c = q2_density_cancellation(t[0], t[1], t[2], cfg.nucleus);
        q2.rows[i] = {t[0].x(), t[0].y(), t[0].z(), t[1].x(), t[1].y(), t[1].z(),
                      t[2].x(), t[2].y(), t[2].z(), c.residual, c.control, c.term_scale};
    });

    Staging stage(cfg);
    stage.table(ct,
                provenance(cfg,
                           {"Q: P+ difference from LAPACK eigendecomposition",
                            "contour: trapezoid in t, eta = e^t, resolvent real part"}));
    stage.table(ht, provenance(cfg, {"hs_norm: Frobenius norm of the spectral Q"}));
    stage.table(q1,
                provenance(cfg,
                           {"closed_form: trace formula with cancellation-free numerator",
                            "quadrature: explicit 4x4 Dirac matrices, eta = tan theta, "
                            "adaptive Gauss-Kronrod"}));
    stage.table(q2,
                provenance(cfg,
                           {"residual: |sum| over symmetric Gauss-Legendre eta nodes",
                            "control: same sum over eta > 0 only"}));

    fmt::print(out,
               "spectral-lab: {} kappa {:+d}, dimension {}\n"
               "  ranks P+ free/pert {}/{}, tr Q = {:.6g}\n"
               "  contour vs spectral: {:.3e} (step {}, {} nodes)\n",
               cfg.nucleus.describe(),
               l.kappa,
               m_pert.dimension(),
               pair.rank_free,
               pair.rank_pert,
               pair.trace_Q,
               q_diff,
               contour.step,
               contour.nodes);
    return {stage.commit()};
}

CommandOutcome cmd_verify(RunConfig const& cfg, std::ostream& out)
{
    auto const& v = cfg.verify;
    std::vector<std::string> ids = v.only;
    auto const known = criteria();
    if (ids.empty())
    {
        for (auto const& c : known)
            ids.push_back(c.id);
    }
    for (auto const& id : ids)
    {
        bool const found = std::any_of(known.begin(), known.end(), [&](auto const& c) {
            return c.id == id;
        });
        if (!found)
            throw ConfigError(fmt::format("unknown criterion '{}'", id));
    }

    VerifyOptions opts;
    opts.golden_path = v.golden.empty() ? default_golden_path() : v.golden;
    opts.threads = cfg.threads;

    ordered_json report;
    report["name"] = "verify";
    report["provenance"] = {{"config_hash", cfg.config_hash},
                            {"golden_file", opts.golden_path.string()}};
    ordered_json results = ordered_json::array();
    std::vector<std::string> failed;
    for (auto const& id : ids)
    {
        auto const r = run_criterion(id, opts);
        fmt::print(out,
                   "{} [{:2}] {} ({:.2f} s)\n",
                   r.passed ? "PASS" : "FAIL",
                   r.number,
                   r.id,
                   r.seconds);
        for (auto const& d : r.details)
            fmt::print(out, "       {}\n", d);
        out.flush();
        if (!r.passed)
            failed.push_back(r.id);
        results.push_back({{"id", r.id},
                           {"number", r.number},
                           {"title", r.title},
                           {"passed", r.passed},
                           {"seconds", r.seconds},
                           {"details", r.details}});
    }
    report["criteria"] = std::move(results);
    report["failed"] = failed;
    report["all_passed"] = failed.empty();

    Staging stage(cfg);
    stage.add("verify.json", report.dump(2) + "\n");
    CommandOutcome outcome{stage.commit()};
    if (!failed.empty())
    {
        fmt::print(out, "verification failed: {}\n", fmt::join(failed, ", "));
        outcome.status = exit_code::verification;
    }
    return outcome;
}
}  // namespace

CommandOutcome run_command(RunConfig const& config, std::ostream& out)
{
    switch (config.command)
    {
        case Command::uehling:
            return cmd_uehling(config, out);
        case Command::spectrum:
            return cmd_spectrum(config, out);
        case Command::shift:
            return cmd_shift(config, out);
        case Command::spectral_lab:
            return cmd_spectral_lab(config, out);
        case Command::verify:
            return cmd_verify(config, out);
    }
    return {};
}
}  // namespace vacpol::cli
