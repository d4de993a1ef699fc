#include "vacpol/serialize.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <system_error>

#include <fmt/format.h>
#include <json.hpp>

#include "vacpol/errors.hpp"

namespace vacpol
{
namespace
{
using nlohmann::ordered_json;

ordered_json provenance_json(Provenance const& p)
{
    ordered_json j;
    j["config_hash"] = p.config_hash;
    j["sources"] = p.sources;
    return j;
}

ordered_json number(double v)
{
    if (!std::isfinite(v))
        return nullptr;
    return v;
}
}  // namespace

std::string format_double(double value)
{
    if (std::isnan(value))
        return "nan";
    if (std::isinf(value))
        return value > 0 ? "inf" : "-inf";
    char buf[64];
    auto const res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

std::string to_csv(DataTable const& table, Provenance const& provenance)
{
    std::string out;
    out += fmt::format("# table: {}\n", table.name);
    out += fmt::format("# config_hash: {}\n", provenance.config_hash);
    for (auto const& s : provenance.sources)
    {
        out += fmt::format("# provenance: {}\n", s);
    }
    for (auto const& [k, v] : table.meta)
    {
        out += fmt::format("# {}: {}\n", k, v);
    }
    out += fmt::format("{}\n", fmt::join(table.columns, ","));
    for (auto const& row : table.rows)
    {
        for (std::size_t i = 0; i < row.size(); ++i)
        {
            if (i > 0)
                out += ',';
            out += format_double(row[i]);
        }
        out += '\n';
    }
    return out;
}

std::string to_json(DataTable const& table, Provenance const& provenance)
{
    ordered_json j;
    j["name"] = table.name;
    j["provenance"] = provenance_json(provenance);
    ordered_json meta = ordered_json::object();
    for (auto const& [k, v] : table.meta)
        meta[k] = v;
    j["meta"] = meta;
    j["columns"] = table.columns;
    ordered_json rows = ordered_json::array();
    for (auto const& row : table.rows)
    {
        ordered_json r = ordered_json::array();
        for (double v : row)
            r.push_back(number(v));
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j.dump(2) + "\n";
}

DataTable radial_table_data(RadialTable const& table, std::string name)
{
    DataTable t;
    t.name = std::move(name);
    t.columns = {"r", "value", "error_estimate"};
    t.meta.emplace_back("route", table.meta);
    for (std::size_t i = 0; i < table.size(); ++i)
    {
        t.rows.push_back({table.r[i], table.values[i], table.abs_error[i]});
    }
    return t;
}

DataTable kernel_table_data(std::vector<KernelEval> const& rows)
{
    DataTable t;
    t.name = "kernel";
    t.columns = {"k", "C", "rho_vac_hat", "U_hat"};
    for (auto const& r : rows)
    {
        t.rows.push_back({r.k, r.C, r.rho_vac_hat, r.U_hat});
    }
    return t;
}

DataTable shift_table_data(ShiftReport const& report)
{
    DataTable t;
    t.name = "shift";
    t.columns = {"n",
                 "l",
                 "delta_E",
                 "error_estimate",
                 "delta_E_eV",
                 "point_limit",
                 "point_limit_eV"};
    t.meta.emplace_back("model", report.model);
    t.meta.emplace_back("m_eff", format_double(report.m_eff));
    t.meta.emplace_back("alpha", format_double(report.alpha));
    t.meta.emplace_back("rest_energy_eV", format_double(report.rest_energy_ev));
    t.meta.emplace_back("density", report.density);
    t.meta.emplace_back("coarse_2s_estimate",
                        format_double(report.coarse_2s_estimate));
    for (auto const& [n, v] : report.splitting)
    {
        t.meta.emplace_back(fmt::format("splitting_n{}", n), format_double(v));
    }
    if (report.enhancement_over_electronic > 0)
    {
        t.meta.emplace_back("enhancement_over_electronic",
                            format_double(report.enhancement_over_electronic));
    }
    for (auto const& r : report.rows)
    {
        t.rows.push_back({static_cast<double>(r.n),
                          static_cast<double>(r.l),
                          r.delta_E,
                          r.delta_E_error,
                          r.delta_E_ev,
                          r.point_limit,
                          r.point_limit_ev});
    }
    return t;
}

std::string spectrum_json(std::vector<ChannelSpectrum> const& spectra,
                          Provenance const& provenance,
                          bool include_spinors)
{
    ordered_json j;
    j["name"] = "spectrum";
    j["provenance"] = provenance_json(provenance);
    ordered_json channels = ordered_json::array();
    for (auto const& s : spectra)
    {
        ordered_json c;
        c["kappa"] = s.kappa;
        c["m"] = s.m;
        c["grid"] = s.grid;
        c["gap_states"] = s.gap_states;
        c["gap_energies"] = s.gap_energies();
        c["spurious"] = s.spurious;
        c["eigenvalue_count"] = s.eigenvalues.size();
        ordered_json ev = ordered_json::array();
        for (double v : s.eigenvalues)
            ev.push_back(number(v));
        c["eigenvalues"] = std::move(ev);
        if (include_spinors)
        {
            ordered_json sp = ordered_json::array();
            for (auto const& st : s.spinors)
            {
                sp.push_back({{"energy", st.energy},
                              {"mean_radius", st.mean_radius},
                              {"upper", st.upper},
                              {"lower", st.lower}});
            }
            c["spinors"] = std::move(sp);
        }
        channels.push_back(std::move(c));
    }
    j["channels"] = std::move(channels);
    return j.dump(2) + "\n";
}

void write_atomic(std::filesystem::path const& path, std::string const& content)
{
    namespace fs = std::filesystem;
    fs::path const dir = path.has_parent_path() ? path.parent_path() : fs::path(".");
    std::error_code ec;
    fs::create_directories(dir, ec);
    fs::path const tmp = dir / ("." + path.filename().string() + ".tmp");
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os)
        {
            throw Error(fmt::format("cannot open {} for writing", tmp.string()));
        }
        os << content;
        os.flush();
        if (!os)
        {
            fs::remove(tmp, ec);
            throw Error(fmt::format("write to {} failed", tmp.string()));
        }
    }
    fs::rename(tmp, path, ec);
    if (ec)
    {
        fs::remove(tmp, ec);
        throw Error(fmt::format("cannot rename onto {}", path.string()));
    }
}
}  // namespace vacpol
