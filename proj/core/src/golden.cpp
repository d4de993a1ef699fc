#include "vacpol/golden.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>

#include <fmt/format.h>
#include <json.hpp>

#include "vacpol/divergence.hpp"
#include "vacpol/errors.hpp"
#include "vacpol/fourier.hpp"
#include "vacpol/polarization_kernel.hpp"
#include "vacpol/radial_dirac.hpp"
#include "vacpol/shift_engine.hpp"
#include "vacpol/uehling_potential.hpp"

#ifndef VACPOL_DEFAULT_DATA_DIR
#define VACPOL_DEFAULT_DATA_DIR "data"
#endif

namespace vacpol
{
namespace
{
struct Quantity
{
    std::function<double()> reference;
    std::function<double()> production;
    double rel_tol;
    std::string source;
};

double uehling_gauss(double r, UehlingRoute route)
{
    UehlingOptions o;
    o.route = route;
    return uehling_position_value(NuclearModel::gaussian(1, 1.0), r, o).value;
}

// Point-nucleus U by inverse transform of 4 n_hat C / k^4.
double uehling_point_fourier(double r)
{
    double const nhat = std::pow(2 * std::numbers::pi, -1.5);
    auto uhat = [nhat](double k) {
        if (k == 0)
            return 4 * nhat / 15.0;
        return 4 * nhat * c_closed(k) / (k * k * k * k);
    };
    return fourier_radial(uhat, r, 1.0, 1e-11).value;
}

double dirac_gauss_ground()
{
    double const za = 0.5;
    Constants const c;
    auto model = NuclearModel::gaussian(za / c.alpha(), 1.0);
    auto grid = RadialGrid::log(1e-6, 60, 1000);
    SolveOptions o;
    o.gap_only = true;
    return solve_channel(nuclear_potential_energy(model, c), -1, grid, 1.0, o)
        .gap_energies()
        .at(0);
}

double point_shift_2s()
{
    double const alpha = 1 / 137.036;
    HydrogenicState psi(2, 0, alpha);
    return first_order_shift(
               [](double r) { return uehling_point_position(1, r); }, psi, alpha)
        .value;
}

std::map<std::string, Quantity> const& registry()
{
    static std::map<std::string, Quantity> const q = {
        {"c_kernel_k1",
         {[] { return c_integral(1).value; },
          [] { return c_closed(1); },
          1e-10,
          "integral form of C by adaptive quadrature"}},
        {"c_kernel_k30",
         {[] { return c_integral(30).value; },
          [] { return c_closed(30); },
          1e-10,
          "integral form of C by adaptive quadrature"}},
        {"uehling_point_r1",
         {[] { return uehling_point_fourier(1.0); },
          [] { return uehling_point_position(1, 1.0); },
          1e-8,
          "inverse Fourier transform of 4 n_hat C / k^4"}},
        {"uehling_gauss_a1_r0.5",
         {[] { return uehling_gauss(0.5, UehlingRoute::convolution); },
          [] { return uehling_gauss(0.5, UehlingRoute::fourier); },
          1e-8,
          "convolution of the density with the point potential"}},
        {"uehling_gauss_a1_r3",
         {[] { return uehling_gauss(3.0, UehlingRoute::fourier); },
          [] { return uehling_gauss(3.0, UehlingRoute::convolution); },
          1e-7,
          "inverse Fourier transform of phi_hat C / (pi k^2)"}},
        {"dirac_gauss_za0.5_a1_ground",
         {dirac_gauss_ground,
          dirac_gauss_ground,
          1e-12,
          "regression: staggered radial Dirac, log grid n=1000"}},
        {"f0_xi0.1",
         {[] { return f0_integral(0.1).value; },
          [] { return f0_integral(0.1).value; },
          1e-9,
          "regression: analytic angular reduction of F_0"}},
        {"shift_point_Z1_2s",
         {point_shift_2s,
          point_shift_2s,
          1e-9,
          "regression: radial quadrature of -alpha^2 int U |psi|^2"}},
    };
    return q;
}

Quantity const& lookup(std::string const& id)
{
    auto it = registry().find(id);
    if (it == registry().end())
    {
        throw DomainError(fmt::format("unknown golden quantity '{}'", id));
    }
    return it->second;
}
}  // namespace

std::vector<std::string> golden_ids()
{
    std::vector<std::string> ids;
    for (auto const& [id, q] : registry())
        ids.push_back(id);
    return ids;
}

GoldenEntry golden_reference(std::string const& id)
{
    auto const& q = lookup(id);
    return {id, q.reference(), q.rel_tol, q.source};
}

double golden_production(std::string const& id)
{
    return lookup(id).production();
}

std::vector<GoldenEntry> load_golden(std::filesystem::path const& path)
{
    std::ifstream is(path);
    if (!is)
    {
        throw Error(fmt::format("cannot open golden file {}", path.string()));
    }
    nlohmann::json j;
    try
    {
        is >> j;
    }
    catch (nlohmann::json::exception const& e)
    {
        throw Error(fmt::format("golden file {}: {}", path.string(), e.what()));
    }
    std::vector<GoldenEntry> out;
    try
    {
        for (auto const& e : j.at("entries"))
        {
            out.push_back({e.at("id").get<std::string>(),
                           e.at("value").get<double>(),
                           e.at("rel_tol").get<double>(),
                           e.value("source", std::string{})});
        }
    }
    catch (nlohmann::json::exception const& e)
    {
        throw Error(fmt::format("golden file {}: {}", path.string(), e.what()));
    }
    return out;
}

std::string golden_json(std::vector<GoldenEntry> const& entries)
{
    nlohmann::ordered_json j;
    j["format"] = 1;
    auto arr = nlohmann::ordered_json::array();
    for (auto const& e : entries)
    {
        arr.push_back({{"id", e.id},
                       {"value", e.value},
                       {"rel_tol", e.rel_tol},
                       {"source", e.source}});
    }
    j["entries"] = std::move(arr);
    return j.dump(2) + "\n";
}

std::vector<GoldenCheck> check_golden(std::vector<GoldenEntry> const& entries)
{
    std::vector<GoldenCheck> out;
    for (auto const& e : entries)
    {
        GoldenCheck c;
        c.id = e.id;
        c.expected = e.value;
        c.rel_tol = e.rel_tol;
        try
        {
            c.actual = golden_production(e.id);
            c.rel_diff = std::abs(c.actual - c.expected)
                         / std::max(std::abs(c.expected), 1e-300);
            c.passed = c.rel_diff <= c.rel_tol;
        }
        catch (std::exception const& ex)
        {
            c.error = ex.what();
            c.passed = false;
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::filesystem::path default_golden_path()
{
    if (char const* dir = std::getenv("VACPOL_DATA_DIR"); dir && *dir)
    {
        return std::filesystem::path(dir) / "golden_values.json";
    }
    return std::filesystem::path(VACPOL_DEFAULT_DATA_DIR) / "golden_values.json";
}
}  // namespace vacpol
