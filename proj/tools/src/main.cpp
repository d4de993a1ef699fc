#include <deque>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "vacpol/errors.hpp"

#include "commands.hpp"
#include "config.hpp"

namespace
{
using vacpol::cli::Command;
using vacpol::cli::exit_code::config;
using vacpol::cli::exit_code::numerical;

struct Override
{
    std::vector<std::string> path;
    std::string text;
};

//! Options whose text is stored verbatim and checked by the schema later.
class Overrides
{
  public:
    void add(CLI::App* app,
             std::string const& flag,
             std::vector<std::string> path,
             std::string const& help)
    {
        auto& slot = entries_.emplace_back();
        slot.path = std::move(path);
        app->add_option(flag, slot.text, help);
        apps_.push_back(app);
    }

    void add_flag(CLI::App* app,
                  std::string const& flag,
                  std::vector<std::string> path,
                  std::string const& help)
    {
        auto& slot = flags_.emplace_back();
        slot.first.path = std::move(path);
        app->add_flag(flag, slot.second, help);
        flag_apps_.push_back(app);
    }

    void add_list(CLI::App* app,
                  std::string const& flag,
                  std::vector<std::string> path,
                  std::string const& help)
    {
        auto& slot = lists_.emplace_back();
        slot.first = std::move(path);
        app->add_option(flag, slot.second, help);
        list_apps_.push_back(app);
    }

    void apply(YAML::Node& doc, CLI::App const* active) const
    {
        for (std::size_t i = 0; i < entries_.size(); ++i)
        {
            if (apps_[i] == active && !entries_[i].text.empty())
                vacpol::cli::set_override(doc, entries_[i].path, YAML::Node(entries_[i].text));
        }
        for (std::size_t i = 0; i < flags_.size(); ++i)
        {
            if (flag_apps_[i] == active && flags_[i].second)
                vacpol::cli::set_override(doc, flags_[i].first.path, YAML::Node("true"));
        }
        for (std::size_t i = 0; i < lists_.size(); ++i)
        {
            if (list_apps_[i] != active || lists_[i].second.empty())
                continue;
            YAML::Node seq(YAML::NodeType::Sequence);
            for (auto const& v : lists_[i].second)
                seq.push_back(v);
            vacpol::cli::set_override(doc, lists_[i].first, seq);
        }
    }

  private:
    // deques keep references stable for CLI11.
    std::deque<Override> entries_;
    std::vector<CLI::App const*> apps_;
    std::deque<std::pair<Override, bool>> flags_;
    std::vector<CLI::App const*> flag_apps_;
    std::deque<std::pair<std::vector<std::string>, std::vector<std::string>>> lists_;
    std::vector<CLI::App const*> list_apps_;
};

void nucleus_flags(Overrides& o, CLI::App* app)
{
    o.add(app, "--kind", {"nucleus", "kind"}, "point | gaussian | uniform_ball");
    o.add(app, "--Z,--z", {"nucleus", "Z"}, "nuclear charge");
    o.add(app, "--zalpha", {"nucleus", "zalpha"}, "coupling Z alpha (instead of --Z)");
    o.add(app, "--width", {"nucleus", "width"}, "nuclear width, natural units");
    o.add(app, "--width-fm", {"nucleus", "width_fm"}, "nuclear width in fm");
    o.add(app, "--m-eff", {"constants", "m_eff"}, "bound particle mass in electron masses");
    o.add(app, "--alpha", {"constants", "alpha"}, "fine-structure constant");
}
}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"vacpol: vacuum polarization potentials, spectra and level shifts"};
    app.require_subcommand(1);

    std::optional<std::string> config_path;
    std::optional<std::string> out_dir;
    std::string format;
    std::string threads;
    app.add_option("--config", config_path, "YAML or JSON run configuration");
    app.add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", out_dir, "output directory (overrides $VACPOL_OUT_DIR)");
    app.add_option("--threads", threads, "worker threads");

    Overrides o;
    auto* uehling = app.add_subcommand("uehling", "tabulate U(r) and the kernel C(k)");
    nucleus_flags(o, uehling);
    o.add(uehling, "--r-min", {"uehling", "r_min"}, "smallest radius");
    o.add(uehling, "--r-max", {"uehling", "r_max"}, "largest radius");
    o.add(uehling, "--points", {"uehling", "points"}, "number of radii");
    o.add(uehling, "--route", {"uehling", "route"}, "automatic | fourier | convolution");
    o.add(uehling, "--switch-radius", {"uehling", "switch_radius"}, "route switch radius");
    o.add(uehling, "--k-min", {"uehling", "k_min"}, "smallest wavenumber");
    o.add(uehling, "--k-max", {"uehling", "k_max"}, "largest wavenumber");
    o.add(uehling, "--k-points", {"uehling", "k_points"}, "number of wavenumbers");

    auto* spectrum = app.add_subcommand("spectrum", "radial Dirac bound states");
    nucleus_flags(o, spectrum);
    o.add_list(spectrum, "--kappa", {"spectrum", "kappas"}, "channels (repeatable)");
    o.add(spectrum, "--scheme", {"spectrum", "scheme"}, "log | uniform");
    o.add(spectrum, "--r-min", {"spectrum", "r_min"}, "first log-grid node");
    o.add(spectrum, "--r-max", {"spectrum", "r_max"}, "box radius");
    o.add(spectrum, "--points", {"spectrum", "points"}, "grid points");
    o.add(spectrum, "--states", {"spectrum", "states"}, "levels per channel in the table");
    o.add_flag(spectrum, "--refine", {"spectrum", "refine"}, "also solve on a 2x finer grid");
    o.add_flag(spectrum, "--spinors", {"spectrum", "spinors"}, "include spinors in the JSON");

    auto* shift = app.add_subcommand("shift", "first-order level shifts");
    nucleus_flags(o, shift);
    o.add(shift, "--preset", {"shift", "preset"},
          "hydrogen-2s2p | muonic-hydrogen | muonic-hydrogen-extended");
    o.add(shift, "--lepton-mass", {"constants", "lepton_mass"}, "lepton mass, electron masses");
    o.add(shift, "--points-per-decade", {"shift", "points_per_decade"}, "U(r) table density");
    o.add_flag(shift, "--dirac-density", {"shift", "dirac_density"},
               "weight with the Dirac density instead of the Schroedinger one");

    auto* lab = app.add_subcommand("spectral-lab", "discretized Dirac-sea projector studies");
    nucleus_flags(o, lab);
    o.add(lab, "--kappa", {"spectral_lab", "kappa"}, "channel");
    o.add(lab, "--r-max", {"spectral_lab", "r_max"}, "box radius");
    o.add(lab, "--points", {"spectral_lab", "points"}, "grid points");
    o.add(lab, "--seed", {"spectral_lab", "seed"}, "random momentum seed");

    auto* verify = app.add_subcommand("verify", "run the acceptance suite");
    o.add_list(verify, "--only", {"verify", "only"}, "criterion ids (repeatable)");
    o.add(verify, "--golden", {"verify", "golden"}, "golden values file");

    for (auto* sub : {uehling, spectrum, shift, lab, verify})
        sub->fallthrough();

    try
    {
        app.parse(argc, argv);
    }
    catch (CLI::ParseError const& e)
    {
        int const code = app.exit(e);
        return code == 0 ? 0 : config;
    }

    CLI::App const* active = app.get_subcommands().front();
    Command const command = active == uehling    ? Command::uehling
                            : active == spectrum ? Command::spectrum
                            : active == shift    ? Command::shift
                            : active == lab      ? Command::spectral_lab
                                                 : Command::verify;
    try
    {
        YAML::Node doc;
        if (config_path)
            doc = vacpol::cli::load_config_file(*config_path);
        o.apply(doc, active);
        if (!format.empty())
            vacpol::cli::set_override(doc, {"output", "format"}, YAML::Node(format));
        if (!threads.empty())
            vacpol::cli::set_override(doc, {"threads"}, YAML::Node(threads));

        auto cfg = vacpol::cli::resolve_config(
            doc, command, config_path ? *config_path : std::string("config"));
        cfg.out_dir = vacpol::cli::resolve_out_dir(out_dir, doc);
        auto const outcome = vacpol::cli::run_command(cfg, std::cout);
        for (auto const& f : outcome.files)
            std::cout << "wrote " << f.string() << "\n";
        return outcome.status;
    }
    catch (vacpol::cli::ConfigError const& e)
    {
        std::cerr << "vacpol: config error:\n" << e.what() << "\n";
        return config;
    }
    catch (vacpol::UnsupportedOperation const& e)
    {
        std::cerr << "vacpol: " << e.what() << "\n";
        return config;
    }
    catch (vacpol::DomainError const& e)
    {
        std::cerr << "vacpol: " << e.what() << "\n";
        return config;
    }
    catch (std::filesystem::filesystem_error const& e)
    {
        std::cerr << "vacpol: " << e.what() << "\n";
        return config;
    }
    catch (vacpol::Error const& e)
    {
        std::cerr << "vacpol: numerical failure: " << e.what() << "\n";
        return numerical;
    }
    catch (std::exception const& e)
    {
        std::cerr << "vacpol: " << e.what() << "\n";
        return numerical;
    }
}
