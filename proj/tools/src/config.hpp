#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>
#include <yaml-cpp/yaml.h>

#include "vacpol/constants.hpp"
#include "vacpol/nuclear_model.hpp"
#include "vacpol/radial_grid.hpp"
#include "vacpol/shift_engine.hpp"
#include "vacpol/uehling_potential.hpp"

namespace vacpol::cli
{
//! Malformed, invalid or inconsistent configuration (exit status 1).
class ConfigError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

enum class Command
{
    uehling,
    spectrum,
    shift,
    spectral_lab,
    verify,
};

std::string_view to_string(Command command);

struct UehlingSettings
{
    double r_min = 1e-4;
    double r_max = 10;
    std::size_t points = 41;
    UehlingRoute route = UehlingRoute::automatic;
    double switch_radius = 1;
    double k_min = 1e-3;
    double k_max = 1e3;
    std::size_t k_points = 61;
};

struct SpectrumSettings
{
    std::vector<int> kappas{-1, 1};
    GridScheme scheme = GridScheme::log;
    double r_min = 1e-6;
    double r_max = 0;  //!< resolved from the coupling when absent
    std::size_t points = 2000;
    std::size_t states = 3;
    bool refine = false;
    bool spinors = false;
};

struct ShiftSettings
{
    std::string preset;  //!< empty when no preset is used
    std::vector<ShiftState> states{{1, 0}, {2, 0}, {2, 1}};
    bool dirac_density = false;
    std::size_t points_per_decade = 48;
};

struct LabSettings
{
    int kappa = -1;
    double r_max = 20;
    std::size_t points = 400;
    double contour_tolerance = 1e-10;
    std::vector<std::size_t> hs_points{200, 400, 800};
    std::vector<double> hs_zalphas{0.01, 0.02, 0.04, 0.5};
    std::uint64_t seed = 1;
    std::size_t q1_pairs = 20;
    std::size_t q2_triples = 10;
    double momentum_scale = 3;
};

struct VerifySettings
{
    std::vector<std::string> only;
    std::filesystem::path golden;
};

//! Fully resolved run configuration.
struct RunConfig
{
    Command command = Command::verify;
    Constants constants;
    NuclearModel nucleus = NuclearModel::point(1);
    std::string format = "csv";
    std::filesystem::path out_dir = "vacpol-out";
    unsigned threads = 1;

    UehlingSettings uehling;
    SpectrumSettings spectrum;
    ShiftSettings shift;
    LabSettings lab;
    VerifySettings verify;

    //! Resolved physics parameters; threads and output location excluded.
    nlohmann::ordered_json canonical;
    std::string config_hash;

    double zalpha() const { return nucleus.Z() * constants.alpha(); }
};

//! Parse a YAML or JSON file; syntax errors carry file:line:col.
YAML::Node load_config_file(std::filesystem::path const& path);

//! Set doc[path...] = value, creating maps as needed (command-line flags).
void set_override(YAML::Node& doc,
                  std::vector<std::string> const& path,
                  YAML::Node const& value);

/*!
 * Validate against the shipped schema, apply presets and defaults and
 * resolve units. \c source names the file in error messages.
 */
RunConfig resolve_config(YAML::Node const& doc,
                         Command command,
                         std::string const& source);

//! Output directory: flag, then $VACPOL_OUT_DIR, then config, then default.
std::filesystem::path resolve_out_dir(std::optional<std::string> const& flag,
                                      YAML::Node const& doc);

//! Lower-case hex SHA-256.
std::string sha256_hex(std::string const& text);
}  // namespace vacpol::cli
