#include "config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <openssl/evp.h>

#include "vacpol/errors.hpp"

#include "schema.hpp"

namespace vacpol::cli
{
namespace
{
// Root-mean-square proton charge radius in fm.
constexpr double proton_rms_radius_fm = 0.84087;

std::string located(std::string const& source, YAML::Node const& node, std::string const& msg)
{
    auto const m = node.Mark();
    if (m.line < 0)
        return fmt::format("{}: {}", source, msg);
    return fmt::format("{}:{}:{}: {}", source, m.line + 1, m.column + 1, msg);
}

YAML::Node child(YAML::Node const& node, char const* key)
{
    if (!node || !node.IsMap())
        return YAML::Node(YAML::NodeType::Undefined);
    return node[key];
}

template<class T>
T get(YAML::Node const& block, char const* key, T fallback)
{
    auto const n = child(block, key);
    return n ? n.as<T>() : fallback;
}

template<class T>
std::optional<T> maybe(YAML::Node const& block, char const* key)
{
    auto const n = child(block, key);
    if (!n)
        return std::nullopt;
    return n.as<T>();
}

//! Preset defaults, overridden key by key by the user document.
YAML::Node preset_document(std::string const& name)
{
    YAML::Node p;
    p["nucleus"]["kind"] = "point";
    p["nucleus"]["Z"] = 1;
    if (name == "hydrogen-2s2p")
    {
        p["constants"]["m_eff"] = 1;
    }
    else
    {
        p["constants"]["lepton_mass"] = masses::muon;
        p["constants"]["reduced_mass"] = true;
    }
    if (name == "muonic-hydrogen-extended")
    {
        p["nucleus"]["kind"] = "gaussian";
        // Gaussian sigma with the measured rms radius: r_rms = sqrt(3) sigma.
        p["nucleus"]["width_fm"] = proton_rms_radius_fm / std::sqrt(3.0);
    }
    return p;
}

bool has_any(YAML::Node const& block, std::initializer_list<char const*> keys)
{
    for (auto k : keys)
    {
        if (child(block, k))
            return true;
    }
    return false;
}

//! Pick the user's group of mutually exclusive keys if any is present.
YAML::Node group_source(YAML::Node const& user,
                        YAML::Node const& preset,
                        std::initializer_list<char const*> keys)
{
    return has_any(user, keys) ? user : preset;
}

double nuclear_mass(YAML::Node const& nucleus, double Z)
{
    if (auto m = maybe<double>(nucleus, "mass"))
        return *m;
    if (Z == 1)
        return masses::proton;
    // A ~ 2Z for light and medium nuclei.
    return 2 * std::round(Z) * masses::atomic_mass_unit;
}

nlohmann::ordered_json grid_json(RadialGrid const& g)
{
    return {{"scheme", std::string(to_string(g.scheme()))},
            {"r_min", g.r_min()},
            {"r_max", g.r_max()},
            {"points", g.n_points()}};
}
}  // namespace

std::string_view to_string(Command command)
{
    switch (command)
    {
        case Command::uehling:
            return "uehling";
        case Command::spectrum:
            return "spectrum";
        case Command::shift:
            return "shift";
        case Command::spectral_lab:
            return "spectral-lab";
        case Command::verify:
            return "verify";
    }
    return "?";
}

YAML::Node load_config_file(std::filesystem::path const& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError(fmt::format("{}: cannot open config file", path.string()));
    std::stringstream ss;
    ss << in.rdbuf();
    try
    {
        auto doc = YAML::Load(ss.str());
        if (doc && !doc.IsNull() && !doc.IsMap())
        {
            throw ConfigError(located(path.string(), doc, "top level must be a mapping"));
        }
        return doc;
    }
    catch (YAML::ParserException const& e)
    {
        throw ConfigError(fmt::format("{}:{}:{}: syntax error: {}",
                                      path.string(),
                                      e.mark.line + 1,
                                      e.mark.column + 1,
                                      e.msg));
    }
}

void set_override(YAML::Node& doc,
                  std::vector<std::string> const& path,
                  YAML::Node const& value)
{
    if (!doc || doc.IsNull())
        doc = YAML::Node(YAML::NodeType::Map);
    // yaml-cpp nodes are handles, so walking with copies edits the tree.
    YAML::Node cur = doc;
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
    {
        YAML::Node next = cur[path[i]];
        if (!next || !next.IsMap())
        {
            cur[path[i]] = YAML::Node(YAML::NodeType::Map);
            next = cur[path[i]];
        }
        cur.reset(next);
    }
    cur[path.back()] = value;
}

std::filesystem::path resolve_out_dir(std::optional<std::string> const& flag,
                                      YAML::Node const& doc)
{
    if (flag)
        return *flag;
    if (char const* env = std::getenv("VACPOL_OUT_DIR"); env && *env)
        return env;
    if (auto d = maybe<std::string>(child(doc, "output"), "directory"))
        return *d;
    return "vacpol-out";
}

RunConfig resolve_config(YAML::Node const& doc,
                         Command command,
                         std::string const& source)
{
    if (auto errors = validate_document(doc, config_schema()); !errors.empty())
    {
        std::string msg;
        for (auto const& e : errors)
            msg += fmt::format("{}{}{}{}",
                               msg.empty() ? "" : "\n",
                               source,
                               e.front() == '(' ? ": " : ":",
                               e);
        throw ConfigError(msg);
    }

    RunConfig cfg;
    cfg.command = command;
    auto const fail = [&](YAML::Node const& n, std::string const& msg) {
        throw ConfigError(located(source, n, msg));
    };

    auto const user_shift = child(doc, "shift");
    cfg.shift.preset = get<std::string>(user_shift, "preset", "");
    YAML::Node const preset = (command == Command::shift && !cfg.shift.preset.empty())
                                  ? preset_document(cfg.shift.preset)
                                  : YAML::Node();

    // Constants: alpha first, the particle mass needs the nucleus.
    auto const uc = child(doc, "constants");
    double const alpha = get<double>(uc, "alpha", Constants::default_alpha);
    double const compton
        = get<double>(uc, "electron_compton_fm", Constants::default_electron_compton_fm);
    double const rest_ev = get<double>(
        uc, "electron_rest_energy_ev", Constants::default_electron_rest_energy_ev);
    Constants const base(alpha, 1.0, compton, rest_ev);

    // Nucleus.
    auto const un = child(doc, "nucleus");
    auto const pn = child(preset, "nucleus");
    bool const extended_default
        = command == Command::spectrum || command == Command::spectral_lab;
    auto kind_name = get<std::string>(
        un, "kind", get<std::string>(pn, "kind", extended_default ? "gaussian" : "point"));
    auto const kind = nuclear_kind_from_string(kind_name);

    if (child(un, "Z") && child(un, "zalpha"))
        fail(child(un, "zalpha"), "give either Z or zalpha, not both");
    auto const charge_src = group_source(un, pn, {"Z", "zalpha"});
    double Z;
    if (auto z = maybe<double>(charge_src, "Z"))
        Z = *z;
    else if (auto za = maybe<double>(charge_src, "zalpha"))
        Z = *za / alpha;
    else
        Z = extended_default ? 0.5 / alpha : 1.0;

    if (child(un, "width") && child(un, "width_fm"))
        fail(child(un, "width_fm"), "give either width or width_fm, not both");
    auto const width_src = group_source(un, pn, {"width", "width_fm"});
    NuclearModel model = NuclearModel::point(Z);
    if (kind == NuclearKind::point)
    {
        if (has_any(un, {"width", "width_fm"}))
            fail(un, "a point nucleus takes no width");
    }
    else
    {
        double width = 1.0;
        if (auto w = maybe<double>(width_src, "width"))
            width = *w;
        else if (auto wf = maybe<double>(width_src, "width_fm"))
            width = fm_to_natural(*wf, base);
        model = kind == NuclearKind::gaussian ? NuclearModel::gaussian(Z, width)
                                              : NuclearModel::uniform_ball(Z, width);
    }
    cfg.nucleus = model;

    // Particle mass: explicit m_eff, else lepton_mass (reduced by default), else 1.
    auto const pc = child(preset, "constants");
    if (child(uc, "m_eff") && child(uc, "lepton_mass"))
        fail(child(uc, "lepton_mass"), "give either m_eff or lepton_mass, not both");
    auto const mass_src = group_source(uc, pc, {"m_eff", "lepton_mass"});
    double m_eff = 1.0;
    if (auto m = maybe<double>(mass_src, "m_eff"))
    {
        m_eff = *m;
    }
    else if (auto lepton = maybe<double>(mass_src, "lepton_mass"))
    {
        bool const reduce = get<bool>(uc, "reduced_mass", get<bool>(pc, "reduced_mass", true));
        m_eff = *lepton;
        if (reduce)
        {
            if (Z <= 0)
                fail(uc, "reduced mass needs a nucleus with Z > 0");
            m_eff = reduced_mass(*lepton, nuclear_mass(un, Z));
        }
    }
    cfg.constants = base.with_mass(m_eff);

    cfg.format = get<std::string>(child(doc, "output"), "format", "csv");
    cfg.threads = get<unsigned>(doc, "threads", 1u);
    cfg.out_dir = resolve_out_dir(std::nullopt, doc);

    bool const needs_subcritical = command == Command::spectrum
                                   || command == Command::spectral_lab
                                   || command == Command::shift;
    if (needs_subcritical && cfg.zalpha() >= 1)
    {
        throw SupercriticalError(fmt::format(
            "Z alpha = {} is not below 1; the bound-state and Dirac-sea "
            "constructions assume Z alpha < 1",
            cfg.zalpha()));
    }

    auto& canon = cfg.canonical;
    canon["command"] = std::string(to_string(command));
    canon["constants"] = {{"alpha", alpha},
                          {"m_eff", m_eff},
                          {"electron_compton_fm", compton},
                          {"electron_rest_energy_ev", rest_ev}};
    canon["nucleus"] = {{"kind", std::string(to_string(model.kind()))},
                        {"Z", model.Z()},
                        {"width", model.width()}};

    switch (command)
    {
        case Command::uehling: {
            auto const b = child(doc, "uehling");
            auto& u = cfg.uehling;
            u.r_min = get<double>(b, "r_min", u.r_min);
            u.r_max = get<double>(b, "r_max", u.r_max);
            u.points = get<std::size_t>(b, "points", u.points);
            auto const route = get<std::string>(b, "route", "automatic");
            u.route = route == "fourier"       ? UehlingRoute::fourier
                      : route == "convolution" ? UehlingRoute::convolution
                                               : UehlingRoute::automatic;
            u.switch_radius = get<double>(b, "switch_radius", u.switch_radius);
            u.k_min = get<double>(b, "k_min", u.k_min);
            u.k_max = get<double>(b, "k_max", u.k_max);
            u.k_points = get<std::size_t>(b, "k_points", u.k_points);
            if (u.r_min >= u.r_max)
                fail(child(b, "r_max"), "uehling.r_max must exceed r_min");
            if (u.k_min >= u.k_max)
                fail(child(b, "k_max"), "uehling.k_max must exceed k_min");
            canon["uehling"] = {{"r_min", u.r_min},
                                {"r_max", u.r_max},
                                {"points", u.points},
                                {"route", route},
                                {"switch_radius", u.switch_radius},
                                {"k_min", u.k_min},
                                {"k_max", u.k_max},
                                {"k_points", u.k_points}};
            break;
        }
        case Command::spectrum: {
            auto const b = child(doc, "spectrum");
            auto& s = cfg.spectrum;
            if (auto k = maybe<std::vector<int>>(b, "kappas"))
                s.kappas = *k;
            s.scheme = grid_scheme_from_string(get<std::string>(b, "scheme", "log"));
            s.points = get<std::size_t>(b, "points", s.points);
            s.states = get<std::size_t>(b, "states", s.states);
            s.refine = get<bool>(b, "refine", s.refine);
            s.spinors = get<bool>(b, "spinors", s.spinors);
            double const m = cfg.constants.m_eff();
            s.r_min = get<double>(b, "r_min", 1e-6 / m);
            double const n_top = static_cast<double>(s.states);
            s.r_max = get<double>(
                b, "r_max", 40 * n_top * n_top / (std::max(cfg.zalpha(), 0.05) * m));
            if (s.scheme == GridScheme::log && s.r_min >= s.r_max)
                fail(child(b, "r_max"), "spectrum.r_max must exceed r_min");
            canon["spectrum"] = {{"kappas", s.kappas},
                                 {"scheme", std::string(to_string(s.scheme))},
                                 {"r_min", s.scheme == GridScheme::log ? s.r_min : 0.0},
                                 {"r_max", s.r_max},
                                 {"points", s.points},
                                 {"states", s.states},
                                 {"refine", s.refine},
                                 {"spinors", s.spinors}};
            break;
        }
        case Command::shift: {
            auto& s = cfg.shift;
            if (auto st = child(user_shift, "states"))
            {
                s.states.clear();
                for (auto const& e : st)
                {
                    ShiftState state{e["n"].as<int>(), e["l"].as<int>()};
                    if (state.l >= state.n)
                        fail(e, fmt::format("state n={} l={}: need l < n", state.n, state.l));
                    s.states.push_back(state);
                }
            }
            s.dirac_density = get<bool>(user_shift, "dirac_density", false);
            s.points_per_decade
                = get<std::size_t>(user_shift, "points_per_decade", s.points_per_decade);
            nlohmann::ordered_json states = nlohmann::ordered_json::array();
            for (auto const& st : s.states)
                states.push_back({{"n", st.n}, {"l", st.l}});
            canon["shift"] = {{"preset", s.preset},
                              {"states", states},
                              {"dirac_density", s.dirac_density},
                              {"points_per_decade", s.points_per_decade}};
            break;
        }
        case Command::spectral_lab: {
            auto const b = child(doc, "spectral_lab");
            auto& l = cfg.lab;
            l.kappa = get<int>(b, "kappa", l.kappa);
            l.r_max = get<double>(b, "r_max", l.r_max);
            l.points = get<std::size_t>(b, "points", l.points);
            l.contour_tolerance = get<double>(b, "contour_tolerance", l.contour_tolerance);
            if (auto v = maybe<std::vector<std::size_t>>(b, "hs_points"))
                l.hs_points = *v;
            if (auto v = maybe<std::vector<double>>(b, "hs_zalphas"))
                l.hs_zalphas = *v;
            l.seed = get<std::uint64_t>(b, "seed", l.seed);
            l.q1_pairs = get<std::size_t>(b, "q1_pairs", l.q1_pairs);
            l.q2_triples = get<std::size_t>(b, "q2_triples", l.q2_triples);
            l.momentum_scale = get<double>(b, "momentum_scale", l.momentum_scale);
            if (model.kind() == NuclearKind::point)
                fail(un, "spectral-lab needs an extended nucleus (gaussian or uniform_ball)");
            canon["spectral_lab"] = {{"kappa", l.kappa},
                                     {"grid", grid_json(RadialGrid::uniform(l.r_max, l.points))},
                                     {"contour_tolerance", l.contour_tolerance},
                                     {"hs_points", l.hs_points},
                                     {"hs_zalphas", l.hs_zalphas},
                                     {"seed", l.seed},
                                     {"q1_pairs", l.q1_pairs},
                                     {"q2_triples", l.q2_triples},
                                     {"momentum_scale", l.momentum_scale}};
            break;
        }
        case Command::verify: {
            auto const b = child(doc, "verify");
            auto& v = cfg.verify;
            if (auto o = maybe<std::vector<std::string>>(b, "only"))
                v.only = *o;
            if (auto g = maybe<std::string>(b, "golden"))
                v.golden = *g;
            canon["verify"] = {{"only", v.only}, {"golden", v.golden.string()}};
            break;
        }
    }
    cfg.config_hash = sha256_hex(canon.dump());
    return cfg;
}

std::string sha256_hex(std::string const& text)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(text.data(), text.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 digest failed");
    std::string out;
    out.reserve(2 * len);
    for (unsigned i = 0; i < len; ++i)
        out += fmt::format("{:02x}", digest[i]);
    return out;
}
}  // namespace vacpol::cli
