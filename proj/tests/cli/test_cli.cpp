// End-to-end runs of the vacpol executable.
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

namespace fs = std::filesystem;

namespace
{
struct Run
{
    int status = -1;
    std::string output;
};

Run vacpol(std::string const& args, std::string const& env = {})
{
    std::string const cmd = env + (env.empty() ? "" : " ") + VACPOL_EXE + " " + args + " 2>&1";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return r;
    std::array<char, 4096> buf{};
    while (std::fgets(buf.data(), buf.size(), pipe))
        r.output += buf.data();
    int const raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

fs::path workdir(std::string const& name)
{
    auto const d = fs::path(VACPOL_TEST_WORKDIR) / name;
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
}

std::string slurp(fs::path const& p)
{
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

//! Numeric rows of a vacpol CSV file (header lines and column row skipped).
std::vector<std::vector<double>> csv_rows(fs::path const& p)
{
    std::vector<std::vector<double>> rows;
    std::istringstream in(slurp(p));
    std::string line;
    bool header = true;
    while (std::getline(in, line))
    {
        if (line.empty() || line[0] == '#')
            continue;
        if (header)
        {
            header = false;
            continue;
        }
        std::vector<double> row;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ','))
            row.push_back(std::stod(cell));
        rows.push_back(row);
    }
    return rows;
}

std::string without_hash(std::string text)
{
    std::istringstream in(text);
    std::string line, out;
    while (std::getline(in, line))
    {
        if (line.find("config_hash") == std::string::npos && line.find("preset") == std::string::npos)
            out += line + "\n";
    }
    return out;
}
}  // namespace

TEST(Cli, HelpExitsZero)
{
    auto const r = vacpol("--help");
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.output.find("spectral-lab"), std::string::npos);
}

TEST(Cli, MissingSubcommandIsConfigError)
{
    EXPECT_EQ(vacpol("").status, 1);
}

TEST(Cli, UehlingDefaultSmallRadius)
{
    auto const d = workdir("uehling_default");
    auto const r = vacpol("uehling --out " + d.string());
    ASSERT_EQ(r.status, 0) << r.output;
    auto const rows = csv_rows(d / "uehling_position.csv");
    ASSERT_FALSE(rows.empty());
    double const x = rows[0][0];
    double const law = -(2 / (3 * M_PI * x)) * (std::log(x) + 5.0 / 6 + 0.57721566490153286);
    EXPECT_NEAR(rows[0][1] / law, 1.0, 1e-3);
    auto const text = slurp(d / "uehling_position.csv");
    EXPECT_NE(text.find("# config_hash: "), std::string::npos);
    EXPECT_NE(text.find("# provenance: "), std::string::npos);
    EXPECT_NE(text.find("r,value,error_estimate"), std::string::npos);
}

TEST(Cli, DoublingChargeDoublesOutputs)
{
    auto const a = workdir("z1");
    auto const b = workdir("z2");
    std::string const common = " uehling --kind gaussian --width 0.5 --points 9 --k-points 9";
    ASSERT_EQ(vacpol("--out " + a.string() + common + " --Z 1").status, 0);
    ASSERT_EQ(vacpol("--out " + b.string() + common + " --Z 2").status, 0);
    auto const u1 = csv_rows(a / "uehling_position.csv");
    auto const u2 = csv_rows(b / "uehling_position.csv");
    ASSERT_EQ(u1.size(), u2.size());
    for (std::size_t i = 0; i < u1.size(); ++i)
        EXPECT_EQ(u2[i][1], 2 * u1[i][1]);
    auto const k1 = csv_rows(a / "uehling_kernel.csv");
    auto const k2 = csv_rows(b / "uehling_kernel.csv");
    for (std::size_t i = 0; i < k1.size(); ++i)
    {
        EXPECT_EQ(k2[i][1], k1[i][1]);  // C(k) does not depend on the nucleus
        EXPECT_EQ(k2[i][2], 2 * k1[i][2]);
        EXPECT_EQ(k2[i][3], 2 * k1[i][3]);
    }
}

TEST(Cli, JsonAndCsvCarrySameNumbers)
{
    auto const a = workdir("fmt_csv");
    auto const b = workdir("fmt_json");
    ASSERT_EQ(vacpol("uehling --points 7 --k-points 5 --out " + a.string()).status, 0);
    ASSERT_EQ(vacpol("uehling --points 7 --k-points 5 --format json --out " + b.string()).status, 0);
    auto const csv = csv_rows(a / "uehling_position.csv");
    auto const json = nlohmann::json::parse(slurp(b / "uehling_position.json"));
    ASSERT_EQ(json["rows"].size(), csv.size());
    for (std::size_t i = 0; i < csv.size(); ++i)
        for (std::size_t j = 0; j < csv[i].size(); ++j)
            EXPECT_EQ(json["rows"][i][j].get<double>(), csv[i][j]);
    EXPECT_EQ(json["columns"], (nlohmann::json{"r", "value", "error_estimate"}));
    auto const hash_line = "# config_hash: " + json["provenance"]["config_hash"].get<std::string>();
    EXPECT_NE(slurp(a / "uehling_position.csv").find(hash_line), std::string::npos);
}

TEST(Cli, ByteIdenticalAcrossThreadCounts)
{
    struct Case
    {
        std::string args;
        std::vector<std::string> files;
    };
    std::vector<Case> const cases{
        {"uehling --kind gaussian --width 0.3 --points 12 --k-points 8",
         {"uehling_position.csv", "uehling_kernel.csv"}},
        {"spectrum --zalpha 0.4 --points 600 --kappa -1 --kappa 1 --kappa -2",
         {"spectrum.json", "spectrum_comparison.csv"}},
        {"shift --kind gaussian --width-fm 1.0", {"shift.csv"}},
    };
    int idx = 0;
    for (auto const& c : cases)
    {
        auto const a = workdir("det_a" + std::to_string(idx));
        auto const b = workdir("det_b" + std::to_string(idx++));
        ASSERT_EQ(vacpol("--threads 1 --out " + a.string() + " " + c.args).status, 0);
        ASSERT_EQ(vacpol("--threads 3 --out " + b.string() + " " + c.args).status, 0);
        for (auto const& f : c.files)
            EXPECT_EQ(slurp(a / f), slurp(b / f)) << c.args << " " << f;
    }
}

TEST(Cli, OutputDirectoryPrecedence)
{
    auto const env_dir = workdir("env_out");
    auto const flag_dir = workdir("flag_out");
    std::string const env = "VACPOL_OUT_DIR=" + env_dir.string();
    ASSERT_EQ(vacpol("uehling --points 3 --k-points 3", env).status, 0);
    EXPECT_TRUE(fs::exists(env_dir / "uehling_position.csv"));
    ASSERT_EQ(vacpol("uehling --points 3 --k-points 3 --out " + flag_dir.string(), env).status, 0);
    EXPECT_TRUE(fs::exists(flag_dir / "uehling_position.csv"));
}

TEST(Cli, UnknownKeyIsLinePrecise)
{
    auto const d = workdir("badcfg");
    std::ofstream(d / "c.yaml") << "nucleus:\n  kind: point\nuehling:\n  radii: 3\n";
    auto const r = vacpol("uehling --config " + (d / "c.yaml").string() + " --out " + (d / "out").string());
    EXPECT_EQ(r.status, 1);
    EXPECT_NE(r.output.find("c.yaml:4:3"), std::string::npos) << r.output;
    EXPECT_FALSE(fs::exists(d / "out"));
}

TEST(Cli, JsonConfigAccepted)
{
    auto const d = workdir("jsoncfg");
    std::ofstream(d / "c.json") << R"({"nucleus": {"kind": "uniform_ball", "Z": 2, "width": 0.1},
 "uehling": {"points": 4, "k_points": 3}})";
    auto const r = vacpol("uehling --config " + (d / "c.json").string() + " --out " + d.string());
    EXPECT_EQ(r.status, 0) << r.output;
    EXPECT_NE(slurp(d / "uehling_position.csv").find("uniform_ball"), std::string::npos);
}

TEST(Cli, SupercriticalRefused)
{
    auto const r = vacpol("spectrum --zalpha 1.05 --out " + workdir("super").string());
    EXPECT_EQ(r.status, 1);
    EXPECT_NE(r.output.find("Z alpha < 1"), std::string::npos) << r.output;
}

TEST(Cli, ZeroCouplingHasNoGapStates)
{
    auto const d = workdir("za0");
    ASSERT_EQ(vacpol("spectrum --zalpha 0 --points 400 --out " + d.string()).status, 0);
    auto const j = nlohmann::json::parse(slurp(d / "spectrum.json"));
    for (auto const& c : j["channels"])
        EXPECT_TRUE(c["gap_states"].empty());
}

TEST(Cli, ExtendedAboveCoulombWithConvergenceColumn)
{
    auto const d = workdir("spec_refine");
    auto const r = vacpol("spectrum --zalpha 0.5 --kappa -1 --points 800 --refine --out " + d.string());
    ASSERT_EQ(r.status, 0) << r.output;
    auto const text = slurp(d / "spectrum_comparison.csv");
    EXPECT_NE(text.find("convergence"), std::string::npos);
    auto const rows = csv_rows(d / "spectrum_comparison.csv");
    ASSERT_FALSE(rows.empty());
    for (auto const& row : rows)
    {
        EXPECT_GE(row[4], 0.0);   // extended minus Coulomb
        EXPECT_LT(row[7], 1e-4);  // grid convergence
    }
}

TEST(Cli, ElectronicPresetTwoS)
{
    auto const d = workdir("h2s");
    ASSERT_EQ(vacpol("shift --preset hydrogen-2s2p --out " + d.string()).status, 0);
    auto const rows = csv_rows(d / "shift.csv");
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(rows[1][0], 2);
    EXPECT_EQ(rows[1][1], 0);
    EXPECT_NEAR(rows[1][2] / -2.196e-13, 1.0, 0.02);
    EXPECT_LT(std::abs(rows[2][2]), 1e-5 * std::abs(rows[1][2]));
}

TEST(Cli, PWaveOnlyIsNearZero)
{
    auto const d = workdir("ponly");
    std::ofstream(d / "c.yaml") << "shift:\n  preset: hydrogen-2s2p\n  states:\n    - {n: 2, l: 1}\n    - {n: 3, l: 1}\n";
    ASSERT_EQ(vacpol("shift --config " + (d / "c.yaml").string() + " --out " + d.string()).status, 0);
    for (auto const& row : csv_rows(d / "shift.csv"))
    {
        EXPECT_EQ(row[5], 0.0);
        EXPECT_LT(std::abs(row[2]), 1e-17);
    }
}

TEST(Cli, MuonicPresetWithElectronMassMatchesElectronic)
{
    auto const a = workdir("mu_e");
    auto const b = workdir("el");
    ASSERT_EQ(vacpol("shift --preset muonic-hydrogen --m-eff 1 --out " + a.string()).status, 0);
    ASSERT_EQ(vacpol("shift --preset hydrogen-2s2p --out " + b.string()).status, 0);
    EXPECT_EQ(without_hash(slurp(a / "shift.csv")), without_hash(slurp(b / "shift.csv")));
    EXPECT_EQ(csv_rows(a / "shift.csv"), csv_rows(b / "shift.csv"));
}

TEST(Cli, VerifySingleCriterion)
{
    auto const d = workdir("verify_one");
    auto const r = vacpol("verify --only c-dual-form --out " + d.string());
    EXPECT_EQ(r.status, 0) << r.output;
    EXPECT_NE(r.output.find("PASS [ 1] c-dual-form"), std::string::npos);
    auto const j = nlohmann::json::parse(slurp(d / "verify.json"));
    EXPECT_EQ(j["criteria"].size(), 1u);
    EXPECT_TRUE(j["all_passed"].get<bool>());
}

TEST(Cli, VerifyUnknownCriterion)
{
    EXPECT_EQ(vacpol("verify --only no-such-check --out " + workdir("verify_unknown").string()).status, 1);
}

TEST(Cli, TamperedGoldenFileFailsByName)
{
    auto const d = workdir("tamper");
    auto text = slurp(fs::path(VACPOL_DATA_DIR) / "golden_values.json");
    auto j = nlohmann::json::parse(text);
    j["entries"][0]["value"] = j["entries"][0]["value"].get<double>() * (1 + 1e-6);
    std::string const id = j["entries"][0]["id"];
    std::ofstream(d / "golden.json") << j.dump(2);
    auto const r = vacpol("verify --only golden-values --golden " + (d / "golden.json").string()
                          + " --out " + d.string());
    EXPECT_EQ(r.status, 3);
    EXPECT_NE(r.output.find("FAIL [15] golden-values"), std::string::npos) << r.output;
    EXPECT_NE(r.output.find(id), std::string::npos) << r.output;
    EXPECT_NE(r.output.find("verification failed: golden-values"), std::string::npos);
}

TEST(Cli, SpectralLabSmall)
{
    auto const d = workdir("lab");
    std::ofstream(d / "c.yaml") << "spectral_lab:\n  points: 100\n  r_max: 10\n  hs_points: [100, 200]\n"
                                   "  hs_zalphas: [0.1]\n  q1_pairs: 3\n  q2_triples: 2\n";
    auto const r = vacpol("spectral-lab --config " + (d / "c.yaml").string() + " --out " + d.string());
    ASSERT_EQ(r.status, 0) << r.output;
    for (auto f : {"spectral_lab_contour.csv", "spectral_lab_hs_norm.csv", "spectral_lab_q1.csv",
                   "spectral_lab_q2.csv"})
        EXPECT_TRUE(fs::exists(d / f)) << f;
    for (auto const& row : csv_rows(d / "spectral_lab_q1.csv"))
        EXPECT_LT(row[9], 1e-12);
}

TEST(Cli, PointNucleusRejectedBySpectralLab)
{
    EXPECT_EQ(vacpol("spectral-lab --kind point --out " + workdir("lab_point").string()).status, 1);
}
