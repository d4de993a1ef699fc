#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include <gtest/gtest.h>

#include "vacpol/errors.hpp"
#include "vacpol/golden.hpp"
#include "vacpol/serialize.hpp"

using namespace vacpol;
namespace fs = std::filesystem;

namespace
{
fs::path scratch(std::string const& name)
{
    auto const dir = fs::temp_directory_path() / "vacpol_unit";
    fs::create_directories(dir);
    return dir / name;
}

std::string slurp(fs::path const& p)
{
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}
}  // namespace

TEST(Serialize, ShortestRoundTrip)
{
    for (double v : {0.1, 1.0 / 3, 6.02214076e23, -2.176080190024126e-13, 5e-324})
        EXPECT_EQ(std::strtod(format_double(v).c_str(), nullptr), v);
    EXPECT_EQ(format_double(0.5), "0.5");
    EXPECT_EQ(format_double(std::numeric_limits<double>::quiet_NaN()), "nan");
}

TEST(Serialize, CsvAndJsonCarrySameNumbers)
{
    DataTable t{"demo", {"x", "y"}, {{1.0 / 3, 2.5e-300}, {-4.0, 7.0}}, {{"note", "a"}}};
    Provenance const p{"abc123", {"unit test"}};
    auto const csv = to_csv(t, p);
    auto const json = to_json(t, p);
    EXPECT_NE(csv.find("# config_hash: abc123"), std::string::npos);
    EXPECT_NE(csv.find("x,y\n"), std::string::npos);
    for (auto const& row : t.rows)
    {
        for (double v : row)
        {
            EXPECT_NE(csv.find(format_double(v)), std::string::npos);
            EXPECT_NE(json.find(format_double(v)), std::string::npos);
        }
    }
    EXPECT_NE(json.find("\"config_hash\""), std::string::npos);
}

TEST(Serialize, NonFiniteIsNullInJson)
{
    DataTable t{"n", {"v"}, {{std::numeric_limits<double>::infinity()}}, {}};
    EXPECT_NE(to_json(t, {}).find("null"), std::string::npos);
}

TEST(Serialize, AtomicWriteReplaces)
{
    auto const p = scratch("atomic.txt");
    write_atomic(p, "first");
    write_atomic(p, "second");
    EXPECT_EQ(slurp(p), "second");
    for (auto const& e : fs::directory_iterator(p.parent_path()))
        EXPECT_EQ(e.path().filename().string().find(".tmp"), std::string::npos);
}

TEST(Golden, ShippedFileIsConsistent)
{
    auto const entries = load_golden(default_golden_path());
    EXPECT_EQ(entries.size(), golden_ids().size());
    for (auto const& c : check_golden(entries))
        EXPECT_TRUE(c.passed) << c.id << " " << c.rel_diff << " " << c.error;
}

TEST(Golden, TamperedValueIsNamed)
{
    auto entries = load_golden(default_golden_path());
    ASSERT_FALSE(entries.empty());
    entries[0].value *= 1 + 1e-6;
    auto const p = scratch("golden_tampered.json");
    write_atomic(p, golden_json(entries));
    auto const checks = check_golden(load_golden(p));
    EXPECT_FALSE(checks[0].passed);
    EXPECT_EQ(checks[0].id, entries[0].id);
    for (std::size_t i = 1; i < checks.size(); ++i)
        EXPECT_TRUE(checks[i].passed);
}

TEST(Golden, MalformedFileRejected)
{
    auto const p = scratch("golden_bad.json");
    write_atomic(p, "{\"format\": 1, \"entries\": [{\"id\": 3}]}");
    EXPECT_THROW(load_golden(p), Error);
}
