#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace vacpol
{
struct GoldenEntry
{
    std::string id;
    double value = 0;
    double rel_tol = 0;
    std::string source;
};

struct GoldenCheck
{
    std::string id;
    double expected = 0;
    double actual = 0;
    double rel_diff = 0;
    double rel_tol = 0;
    bool passed = false;
    std::string error;
};

//! Quantities tracked in the golden file.
std::vector<std::string> golden_ids();

/*!
 * Reference value of a golden quantity, computed by the independent route
 * where one exists (integral form of C, convolution route for extended U,
 * ...) and by the production route otherwise. Used to generate the file.
 */
GoldenEntry golden_reference(std::string const& id);

//! The same quantity by the production route.
double golden_production(std::string const& id);

std::vector<GoldenEntry> load_golden(std::filesystem::path const& path);
std::string golden_json(std::vector<GoldenEntry> const& entries);

std::vector<GoldenCheck> check_golden(std::vector<GoldenEntry> const& entries);

//! $VACPOL_DATA_DIR/golden_values.json, else the source-tree data dir.
std::filesystem::path default_golden_path();
}  // namespace vacpol
