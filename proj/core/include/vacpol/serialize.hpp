#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "vacpol/polarization_kernel.hpp"
#include "vacpol/radial_dirac.hpp"
#include "vacpol/radial_table.hpp"
#include "vacpol/shift_engine.hpp"

namespace vacpol
{
//! Embedded in every output file.
struct Provenance
{
    std::string config_hash;
    //! Which formula or oracle produced each column.
    std::vector<std::string> sources;
};

//! Named numeric table with string metadata.
struct DataTable
{
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<std::pair<std::string, std::string>> meta;
};

//! Shortest text that reads back as the same double ("nan", "inf" allowed).
std::string format_double(double value);

/*!
 * CSV with '#'-prefixed header lines for provenance and metadata, then
 * one header row of column names.
 */
std::string to_csv(DataTable const& table, Provenance const& provenance);

//! {"name", "provenance", "meta", "columns", "rows"}; non-finite -> null.
std::string to_json(DataTable const& table, Provenance const& provenance);

DataTable radial_table_data(RadialTable const& table, std::string name);
DataTable kernel_table_data(std::vector<KernelEval> const& rows);
DataTable shift_table_data(ShiftReport const& report);
std::string spectrum_json(std::vector<ChannelSpectrum> const& spectra,
                          Provenance const& provenance,
                          bool include_spinors = false);

//! Write to a temporary file next to \c path, then rename over it.
void write_atomic(std::filesystem::path const& path, std::string const& content);
}  // namespace vacpol
