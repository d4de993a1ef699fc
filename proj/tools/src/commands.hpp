#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "config.hpp"

namespace vacpol::cli
{
//! Exit statuses of the command-line tool.
namespace exit_code
{
inline constexpr int ok = 0;
inline constexpr int config = 1;
inline constexpr int numerical = 2;
inline constexpr int verification = 3;
}  // namespace exit_code

struct CommandOutcome
{
    std::vector<std::filesystem::path> files;
    int status = exit_code::ok;
};

/*!
 * Run one subcommand. Human-readable progress goes to \c out; files are
 * only written once every result has been computed.
 */
CommandOutcome run_command(RunConfig const& config, std::ostream& out);
}  // namespace vacpol::cli
