#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace vacpol
{
struct CriterionResult
{
    std::string id;
    int number = 0;
    std::string title;
    bool passed = false;
    //! Measured values behind the verdict, one "name=value" per entry.
    std::vector<std::string> details;
    double seconds = 0;
};

struct VerifyOptions
{
    std::filesystem::path golden_path;
    unsigned threads = 1;
};

struct CriterionInfo
{
    std::string id;
    int number = 0;
    std::string title;
};

//! Acceptance criteria in run order.
std::vector<CriterionInfo> criteria();

//! Run one criterion; unknown ids throw DomainError. Exceptions inside a
//! check are caught and reported as a failure with the message attached.
CriterionResult run_criterion(std::string const& id, VerifyOptions const& options);

std::vector<CriterionResult> run_criteria(std::vector<std::string> const& ids,
                                          VerifyOptions const& options);
}  // namespace vacpol
