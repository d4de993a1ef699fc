// Runs every acceptance criterion and prints one line per criterion.
#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "vacpol/golden.hpp"
#include "vacpol/verification.hpp"

int main(int argc, char** argv)
{
    CLI::App app{"vacpol acceptance suite"};
    std::string golden;
    unsigned threads = 1;
    std::vector<std::string> only;
    std::vector<std::string> expect_fail;
    bool verbose = false;
    app.add_option("--golden", golden, "golden values file");
    app.add_option("--threads", threads, "worker threads")->check(CLI::Range(1u, 256u));
    app.add_option("--only", only, "run only these criterion ids");
    app.add_option("--expect-fail", expect_fail,
                   "criteria recorded as unattainable; they must still fail");
    app.add_flag("-v,--verbose", verbose, "print criterion details");
    CLI11_PARSE(app, argc, argv);

    vacpol::VerifyOptions opts;
    opts.golden_path = golden.empty() ? vacpol::default_golden_path() : std::filesystem::path(golden);
    opts.threads = threads;

    std::vector<std::string> ids = only;
    if (ids.empty())
    {
        for (auto const& c : vacpol::criteria())
            ids.push_back(c.id);
    }

    int passed = 0;
    int failed = 0;
    int expected = 0;
    bool ok = true;
    for (auto const& id : ids)
    {
        auto const r = vacpol::run_criterion(id, opts);
        bool const known = std::find(expect_fail.begin(), expect_fail.end(), id)
                           != expect_fail.end();
        std::string note;
        if (!r.passed && known)
            note = "  [expected: recorded as unattainable]";
        else if (r.passed && known)
            note = "  [UNEXPECTED PASS: remove from the unattainable list]";
        fmt::print("{} [{:2}] {:<24} {:<50} {:7.2f} s{}\n",
                   r.passed ? "PASS" : "FAIL",
                   r.number,
                   r.id,
                   r.title,
                   r.seconds,
                   note);
        if (verbose || !r.passed)
        {
            for (auto const& d : r.details)
                fmt::print("         {}\n", d);
        }
        std::cout.flush();
        r.passed ? ++passed : ++failed;
        if (!r.passed && known)
            ++expected;
        ok = ok && (r.passed != known);
    }
    fmt::print("acceptance: {} passed, {} failed ({} recorded as unattainable)\n",
               passed,
               failed,
               expected);
    return ok ? 0 : 1;
}
