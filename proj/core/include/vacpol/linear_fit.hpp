#pragma once

#include <span>

namespace vacpol
{
//! Ordinary least-squares line y = slope x + intercept.
struct LinearFit
{
    double slope = 0;
    double intercept = 0;
    double r_squared = 0;
};

LinearFit linear_fit(std::span<double const> x, std::span<double const> y);
}  // namespace vacpol
