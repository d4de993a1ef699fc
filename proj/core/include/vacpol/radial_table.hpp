#pragma once

#include <string>
#include <vector>

namespace vacpol
{
//---------------------------------------------------------------------------//
/*!
 * Samples of a radial function with per-point error estimates.
 *
 * Radii are strictly increasing and positive; \c meta records which formula
 * and quadrature route produced the values.
 */
struct RadialTable
{
    std::vector<double> r;
    std::vector<double> values;
    std::vector<double> abs_error;
    std::string meta;

    std::size_t size() const noexcept { return r.size(); }

    //! Throws DomainError if the invariants do not hold.
    void validate() const;

    /*!
     * Interpolate inside [r.front(), r.back()].
     *
     * Monotone cubic (PCHIP) in log r; strictly positive neighbourhoods are
     * interpolated in log value so exponential tails are reproduced.
     */
    double interpolate(double radius) const;
};

//! Logarithmically spaced radii, both ends included.
std::vector<double> log_spaced(double lo, double hi, std::size_t count);
}  // namespace vacpol
