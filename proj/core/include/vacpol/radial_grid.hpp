#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace vacpol
{
enum class GridScheme
{
    uniform,
    log,
};

std::string_view to_string(GridScheme scheme);
GridScheme grid_scheme_from_string(std::string_view name);

/*!
 * Staggered radial grid for the two-component radial Dirac system.
 *
 * With a mapping r(u) and step h, upper-component nodes sit at u_i = i h
 * (i = 1..n) and lower-component midpoints at u_i - h/2. The box edge r_max
 * is at u = (n + 1/2) h. For the uniform scheme r = u; for the log scheme
 * r = r_min e^u, so r_min plays the role of the origin.
 */
class RadialGrid
{
  public:
    static RadialGrid uniform(double r_max, std::size_t n_points);
    static RadialGrid log(double r_min, double r_max, std::size_t n_points);

    GridScheme scheme() const noexcept { return scheme_; }
    double r_min() const noexcept { return r_min_; }
    double r_max() const noexcept { return r_max_; }
    std::size_t n_points() const noexcept { return nodes_.size(); }
    //! Step in the mapped coordinate u.
    double step() const noexcept { return h_; }

    //! Radius at u = 0 (0 for uniform grids, r_min for log grids).
    double origin() const noexcept;

    std::vector<double> const& nodes() const noexcept { return nodes_; }
    std::vector<double> const& midpoints() const noexcept { return mids_; }
    //! Quadrature weights r'(u) h at nodes and midpoints.
    std::vector<double> const& node_weights() const noexcept { return wn_; }
    std::vector<double> const& mid_weights() const noexcept { return wm_; }

    //! Same scheme and spacing with the box enlarged by \c factor.
    RadialGrid enlarged(double factor) const;
    //! Same box with \c factor times as many points.
    RadialGrid refined(std::size_t factor) const;

    std::string describe() const;

  private:
    RadialGrid(GridScheme scheme, double r_min, double r_max, std::size_t n);

    GridScheme scheme_;
    double r_min_;
    double r_max_;
    double h_;
    std::vector<double> nodes_;
    std::vector<double> mids_;
    std::vector<double> wn_;
    std::vector<double> wm_;
};
}  // namespace vacpol
