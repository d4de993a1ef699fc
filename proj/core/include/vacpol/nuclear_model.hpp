#pragma once

#include <string>
#include <string_view>

#include "vacpol/constants.hpp"

namespace vacpol
{
enum class NuclearKind
{
    gaussian,
    point,
    uniform_ball,
};

std::string_view to_string(NuclearKind kind);
NuclearKind nuclear_kind_from_string(std::string_view name);

//---------------------------------------------------------------------------//
/*!
 * Spherically symmetric nuclear charge distribution with total charge Z.
 *
 * The width is the Gaussian standard deviation a or the ball radius R, in
 * natural units; point nuclei have no width.
 */
class NuclearModel
{
  public:
    static NuclearModel gaussian(double Z, double a);
    static NuclearModel point(double Z);
    static NuclearModel uniform_ball(double Z, double radius);
    //! Build from a width in femtometers.
    static NuclearModel from_fm(NuclearKind kind,
                                double Z,
                                double width_fm,
                                Constants const& constants);

    NuclearKind kind() const noexcept { return kind_; }
    double Z() const noexcept { return Z_; }
    double width() const noexcept { return width_; }

    //! Same shape with a different total charge.
    NuclearModel with_charge(double Z) const;

    std::string describe() const;

  private:
    NuclearModel(NuclearKind kind, double Z, double width);

    NuclearKind kind_;
    double Z_;
    double width_;
};

//! Charge density n(r); point nuclei throw UnsupportedOperation.
double density(NuclearModel const& model, double r);

//! Unitary Fourier transform n_hat(k), with n_hat(0) = Z (2 pi)^{-3/2}.
double density_fourier(NuclearModel const& model, double k);

//! Electrostatic potential phi = |.|^{-1} * n.
double potential(NuclearModel const& model, double r);

//! phi_hat(k) = 4 pi n_hat(k) / k^2; k = 0 throws SingularityError.
double potential_fourier(NuclearModel const& model, double k);
}  // namespace vacpol
