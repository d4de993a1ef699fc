#pragma once

#include <numbers>

namespace vacpol
{
//---------------------------------------------------------------------------//
/*!
 * Physical constants and the unit system.
 *
 * Natural units throughout: hbar = c = m_e = 1. Energies are in m_e c^2 and
 * lengths in reduced electron Compton wavelengths. The particle mass
 * \c m_eff (in electron masses) is the mass of the bound lepton; the vacuum
 * loop always carries the electron mass.
 *
 * Instances are immutable; derive variants with the \c with_* helpers.
 */
class Constants
{
  public:
    static constexpr double default_alpha = 7.2973525693e-3;
    static constexpr double default_electron_compton_fm = 386.15926796;
    static constexpr double default_electron_rest_energy_ev = 510998.95;
    static constexpr double euler_gamma = std::numbers::egamma;

    //! CODATA defaults with m_eff = 1.
    Constants() = default;

    Constants(double alpha,
              double m_eff,
              double electron_compton_fm = default_electron_compton_fm,
              double electron_rest_energy_ev = default_electron_rest_energy_ev);

    double alpha() const noexcept { return alpha_; }
    double m_eff() const noexcept { return m_eff_; }
    double electron_compton_fm() const noexcept { return compton_fm_; }
    double electron_rest_energy_ev() const noexcept { return rest_ev_; }

    Constants with_mass(double m_eff) const;
    Constants with_alpha(double alpha) const;

  private:
    double alpha_ = default_alpha;
    double m_eff_ = 1.0;
    double compton_fm_ = default_electron_compton_fm;
    double rest_ev_ = default_electron_rest_energy_ev;
};

//! Particle masses in electron masses.
namespace masses
{
inline constexpr double muon = 206.7682830;
inline constexpr double proton = 1836.15267343;
inline constexpr double atomic_mass_unit = 1822.888486209;
}  // namespace masses

//! Reduced mass of a two-body system, both masses in the same unit.
double reduced_mass(double particle, double nucleus);

//! Convert a length in femtometers to natural (Compton) units.
double fm_to_natural(double length_fm, Constants const& constants);

//! Convert an energy in m_e c^2 to electron-volts.
double to_ev(double energy, Constants const& constants);
}  // namespace vacpol
