#include "vacpol/constants.hpp"

#include <string>

#include "vacpol/errors.hpp"

namespace vacpol
{
Constants::Constants(double alpha,
                     double m_eff,
                     double electron_compton_fm,
                     double electron_rest_energy_ev)
    : alpha_(alpha)
    , m_eff_(m_eff)
    , compton_fm_(electron_compton_fm)
    , rest_ev_(electron_rest_energy_ev)
{
    if (!(alpha > 0 && alpha < 1))
    {
        throw DomainError("alpha must lie in (0, 1), got "
                          + std::to_string(alpha));
    }
    if (!(m_eff > 0))
    {
        throw DomainError("m_eff must be positive, got "
                          + std::to_string(m_eff));
    }
    if (!(electron_compton_fm > 0) || !(electron_rest_energy_ev > 0))
    {
        throw DomainError("unit conversion constants must be positive");
    }
}

Constants Constants::with_mass(double m_eff) const
{
    return Constants(alpha_, m_eff, compton_fm_, rest_ev_);
}

Constants Constants::with_alpha(double alpha) const
{
    return Constants(alpha, m_eff_, compton_fm_, rest_ev_);
}

double reduced_mass(double particle, double nucleus)
{
    if (!(particle > 0) || !(nucleus > 0))
    {
        throw DomainError("masses must be positive");
    }
    return particle * nucleus / (particle + nucleus);
}

double fm_to_natural(double length_fm, Constants const& constants)
{
    if (!(length_fm >= 0))
    {
        throw DomainError("length in fm must be non-negative, got "
                          + std::to_string(length_fm));
    }
    return length_fm / constants.electron_compton_fm();
}

double to_ev(double energy, Constants const& constants)
{
    return energy * constants.electron_rest_energy_ev();
}
}  // namespace vacpol
