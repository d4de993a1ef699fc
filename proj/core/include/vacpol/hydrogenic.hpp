#pragma once

namespace vacpol
{
/*!
 * Nonrelativistic hydrogenic bound state with Bohr scale 1/coupling,
 * coupling = Z alpha m.
 */
class HydrogenicState
{
  public:
    HydrogenicState(int n, int l, double coupling);

    int n() const noexcept { return n_; }
    int l() const noexcept { return l_; }
    double coupling() const noexcept { return beta_; }

    //! Radial function R_nl(r), normalized by int r^2 R^2 dr = 1.
    double radial(double r) const;
    //! |psi(r)|^2 = R_nl(r)^2 / 4 pi (angular average for l > 0).
    double density(double r) const;
    //! Radius beyond which the radial probability is below \c tail.
    double support_radius(double tail = 1e-12) const;

  private:
    int n_;
    int l_;
    double beta_;
    double norm_;
};

//! R_nl(r) for coupling Z alpha m; throws DomainError for invalid (n, l).
double hydrogenic_radial(int n, int l, double coupling, double r);
}  // namespace vacpol
