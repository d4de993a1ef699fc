#include "vacpol/dirac_algebra.hpp"

#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "vacpol/errors.hpp"

namespace vacpol
{
namespace
{
constexpr double pi = std::numbers::pi;
using cplx = std::complex<double>;
}  // namespace

DiracMatrices const& DiracMatrices::standard()
{
    static DiracMatrices const m = [] {
        DiracMatrices d;
        cplx const I(0, 1);
        Eigen::Matrix2cd sx, sy, sz;
        sx << 0, 1, 1, 0;
        sy << 0, -I, I, 0;
        sz << 1, 0, 0, -1;
        d.beta = Eigen::Matrix4cd::Zero();
        d.beta.diagonal() << 1, 1, -1, -1;
        Eigen::Matrix2cd const* s[3] = {&sx, &sy, &sz};
        for (int i = 0; i < 3; ++i)
        {
            d.alpha[i] = Eigen::Matrix4cd::Zero();
            d.alpha[i].topRightCorner<2, 2>() = *s[i];
            d.alpha[i].bottomLeftCorner<2, 2>() = *s[i];
        }
        return d;
    }();
    return m;
}

double free_energy(Vec3 const& p)
{
    return std::sqrt(p.squaredNorm() + 1);
}

Eigen::Matrix4cd free_symbol(Vec3 const& p, double eta)
{
    auto const& d = DiracMatrices::standard();
    Eigen::Matrix4cd m = d.beta;
    for (int i = 0; i < 3; ++i)
    {
        m += p[i] * d.alpha[i];
    }
    m.diagonal().array() -= cplx(0, eta);
    return m;
}

std::complex<double> q1_trace_kernel(Vec3 const& p, Vec3 const& q, double phi_hat)
{
    double const ep = free_energy(p);
    double const eq = free_energy(q);
    double const num = -((p - q).squaredNorm() + p.cross(q).squaredNorm())
                       / (p.dot(q) + 1 + ep * eq);
    double const pre = 1 / (std::sqrt(2.0) * std::pow(pi, 1.5));
    return {pre * phi_hat * num / (ep * eq * (ep + eq)), 0.0};
}

std::complex<double> q1_trace_kernel(Vec3 const& p,
                                     Vec3 const& q,
                                     NuclearModel const& model)
{
    double const k = (p - q).norm();
    return q1_trace_kernel(p, q, potential_fourier(model, k));
}

std::complex<double> q1_trace_quadrature(Vec3 const& p,
                                         Vec3 const& q,
                                         double phi_hat,
                                         double rel_tol)
{
    double const p2 = p.squaredNorm() + 1;
    double const q2 = q.squaredNorm() + 1;
    auto trace_at = [&](double eta) {
        Eigen::Matrix4cd const prod = free_symbol(p, eta) * free_symbol(q, eta);
        return prod.trace() / ((p2 + eta * eta) * (q2 + eta * eta));
    };
    using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
    double err_re = 0, err_im = 0;
    // Split at the energy scales so both poles are resolved.
    double const scales[] = {std::atan(std::sqrt(std::min(p2, q2))),
                             std::atan(std::sqrt(std::max(p2, q2)))};
    double const pts[] = {-pi / 2, -scales[1], -scales[0], 0.0,
                          scales[0], scales[1], pi / 2};
    double re = 0, im = 0;
    for (int i = 0; i + 1 < 7; ++i)
    {
        if (!(pts[i + 1] > pts[i]))
            continue;
        double e = 0;
        re += GK::integrate(
            [&](double th) {
                double const c = std::cos(th);
                return trace_at(std::tan(th)).real() / (c * c);
            },
            pts[i], pts[i + 1], 15, rel_tol, &e);
        err_re += e;
        im += GK::integrate(
            [&](double th) {
                double const c = std::cos(th);
                return trace_at(std::tan(th)).imag() / (c * c);
            },
            pts[i], pts[i + 1], 15, rel_tol, &e);
        err_im += e;
    }
    if (err_re > 1e3 * rel_tol * std::max(std::abs(re), 1e-300))
    {
        throw QuadratureError("eta quadrature of tr Q1 did not converge",
                              re, err_re);
    }
    double const pre = std::pow(2 * pi, -2.5) * phi_hat;
    return {pre * re, pre * im};
}

Q2Cancellation q2_density_cancellation(Vec3 const& p1,
                                       Vec3 const& p2,
                                       Vec3 const& p3,
                                       double phi12,
                                       double phi23)
{
    using Rule = boost::math::quadrature::gauss<double, 64>;
    auto const& x = Rule::abscissa();
    auto const& w = Rule::weights();
    auto resolvent = [](Vec3 const& p, double eta) {
        return Eigen::Matrix4cd(free_symbol(p, eta)
                                / (p.squaredNorm() + 1 + eta * eta));
    };
    auto term = [&](double theta) {
        double const eta = std::tan(theta);
        double const c = std::cos(theta);
        Eigen::Matrix4cd const chain = resolvent(p1, eta) * phi12
                                       * resolvent(p2, eta) * phi23
                                       * resolvent(p3, eta);
        return chain.trace() / (c * c);
    };
    Q2Cancellation out;
    cplx total(0, 0), half(0, 0);
    for (std::size_t i = 0; i < x.size(); ++i)
    {
        double const wt = w[i] * pi / 2;
        if (x[i] == 0)
        {
            cplx const t0 = wt * term(0.0);
            total += t0;
            out.term_scale = std::max(out.term_scale, std::abs(t0));
            out.nodes += 1;
            continue;
        }
        double const th = x[i] * pi / 2;
        cplx const plus = wt * term(th);
        cplx const minus = wt * term(-th);
        total += plus + minus;
        half += plus;
        out.term_scale
            = std::max({out.term_scale, std::abs(plus), std::abs(minus)});
        out.nodes += 2;
    }
    out.residual = std::abs(total);
    out.control = std::abs(half);
    return out;
}

Q2Cancellation q2_density_cancellation(Vec3 const& p1,
                                       Vec3 const& p2,
                                       Vec3 const& p3,
                                       NuclearModel const& model)
{
    return q2_density_cancellation(p1,
                                   p2,
                                   p3,
                                   potential_fourier(model, (p1 - p2).norm()),
                                   potential_fourier(model, (p2 - p3).norm()));
}
}  // namespace vacpol
