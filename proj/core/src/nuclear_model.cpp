#include "vacpol/nuclear_model.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "vacpol/errors.hpp"

namespace vacpol
{
namespace
{
constexpr double pi = std::numbers::pi;
// (2 pi)^{-3/2}
double const unitary_norm = std::pow(2 * pi, -1.5);

// 3 (sin x - x cos x) / x^3, the uniform ball form factor.
double ball_form_factor(double x)
{
    if (std::abs(x) < 0.05)
    {
        double const x2 = x * x;
        return 1 - x2 / 10 * (1 - x2 / 28 * (1 - x2 / 54 * (1 - x2 / 88)));
    }
    return 3 * (std::sin(x) - x * std::cos(x)) / (x * x * x);
}
}  // namespace

std::string_view to_string(NuclearKind kind)
{
    switch (kind)
    {
        case NuclearKind::gaussian:
            return "gaussian";
        case NuclearKind::point:
            return "point";
        case NuclearKind::uniform_ball:
            return "uniform_ball";
    }
    return "unknown";
}

NuclearKind nuclear_kind_from_string(std::string_view name)
{
    if (name == "gaussian")
        return NuclearKind::gaussian;
    if (name == "point")
        return NuclearKind::point;
    if (name == "uniform_ball")
        return NuclearKind::uniform_ball;
    throw DomainError("unknown nuclear model kind '" + std::string(name) + "'");
}

NuclearModel::NuclearModel(NuclearKind kind, double Z, double width)
    : kind_(kind), Z_(Z), width_(width)
{
    if (!(Z >= 0) || !std::isfinite(Z))
    {
        throw DomainError("nuclear charge Z must be non-negative");
    }
    if (kind != NuclearKind::point && !(width > 0 && std::isfinite(width)))
    {
        throw DomainError("extended nuclear models need a positive width");
    }
}

NuclearModel NuclearModel::gaussian(double Z, double a)
{
    return NuclearModel(NuclearKind::gaussian, Z, a);
}

NuclearModel NuclearModel::point(double Z)
{
    return NuclearModel(NuclearKind::point, Z, 0.0);
}

NuclearModel NuclearModel::uniform_ball(double Z, double radius)
{
    return NuclearModel(NuclearKind::uniform_ball, Z, radius);
}

NuclearModel NuclearModel::from_fm(NuclearKind kind,
                                   double Z,
                                   double width_fm,
                                   Constants const& constants)
{
    double const width
        = kind == NuclearKind::point ? 0.0 : fm_to_natural(width_fm, constants);
    return NuclearModel(kind, Z, width);
}

NuclearModel NuclearModel::with_charge(double Z) const
{
    return NuclearModel(kind_, Z, width_);
}

std::string NuclearModel::describe() const
{
    std::ostringstream os;
    os.precision(17);
    os << to_string(kind_) << "(Z=" << Z_;
    if (kind_ != NuclearKind::point)
    {
        os << ", width=" << width_;
    }
    os << ")";
    return os.str();
}

double density(NuclearModel const& model, double r)
{
    if (!(r >= 0))
    {
        throw DomainError("density needs r >= 0");
    }
    double const Z = model.Z();
    double const w = model.width();
    switch (model.kind())
    {
        case NuclearKind::gaussian:
            return Z * std::pow(2 * pi * w * w, -1.5)
                   * std::exp(-r * r / (2 * w * w));
        case NuclearKind::uniform_ball:
            return r <= w ? 3 * Z / (4 * pi * w * w * w) : 0.0;
        case NuclearKind::point:
            break;
    }
    throw UnsupportedOperation(
        "a point nucleus has no pointwise density (it is Z delta(x))");
}

double density_fourier(NuclearModel const& model, double k)
{
    if (!(k >= 0))
    {
        throw DomainError("density_fourier needs k >= 0");
    }
    double const base = unitary_norm * model.Z();
    double const w = model.width();
    switch (model.kind())
    {
        case NuclearKind::gaussian:
            return base * std::exp(-0.5 * w * w * k * k);
        case NuclearKind::uniform_ball:
            return base * ball_form_factor(k * w);
        case NuclearKind::point:
            return base;
    }
    return base;
}

double potential(NuclearModel const& model, double r)
{
    double const Z = model.Z();
    double const w = model.width();
    switch (model.kind())
    {
        case NuclearKind::point:
            if (!(r > 0))
            {
                throw SingularityError("point-nucleus potential at r = 0");
            }
            return Z / r;
        case NuclearKind::gaussian: {
            if (!(r >= 0))
            {
                throw DomainError("potential needs r >= 0");
            }
            double const x = r / (w * std::numbers::sqrt2);
            if (x < 1e-8)
            {
                return Z * std::sqrt(2 / pi) / w * (1 - x * x / 3);
            }
            return Z * std::erf(x) / r;
        }
        case NuclearKind::uniform_ball:
            if (!(r >= 0))
            {
                throw DomainError("potential needs r >= 0");
            }
            if (r < w)
            {
                return Z * (3 * w * w - r * r) / (2 * w * w * w);
            }
            return Z / r;
    }
    return 0;
}

double potential_fourier(NuclearModel const& model, double k)
{
    if (!(k > 0))
    {
        throw SingularityError(
            "phi_hat diverges at k = 0; evaluate on k > 0 grids");
    }
    return 4 * pi * density_fourier(model, k) / (k * k);
}
}  // namespace vacpol
