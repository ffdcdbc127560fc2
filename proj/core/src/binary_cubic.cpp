#include "fm18/binary_cubic.hpp"

#include <stdexcept>

namespace fm18 {

bool BinaryCubic::is_zero() const
{
    for (const auto& x : a)
        if (!fm18::is_zero(x)) return false;
    return true;
}

BinaryCubic BinaryCubic::operator+(const BinaryCubic& o) const
{
    BinaryCubic r;
    for (int i = 0; i < 4; ++i) r.a[i] = a[i] + o.a[i];
    return r;
}

BinaryCubic BinaryCubic::scaled(const Rat& c) const
{
    BinaryCubic r;
    for (int i = 0; i < 4; ++i) r.a[i] = a[i] * c;
    return r;
}

std::array<Rat, 3> BinaryCubic::hessian() const
{
    // (f_xx f_yy - f_xy^2) / 4
    return {3 * a[0] * a[2] - a[1] * a[1],
            9 * a[0] * a[3] - a[1] * a[2],
            3 * a[1] * a[3] - a[2] * a[2]};
}

Rat BinaryCubic::disc() const
{
    const Rat &p = a[0], &q = a[1], &r = a[2], &s = a[3];
    return 18 * p * q * r * s - 4 * q * q * q * s + q * q * r * r - 4 * p * r * r * r -
           27 * p * p * s * s;
}

BinaryCubic compose_linear(const BinaryCubic& f, const RatMatrix& m)
{
    if (m.rows() != 2 || m.cols() != 2)
        throw std::invalid_argument("substitution needs a 2x2 matrix");
    // substitute x -> m00 x + m01 y, y -> m10 x + m11 y
    const Rat &p = m.at(0, 0), &q = m.at(0, 1), &r = m.at(1, 0), &s = m.at(1, 1);
    BinaryCubic out;
    // expand a0 X^3 + a1 X^2 Y + a2 X Y^2 + a3 Y^3 with X = px+qy, Y = rx+sy
    out.a[0] = f.a[0] * p * p * p + f.a[1] * p * p * r + f.a[2] * p * r * r + f.a[3] * r * r * r;
    out.a[1] = 3 * f.a[0] * p * p * q + f.a[1] * (p * p * s + 2 * p * q * r) +
               f.a[2] * (r * r * q + 2 * p * r * s) + 3 * f.a[3] * r * r * s;
    out.a[2] = 3 * f.a[0] * p * q * q + f.a[1] * (q * q * r + 2 * p * q * s) +
               f.a[2] * (p * s * s + 2 * q * r * s) + 3 * f.a[3] * r * s * s;
    out.a[3] = f.a[0] * q * q * q + f.a[1] * q * q * s + f.a[2] * q * s * s + f.a[3] * s * s * s;
    return out;
}

std::string to_string(CubicRootType t)
{
    switch (t) {
    case CubicRootType::TripleRoot: return "triple root";
    case CubicRootType::DoubleRoot: return "double root";
    case CubicRootType::ThreeDistinct: return "three distinct roots";
    case CubicRootType::Zero: return "zero form";
    }
    return "?";
}

CubicRootType cubic_root_type(const BinaryCubic& f)
{
    if (f.is_zero()) return CubicRootType::Zero;
    auto h = f.hessian();
    if (is_zero(h[0]) && is_zero(h[1]) && is_zero(h[2])) return CubicRootType::TripleRoot;
    if (is_zero(f.disc())) return CubicRootType::DoubleRoot;
    return CubicRootType::ThreeDistinct;
}

P4Point::P4Point(BinaryCubic f_, Rat c_) : f(std::move(f_)), c(std::move(c_))
{
    if (f.is_zero() && is_zero(c))
        throw std::invalid_argument("(0, 0) does not define a projective point");
}

P4Point act(const BinaryCubic& h, const RatMatrix& g, const P4Point& p)
{
    auto ginv = inverse(g);
    if (!ginv) throw std::invalid_argument("group element must be invertible");
    BinaryCubic moved = compose_linear(p.f, *ginv);
    return P4Point(moved + h.scaled(p.c), p.c);
}

std::string to_string(OrbitLabel l)
{
    switch (l) {
    case OrbitLabel::VertexP: return "VertexP";
    case OrbitLabel::GammaCurve: return "GammaCurve";
    case OrbitLabel::TangentDevelopable: return "TangentDevelopable";
    case OrbitLabel::GenericPlanePoint: return "GenericPlanePoint";
    case OrbitLabel::ConeMinus: return "ConeMinus";
    case OrbitLabel::DeltaMixed: return "DeltaMixed";
    case OrbitLabel::OpenOrbit: return "OpenOrbit";
    }
    return "?";
}

std::string stratum_description(OrbitLabel l)
{
    switch (l) {
    case OrbitLabel::VertexP:
        return "the unique fixed point P = [(0, 1)]";
    case OrbitLabel::GammaCurve:
        return "twisted cubic Gamma of perfect cubes in the hyperplane c = 0";
    case OrbitLabel::TangentDevelopable:
        return "tangent developable of Gamma minus Gamma (c = 0, double root)";
    case OrbitLabel::GenericPlanePoint:
        return "hyperplane c = 0 off the discriminant";
    case OrbitLabel::ConeMinus:
        return "cone N over Gamma with vertex P, minus Gamma and P";
    case OrbitLabel::DeltaMixed:
        return "discriminant cone Delta off N and the hyperplane c = 0";
    case OrbitLabel::OpenOrbit:
        return "open orbit: c != 0, three distinct roots";
    }
    return "?";
}

OrbitLabel classify_point(const P4Point& p)
{
    CubicRootType t = cubic_root_type(p.f);
    if (t == CubicRootType::Zero) return OrbitLabel::VertexP;
    if (is_zero(p.c)) {
        switch (t) {
        case CubicRootType::TripleRoot: return OrbitLabel::GammaCurve;
        case CubicRootType::DoubleRoot: return OrbitLabel::TangentDevelopable;
        default: return OrbitLabel::GenericPlanePoint;
        }
    }
    switch (t) {
    case CubicRootType::TripleRoot: return OrbitLabel::ConeMinus;
    case CubicRootType::DoubleRoot: return OrbitLabel::DeltaMixed;
    default: return OrbitLabel::OpenOrbit;
    }
}

} // namespace fm18
