#pragma once

#include "fm18/ratmatrix.hpp"

#include <array>
#include <string>

namespace fm18 {

/// Binary cubic form a0 x^3 + a1 x^2 y + a2 x y^2 + a3 y^3.
struct BinaryCubic {
    std::array<Rat, 4> a{};

    bool is_zero() const;
    BinaryCubic operator+(const BinaryCubic& o) const;
    BinaryCubic scaled(const Rat& c) const;
    bool operator==(const BinaryCubic& o) const = default;

    /// Coefficients of the (halved) Hessian covariant, a binary quadratic;
    /// it vanishes identically exactly when the form is a perfect cube.
    std::array<Rat, 3> hessian() const;
    Rat disc() const;
};

/// f composed with the linear substitution (x, y) -> m . (x, y).
BinaryCubic compose_linear(const BinaryCubic& f, const RatMatrix& m);

enum class CubicRootType { TripleRoot, DoubleRoot, ThreeDistinct, Zero };

std::string to_string(CubicRootType t);

CubicRootType cubic_root_type(const BinaryCubic& f);

/// Point of P(M3 + C) as a class [(f, c)], (f, c) != (0, 0).
struct P4Point {
    BinaryCubic f;
    Rat c;

    P4Point(BinaryCubic f_, Rat c_);
};

/// The affine-extension action (h, g): (f, c) -> (f o g^{-1} + c h, c).
P4Point act(const BinaryCubic& h, const RatMatrix& g, const P4Point& p);

/// The seven orbits of the GL2 action on P(M3 + C), in the order
/// {P}, Gamma, Delta0 \ Gamma, P(M3) \ Delta0, N \ (Gamma u {P}),
/// Delta \ (N u Delta0), open orbit.
enum class OrbitLabel {
    VertexP,
    GammaCurve,
    TangentDevelopable,
    GenericPlanePoint,
    ConeMinus,
    DeltaMixed,
    OpenOrbit,
};

std::string to_string(OrbitLabel l);
/// Geometric description of the stratum (vertex, cubes curve, ...).
std::string stratum_description(OrbitLabel l);

OrbitLabel classify_point(const P4Point& p);

} // namespace fm18
