#pragma once

#include "fm18/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace fm18 {

/// Dense univariate polynomial over the rationals, coefficients stored
/// lowest degree first. The zero polynomial has an empty coefficient vector
/// and degree() == nullopt; nothing in the code does arithmetic on a -1
/// degree sentinel.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(RatVec coeffs);
    static UniPoly zero() { return UniPoly{}; }
    static UniPoly constant(const Rat& c);
    /// The monomial c * t^k.
    static UniPoly monomial(const Rat& c, std::size_t k);

    const RatVec& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    std::optional<int> degree() const;
    /// Coefficient of t^k (zero beyond the stored range).
    Rat coeff(std::size_t k) const;
    Rat leading() const;

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator-() const;
    UniPoly scaled(const Rat& a) const;
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

    UniPoly derivative() const;
    UniPoly monic() const;
    Rat eval(const Rat& x) const;
    std::string to_string(const std::string& var = "t") const;

private:
    RatVec c_;
    void normalize();
};

/// Quotient and remainder; divisor must be nonzero.
std::pair<UniPoly, UniPoly> poly_divmod(const UniPoly& a, const UniPoly& b);

/// Monic gcd; gcd(0,0) = 0.
UniPoly poly_gcd(const UniPoly& a, const UniPoly& b);

/// p / gcd(p, p'), made monic. Throws on the zero polynomial.
UniPoly squarefree_part(const UniPoly& p);

/// Yun decomposition p = lc * prod a_i^i with each a_i squarefree and monic.
/// Returns the (a_i, i) pairs with deg a_i >= 1.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p);

/// Res(a, b) with the usual convention Res(const c, b) = c^deg b.
Rat resultant(const UniPoly& a, const UniPoly& b);

/// disc(p) = (-1)^{n(n-1)/2} Res(p, p') / lc(p), n = deg p >= 1.
Rat discriminant(const UniPoly& p);

} // namespace fm18
