#include "fm18/unipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace fm18 {

UniPoly::UniPoly(RatVec coeffs) : c_(std::move(coeffs)) { normalize(); }

void UniPoly::normalize()
{
    while (!c_.empty() && fm18::is_zero(c_.back())) c_.pop_back();
}

UniPoly UniPoly::constant(const Rat& c)
{
    return UniPoly{RatVec{c}};
}

UniPoly UniPoly::monomial(const Rat& c, std::size_t k)
{
    RatVec v(k + 1, Rat(0));
    v[k] = c;
    return UniPoly{std::move(v)};
}

std::optional<int> UniPoly::degree() const
{
    if (c_.empty()) return std::nullopt;
    return static_cast<int>(c_.size()) - 1;
}

Rat UniPoly::coeff(std::size_t k) const
{
    return k < c_.size() ? c_[k] : Rat(0);
}

Rat UniPoly::leading() const
{
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

UniPoly UniPoly::operator+(const UniPoly& o) const
{
    RatVec r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return UniPoly{std::move(r)};
}

UniPoly UniPoly::operator-(const UniPoly& o) const
{
    RatVec r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return UniPoly{std::move(r)};
}

UniPoly UniPoly::operator*(const UniPoly& o) const
{
    if (c_.empty() || o.c_.empty()) return UniPoly{};
    RatVec r(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] += c_[i] * o.c_[j];
    return UniPoly{std::move(r)};
}

UniPoly UniPoly::operator-() const
{
    RatVec r = c_;
    for (auto& x : r) x = -x;
    return UniPoly{std::move(r)};
}

UniPoly UniPoly::scaled(const Rat& a) const
{
    RatVec r = c_;
    for (auto& x : r) x *= a;
    return UniPoly{std::move(r)};
}

UniPoly UniPoly::derivative() const
{
    if (c_.size() <= 1) return UniPoly{};
    RatVec r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return UniPoly{std::move(r)};
}

UniPoly UniPoly::monic() const
{
    if (c_.empty()) return UniPoly{};
    return scaled(Rat(1) / c_.back());
}

Rat UniPoly::eval(const Rat& x) const
{
    Rat acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

std::string UniPoly::to_string(const std::string& var) const
{
    if (c_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (fm18::is_zero(c_[i])) continue;
        if (!first) out << (sgn(c_[i]) < 0 ? " - " : " + ");
        else if (sgn(c_[i]) < 0) out << "-";
        Rat a = abs(c_[i]);
        if (i == 0 || a != 1) out << rat_to_string(a);
        if (i > 0) {
            if (a != 1) out << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
        first = false;
    }
    return out.str();
}

std::pair<UniPoly, UniPoly> poly_divmod(const UniPoly& a, const UniPoly& b)
{
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    RatVec rem = a.coeffs();
    const RatVec& d = b.coeffs();
    const std::size_t db = d.size() - 1;
    if (rem.size() < d.size()) return {UniPoly{}, a};
    RatVec quot(rem.size() - db, Rat(0));
    for (std::size_t top = rem.size(); top-- > db;) {
        if (is_zero(rem[top])) continue;
        Rat q = rem[top] / d.back();
        std::size_t shift = top - db;
        quot[shift] = q;
        for (std::size_t i = 0; i < d.size(); ++i) rem[shift + i] -= q * d[i];
    }
    return {UniPoly{std::move(quot)}, UniPoly{std::move(rem)}};
}

UniPoly poly_gcd(const UniPoly& a, const UniPoly& b)
{
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = poly_divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

UniPoly squarefree_part(const UniPoly& p)
{
    if (p.is_zero()) throw std::domain_error("zero polynomial");
    UniPoly g = poly_gcd(p, p.derivative());
    if (g.is_zero()) return p.monic(); // deg p == 0
    return poly_divmod(p, g).first.monic();
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p)
{
    if (p.is_zero()) throw std::domain_error("zero polynomial");
    std::vector<std::pair<UniPoly, int>> out;
    if (p.degree() == 0) return out;
    UniPoly g = poly_gcd(p, p.derivative());
    UniPoly b = poly_divmod(p, g).first;
    UniPoly c = poly_divmod(p.derivative(), g).first;
    UniPoly d = c - b.derivative();
    int i = 1;
    while (b.degree().value_or(0) > 0) {
        UniPoly a = poly_gcd(b, d);
        if (a.degree().value_or(0) > 0) out.emplace_back(a, i);
        b = poly_divmod(b, a).first;
        c = poly_divmod(d, a).first;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

Rat resultant(const UniPoly& a, const UniPoly& b)
{
    if (a.is_zero() || b.is_zero()) return Rat(0);
    int m = *a.degree(), n = *b.degree();
    if (m == 0) {
        Rat r(1);
        for (int i = 0; i < n; ++i) r *= a.leading();
        return r;
    }
    if (n == 0) {
        Rat r(1);
        for (int i = 0; i < m; ++i) r *= b.leading();
        return r;
    }
    UniPoly r = poly_divmod(a, b).second;
    Rat sign = (m % 2 == 1 && n % 2 == 1) ? Rat(-1) : Rat(1);
    if (r.is_zero()) return Rat(0);
    int dr = *r.degree();
    Rat lc(1);
    for (int i = 0; i < m - dr; ++i) lc *= b.leading();
    return sign * lc * resultant(b, r);
}

Rat discriminant(const UniPoly& p)
{
    auto deg = p.degree();
    if (!deg || *deg < 1) throw std::domain_error("discriminant needs degree >= 1");
    int n = *deg;
    Rat res = resultant(p, p.derivative());
    Rat sign = ((n * (n - 1) / 2) % 2 == 1) ? Rat(-1) : Rat(1);
    return sign * res / p.leading();
}

} // namespace fm18
