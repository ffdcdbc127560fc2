#include "fm18/conic_pairs.hpp"

#include "fm18/unipoly.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace fm18 {

Conic::Conic(RatMatrix gram) : g_(std::move(gram))
{
    if (g_.rows() != 3 || g_.cols() != 3)
        throw std::invalid_argument("conic needs a 3x3 Gram matrix");
    if (g_.transpose() != g_)
        throw std::invalid_argument("conic Gram matrix must be symmetric");
    if (g_.is_zero())
        throw std::invalid_argument("conic Gram matrix must be nonzero");
}

Conic Conic::from_upper_triangle(const RatVec& six)
{
    if (six.size() != 6)
        throw std::invalid_argument("expected 6 entries a00 a01 a02 a11 a12 a22");
    RatMatrix g(3, 3);
    g.at(0, 0) = six[0];
    g.at(0, 1) = g.at(1, 0) = six[1];
    g.at(0, 2) = g.at(2, 0) = six[2];
    g.at(1, 1) = six[3];
    g.at(1, 2) = g.at(2, 1) = six[4];
    g.at(2, 2) = six[5];
    return Conic(g);
}

bool Conic::proportional_to(const Conic& o) const
{
    // find the first nonzero entry of each and compare cross ratios
    const auto& a = g_.entries();
    const auto& b = o.g_.entries();
    std::size_t k = 0;
    while (k < 9 && is_zero(a[k]) && is_zero(b[k])) ++k;
    if (k == 9) return true;
    if (is_zero(a[k]) || is_zero(b[k])) return false;
    for (std::size_t i = 0; i < 9; ++i)
        if (a[i] * b[k] != b[i] * a[k]) return false;
    return true;
}

Rat Conic::eval(const RatVec& v) const
{
    Rat r(0);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            r += g_.at(i, j) * v[i] * v[j];
    return r;
}

std::string to_string(TangencyType t)
{
    switch (t) {
    case TangencyType::Equal: return "equal";
    case TangencyType::Quadritangent: return "quadritangent";
    case TangencyType::Bitangent: return "bitangent";
    case TangencyType::NotEvenTouching: return "not even-touching";
    }
    return "?";
}

std::string to_string(PairGroup g)
{
    switch (g) {
    case PairGroup::PGL2: return "PGL2(C)";
    case PairGroup::Ga_semidirect_Z2: return "Ga x| Z/2";
    case PairGroup::Gm_semidirect_Z2: return "Gm x| Z/2";
    }
    return "?";
}

std::string to_string(Aut0FromPair a)
{
    switch (a) {
    case Aut0FromPair::GL2: return "GL2(C)";
    case Aut0FromPair::GaGm: return "Ga x Gm";
    case Aut0FromPair::Torus2: return "(Gm)^2";
    }
    return "?";
}

namespace {

// Deterministic bounded search for a rational point. The form is cleared to
// integers and solved as a quadratic in x over a grid of (y : z) directions,
// so only integer perfect-square tests are involved.
std::optional<RatVec> rational_point(const Conic& u)
{
    mpz_class lcm(1);
    for (const auto& entry : u.gram().entries()) {
        mpz_class den = entry.get_den();
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    }
    auto g = [&](int i, int j) { return mpz_class(u.gram().at(i, j) * Rat(lcm)); };
    const mpz_class a = g(0, 0), b = g(0, 1), cc = g(0, 2), d = g(1, 1), e = g(1, 2), f = g(2, 2);

    if (a == 0) return RatVec{Rat(1), Rat(0), Rat(0)};

    const long height = 64;
    for (long h = 0; h <= height; ++h)
        for (long y = -h; y <= h; ++y)
            for (long z = -h; z <= h; ++z) {
                if (std::max(std::abs(y), std::abs(z)) != h) continue;
                if (y == 0 && z == 0) continue;
                // a x^2 + B x + C with B, C integers in y, z
                mpz_class B = 2 * (b * y + cc * z);
                mpz_class C = d * y * y + 2 * e * y * z + f * z * z;
                mpz_class disc = B * B - 4 * a * C;
                if (disc < 0 || mpz_perfect_square_p(disc.get_mpz_t()) == 0) continue;
                mpz_class root;
                mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
                Rat x = Rat(-B + root) / Rat(2 * a);
                return RatVec{x, Rat(y), Rat(z)};
            }
    return std::nullopt;
}

// Binary form of degree d as coefficients of t^i s^(d-i), i = 0..d.
RatVec form_mul(const RatVec& f, const RatVec& g)
{
    RatVec r(f.size() + g.size() - 1, Rat(0));
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            r[i + j] += f[i] * g[j];
    return r;
}

} // namespace

std::vector<int> intersection_multiplicities(const Conic& u, const Conic& j)
{
    if (!u.is_smooth()) throw std::invalid_argument("base conic singular");
    if (u.proportional_to(j))
        throw std::invalid_argument("conics coincide; multiplicities undefined");
    auto p = rational_point(u);
    if (!p)
        throw std::invalid_argument(
            "no rational parametrization: the base conic has no small rational point; "
            "pass it in normal form (e.g. x^2 + yz) or supply a conic with a rational point");

    // complete p to a basis with two standard vectors
    std::array<RatVec, 2> e;
    int found = 0;
    for (int k = 0; k < 3 && found < 2; ++k) {
        RatVec cand(3, Rat(0));
        cand[k] = 1;
        RatMatrix test(3, found + 2);
        for (int i = 0; i < 3; ++i) {
            test.at(i, 0) = (*p)[i];
            for (int f = 0; f < found; ++f) test.at(i, f + 1) = e[f][i];
            test.at(i, found + 1) = cand[i];
        }
        if (matrix_rank(test) == static_cast<std::size_t>(found) + 2) e[found++] = cand;
    }

    // X(t,s) = q(D) p - 2 B(p, D) D with D = t e0 + s e1 sweeps the conic
    // through p; each coordinate is a binary quadratic in (t, s).
    const RatMatrix& G = u.gram();
    auto bil = [&](const RatVec& a, const RatVec& b) {
        Rat r(0);
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < 3; ++k) r += G.at(i, k) * a[i] * b[k];
        return r;
    };
    Rat q00 = bil(e[0], e[0]), q01 = bil(e[0], e[1]), q11 = bil(e[1], e[1]);
    Rat b0 = bil(*p, e[0]), b1 = bil(*p, e[1]);
    // q(D) = q00 t^2 + 2 q01 ts + q11 s^2, B(p,D) = b0 t + b1 s
    std::array<RatVec, 3> comp;
    for (int k = 0; k < 3; ++k) {
        RatVec f(3, Rat(0)); // t^0 s^2, t^1 s^1, t^2 s^0
        f[2] = q00 * (*p)[k] - 2 * b0 * e[0][k];
        f[1] = 2 * q01 * (*p)[k] - 2 * (b0 * e[1][k] + b1 * e[0][k]);
        f[0] = q11 * (*p)[k] - 2 * b1 * e[1][k];
        comp[k] = f;
    }

    // pull J back: a binary quartic
    RatVec quartic(5, Rat(0));
    const RatMatrix& JG = j.gram();
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            if (is_zero(JG.at(a, b))) continue;
            RatVec prod = form_mul(comp[a], comp[b]);
            for (int i = 0; i < 5; ++i) quartic[i] += JG.at(a, b) * prod[i];
        }

    bool all_zero = std::all_of(quartic.begin(), quartic.end(),
                                [](const Rat& x) { return is_zero(x); });
    if (all_zero)
        throw std::logic_error("pullback of the second conic vanished identically");

    // root at infinity = multiplicity of s dividing the form
    int top = 4;
    while (is_zero(quartic[top])) --top;
    std::vector<int> mults;
    if (top < 4) mults.push_back(4 - top);
    UniPoly g{RatVec(quartic.begin(), quartic.begin() + top + 1)};
    for (const auto& [factor, mult] : squarefree_decomposition(g)) {
        int d = *factor.degree();
        for (int i = 0; i < d; ++i) mults.push_back(mult);
    }
    std::sort(mults.begin(), mults.end());
    int sum = 0;
    for (int m : mults) sum += m;
    if (sum != 4) throw std::logic_error("intersection multiplicities do not sum to 4");
    return mults;
}

TangencyType classify_pair(const Conic& u, const Conic& j)
{
    if (!u.is_smooth()) throw std::invalid_argument("base conic singular");
    if (u.proportional_to(j)) return TangencyType::Equal;
    auto m = intersection_multiplicities(u, j);
    if (m == std::vector<int>{4}) return TangencyType::Quadritangent;
    if (m == std::vector<int>{2, 2}) return TangencyType::Bitangent;
    return TangencyType::NotEvenTouching;
}

bool preserves_conic(const RatMatrix& g, const Conic& c)
{
    RatMatrix pulled = g.transpose() * c.gram() * g;
    return Conic(pulled).proportional_to(c);
}

PairStabilizer pair_stabilizer(TangencyType t)
{
    switch (t) {
    case TangencyType::Equal:
        return {PairGroup::PGL2, {}, "Aut(U) = PGL2(C), no finite generator list"};
    case TangencyType::Bitangent: {
        // (x : l y : l^-1 z) for l != 0, and the swap (x : z : y)
        RatMatrix torus(3, 3);
        torus.at(0, 0) = 1;
        torus.at(1, 1) = 2;
        torus.at(2, 2) = Rat(1, 2);
        RatMatrix kappa(3, 3);
        kappa.at(0, 0) = 1;
        kappa.at(1, 2) = 1;
        kappa.at(2, 1) = 1;
        return {PairGroup::Gm_semidirect_Z2, {torus, kappa},
                "(x : l y : l^-1 z), l in C^*; sample l = 2, with kappa = (x : z : y)"};
    }
    case TangencyType::Quadritangent: {
        // (x + e z : y - 2 e x - e^2 z : z) for e in C, and (-x : y : z).
        // Matrix acts on column vectors (x, y, z)^t.
        RatMatrix uni(3, 3);
        uni.at(0, 0) = 1;
        uni.at(0, 2) = 1;
        uni.at(1, 0) = -2;
        uni.at(1, 1) = 1;
        uni.at(1, 2) = -1;
        uni.at(2, 2) = 1;
        RatMatrix kappa(3, 3);
        kappa.at(0, 0) = -1;
        kappa.at(1, 1) = 1;
        kappa.at(2, 2) = 1;
        return {PairGroup::Ga_semidirect_Z2, {uni, kappa},
                "(x + e z : y - 2 e x - e^2 z : z), e in C; sample e = 1, with kappa = (-x : y : z)"};
    }
    case TangencyType::NotEvenTouching:
        break;
    }
    throw std::invalid_argument("pair not in classification");
}

Aut0FromPair pair_to_aut0V(TangencyType t)
{
    switch (t) {
    case TangencyType::Equal: return Aut0FromPair::GL2;
    case TangencyType::Quadritangent: return Aut0FromPair::GaGm;
    case TangencyType::Bitangent: return Aut0FromPair::Torus2;
    case TangencyType::NotEvenTouching: break;
    }
    throw std::invalid_argument("pair not in classification");
}

Conic upsilon_normal_form()
{
    RatMatrix g(3, 3);
    g.at(0, 0) = 1;
    g.at(1, 2) = g.at(2, 1) = Rat(1, 2);
    return Conic(g);
}

Conic bitangent_partner(const Rat& a, const Rat& b)
{
    RatMatrix g(3, 3);
    g.at(0, 0) = a;
    g.at(1, 2) = g.at(2, 1) = b / 2;
    return Conic(g);
}

Conic quadritangent_partner(const Rat& a, const Rat& b)
{
    RatMatrix g(3, 3);
    g.at(0, 0) = a;
    g.at(1, 2) = g.at(2, 1) = a / 2;
    g.at(2, 2) = b;
    return Conic(g);
}

} // namespace fm18
