#include "fm18/flag_sextic.hpp"

#include <stdexcept>

namespace fm18 {

TracelessMatrix3::TracelessMatrix3(RatMatrix m) : m_(std::move(m))
{
    if (m_.rows() != 3 || m_.cols() != 3)
        throw std::invalid_argument("hyperplane datum must be a 3x3 matrix");
    if (!is_zero(m_.trace()))
        throw std::invalid_argument("hyperplane datum must be traceless");
    if (m_.is_zero())
        throw std::invalid_argument("hyperplane datum must be nonzero");
}

TracelessMatrix3 TracelessMatrix3::from_entries(const RatVec& nine)
{
    if (nine.size() != 9)
        throw std::invalid_argument("expected 9 entries, row major");
    return TracelessMatrix3(RatMatrix(3, 3, nine));
}

std::string to_string(JordanLabel l)
{
    switch (l) {
    case JordanLabel::DiagDoubleEigenvalue: return "double eigenvalue, diagonalizable";
    case JordanLabel::CubeRootsTriple: return "eigenvalues proportional to cube roots of unity";
    case JordanLabel::GenericDistinct: return "three distinct eigenvalues, generic";
    case JordanLabel::JordanBlockPlusEigen: return "2-block plus eigenvalue";
    case JordanLabel::RegularNilpotent: return "regular nilpotent";
    case JordanLabel::RankOneNilpotent: return "rank-one nilpotent";
    }
    return "?";
}

std::string to_string(SurfaceType t)
{
    switch (t) {
    case SurfaceType::ReducibleFirstKind: return "reducible of the first kind";
    case SurfaceType::SmoothDP6_Z6: return "smooth del Pezzo sextic (Z/6 twist)";
    case SurfaceType::SmoothDP6_Z2: return "smooth del Pezzo sextic (Z/2 twist)";
    case SurfaceType::A1: return "del Pezzo sextic of type A1";
    case SurfaceType::A2: return "del Pezzo sextic of type A2";
    case SurfaceType::ReducibleSecondKind: return "reducible of the second kind";
    }
    return "?";
}

namespace {

int minpoly_degree(const RatMatrix& c)
{
    // rank of {I, C, C^2} as vectors in 9-space
    RatMatrix sys(3, 9);
    RatMatrix p = RatMatrix::identity(3);
    for (int k = 0; k < 3; ++k) {
        auto v = p.vectorized();
        for (int j = 0; j < 9; ++j) sys.at(k, j) = v[j];
        p = p * c;
    }
    return static_cast<int>(matrix_rank(sys));
}

} // namespace

JordanLabel jordan_label(const TracelessMatrix3& cm)
{
    const RatMatrix& c = cm.matrix();
    if ((c * c).is_zero()) return JordanLabel::RankOneNilpotent;

    UniPoly chi = char_poly(c); // t^3 + p t + q, no t^2 term by tracelessness
    Rat p = chi.coeff(1), q = chi.coeff(0);
    if (is_zero(p) && is_zero(q)) return JordanLabel::RegularNilpotent;

    Rat disc = -4 * p * p * p - 27 * q * q;
    if (!is_zero(disc))
        return is_zero(p) ? JordanLabel::CubeRootsTriple : JordanLabel::GenericDistinct;
    return minpoly_degree(c) == 3 ? JordanLabel::JordanBlockPlusEigen
                                  : JordanLabel::DiagDoubleEigenvalue;
}

SexticReport classify_section(const TracelessMatrix3& c)
{
    switch (jordan_label(c)) {
    case JordanLabel::DiagDoubleEigenvalue:
        return {SurfaceType::ReducibleFirstKind, "GL2(C) x| Z/2", 4, std::nullopt,
                "a smooth conic", "two cubic scrolls meeting along a smooth conic"};
    case JordanLabel::CubeRootsTriple:
        return {SurfaceType::SmoothDP6_Z6, "(Gm)^2 x| Z/6", 2, 6, "none",
                "hexagon of six (-1)-curves"};
    case JordanLabel::GenericDistinct:
        return {SurfaceType::SmoothDP6_Z2, "(Gm)^2 x| Z/2", 2, 6, "none",
                "hexagon of six (-1)-curves"};
    case JordanLabel::JordanBlockPlusEigen:
        return {SurfaceType::A1, "(Ga x Gm) x| Z/2", 2, 4, "one A1 point",
                "chain (-1)(-1)(-2)(-1)(-1), (-2) from the A1 point"};
    case JordanLabel::RegularNilpotent:
        return {SurfaceType::A2, "((Ga)^2 x| Gm) x| Z/2", 3, 2, "one A2 point",
                "chain (-1)(-2)(-1) with a second (-2) branch, (-2)s from the A2 point"};
    case JordanLabel::RankOneNilpotent:
        return {SurfaceType::ReducibleSecondKind, "B(PGL3(C)) x| Z/2", 5, std::nullopt,
                "two intersecting lines",
                "two cubic scrolls meeting along two intersecting lines"};
    }
    throw std::logic_error("unreachable jordan label");
}

std::optional<long> count_lines(const TracelessMatrix3& cm)
{
    const RatMatrix& c = cm.matrix();
    // A matrix whose minimal polynomial drops degree has an eigenvalue with
    // a 2-dimensional eigenspace, hence a pencil of lines on each side.
    if (minpoly_degree(c) <= 2) return std::nullopt;
    UniPoly chi = char_poly(c);
    // one left and one right eigendirection per distinct eigenvalue
    return 2L * *squarefree_part(chi).degree();
}

int pcent_lie_dim(const TracelessMatrix3& cm)
{
    const RatMatrix& c = cm.matrix();
    // kernel of (X, t) -> XC - CX - tC, a 9x10 system; t = 0 is forced on
    // the X = 0 slice, so the kernel meets the X-space injectively.
    RatMatrix sys(9, 10);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            int row = 3 * a + b;
            // coefficient of X_{ij} in (XC - CX)_{ab}
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                    Rat coef(0);
                    if (i == a) coef += c.at(j, b);
                    if (j == b) coef -= c.at(a, i);
                    sys.at(row, 3 * i + j) = coef;
                }
            sys.at(row, 9) = -c.at(a, b);
        }
    auto ker = kernel_basis(sys);
    return static_cast<int>(ker.size()) - 1;
}

SingularLocus find_singular_points(const TracelessMatrix3& cm)
{
    const RatMatrix& c = cm.matrix();
    SingularLocus out;
    SexticReport rep = classify_section(cm);
    out.certificate = rep.sing_descriptor;

    // Singular points of X_C pair a left and a right eigenvector for a
    // common eigenvalue with x . y = 0. That forces the eigenvalue to be
    // repeated, and repeated eigenvalues of a rational cubic are rational:
    // they are the roots of gcd(chi, chi').
    UniPoly chi = char_poly(c);
    UniPoly g = poly_gcd(chi, chi.derivative());
    std::vector<Rat> repeated;
    if (g.degree() == 1) {
        repeated.push_back(-g.coeff(0) / g.coeff(1));
    } else if (g.degree() == 2) {
        // a cubic cannot carry two distinct double roots, so g is a square
        repeated.push_back(-g.coeff(1) / (2 * g.coeff(2)));
    }

    for (const Rat& lam : repeated) {
        RatMatrix shifted = c;
        for (int i = 0; i < 3; ++i) shifted.at(i, i) -= lam;
        auto right = kernel_basis(shifted);
        auto left = kernel_basis(shifted.transpose());
        if (right.size() >= 2) {
            out.is_curve = true;
            continue;
        }
        if (right.size() == 1 && left.size() == 1) {
            Rat dot(0);
            for (int i = 0; i < 3; ++i) dot += left[0][i] * right[0][i];
            if (is_zero(dot)) out.points.push_back({left[0], right[0], lam});
        }
    }
    return out;
}

TracelessMatrix3 diag_c(const Rat& a, const Rat& b)
{
    RatMatrix m(3, 3);
    m.at(0, 0) = a;
    m.at(1, 1) = b;
    m.at(2, 2) = -a - b;
    return TracelessMatrix3(m);
}

TracelessMatrix3 c1_normal_form()
{
    RatMatrix m(3, 3);
    m.at(0, 0) = 1;
    m.at(0, 1) = 1;
    m.at(1, 1) = 1;
    m.at(2, 2) = -2;
    return TracelessMatrix3(m);
}

TracelessMatrix3 c2_normal_form()
{
    RatMatrix m(3, 3);
    m.at(0, 1) = 1;
    m.at(1, 2) = 1;
    return TracelessMatrix3(m);
}

TracelessMatrix3 c3_normal_form()
{
    RatMatrix m(3, 3);
    m.at(0, 1) = 1;
    return TracelessMatrix3(m);
}

TracelessMatrix3 cube_roots_representative()
{
    // companion matrix of t^3 - 1
    RatMatrix m(3, 3);
    m.at(0, 2) = 1;
    m.at(1, 0) = 1;
    m.at(2, 1) = 1;
    return TracelessMatrix3(m);
}

} // namespace fm18
