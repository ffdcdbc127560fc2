#include "fm18/selftest.hpp"

#include "fm18/binary_cubic.hpp"
#include "fm18/conic_pairs.hpp"
#include "fm18/flag_sextic.hpp"
#include "fm18/g2.hpp"
#include "fm18/json_io.hpp"
#include "fm18/ledger.hpp"
#include "fm18/pipeline.hpp"

#include <numeric>
#include <random>
#include <sstream>

namespace fm18 {

namespace {

// std::uniform_int_distribution is not pinned down by the standard; raw
// engine output keeps the suite reproducible byte for byte.
struct Rng {
    std::mt19937_64 e;
    explicit Rng(std::uint64_t seed) : e(seed) {}
    long below(long n) { return static_cast<long>(e() % static_cast<unsigned long>(n)); }
    long range(long lo, long hi) { return lo + below(hi - lo + 1); }
    Rat rat(long lo, long hi) { return Rat(range(lo, hi)); }
};

struct Suite {
    std::string name;
    long cases = 0;
    std::vector<std::string> failures;

    void check(bool ok, const std::string& what)
    {
        ++cases;
        if (!ok && failures.size() < 16) failures.push_back(what);
        else if (!ok) ++overflow;
    }
    long overflow = 0;
};

std::string num(long v) { return std::to_string(v); }

UniPoly random_poly(Rng& rng, int maxdeg)
{
    int deg = static_cast<int>(rng.range(0, maxdeg));
    RatVec c(deg + 1);
    for (auto& x : c) x = rng.rat(-9, 9);
    if (is_zero(c.back())) c.back() = 1;
    return UniPoly{std::move(c)};
}

RatMatrix random_matrix(Rng& rng, std::size_t r, std::size_t c)
{
    RatMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (rng.below(3) != 0) m.at(i, j) = rng.rat(-9, 9);
    return m;
}

RatMatrix random_invertible3(Rng& rng)
{
    for (;;) {
        RatMatrix m(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m.at(i, j) = rng.rat(-4, 4);
        if (!is_zero(determinant(m))) return m;
    }
}

RatMatrix random_invertible2(Rng& rng)
{
    for (;;) {
        RatMatrix m(2, 2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) m.at(i, j) = rng.rat(-5, 5);
        if (!is_zero(determinant(m))) return m;
    }
}

// Small unimodular matrix with small inverse, for line-count oracles.
RatMatrix random_unimodular3(Rng& rng)
{
    for (;;) {
        RatMatrix m = RatMatrix::identity(3);
        int ops = static_cast<int>(rng.range(3, 6));
        for (int k = 0; k < ops; ++k) {
            int i = static_cast<int>(rng.below(3));
            int j = static_cast<int>(rng.below(3));
            if (i == j) continue;
            Rat f = rng.rat(0, 1) == 0 ? Rat(1) : Rat(-1);
            for (int col = 0; col < 3; ++col) m.at(i, col) += f * m.at(j, col);
        }
        bool small = true;
        auto inv = inverse(m);
        for (const auto& x : m.entries()) small &= abs(x) <= 3;
        for (const auto& x : inv->entries()) small &= abs(x) <= 3;
        if (small) return m;
    }
}

G2Element random_g2_element(Rng& rng)
{
    G2Element g;
    for (int i = 0; i < 14; ++i)
        if (rng.below(2) == 0) g.c[i] = rng.rat(-4, 4);
    return g;
}

RatMatrix random_unipotent_conjugator(Rng& rng, int factors)
{
    const G2Structure& lie = g2();
    RatMatrix m = RatMatrix::identity(14);
    for (int k = 0; k < factors; ++k) {
        int root = static_cast<int>(rng.below(12));
        Rat coef = rng.rat(-2, 2);
        m = m * lie.exp_ad_nilpotent(lie.root_vector(root).scaled(coef));
    }
    return m;
}

G2Element conjugate(const RatMatrix& m, const G2Element& g)
{
    RatVec v(g.c.begin(), g.c.end());
    RatVec w = m.apply(v);
    G2Element out;
    for (int i = 0; i < 14; ++i) out.c[i] = w[i];
    return out;
}

// ---------------------------------------------------------------------------

void suite_exact_core(Rng& rng, Suite& s)
{
    for (int it = 0; it < 200; ++it) {
        UniPoly p = random_poly(rng, 6), q = random_poly(rng, 6);
        UniPoly g = poly_gcd(p, q);
        if (g.is_zero()) {
            s.check(p.is_zero() && q.is_zero(), "gcd zero only for zero inputs");
            continue;
        }
        s.check(poly_divmod(p, g).second.is_zero() && poly_divmod(q, g).second.is_zero(),
                "gcd divides both inputs exactly, case " + num(it));
    }

    for (int it = 0; it < 100; ++it) {
        UniPoly p = random_poly(rng, 6);
        if (p.is_zero()) p = UniPoly::monomial(Rat(1), 1);
        UniPoly sf = squarefree_part(p);
        UniPoly g = poly_gcd(sf, sf.derivative());
        s.check(g.degree() == 0 || sf.degree() == 0,
                "squarefree part coprime with its derivative, case " + num(it));
    }

    for (int it = 0; it < 200; ++it) {
        std::size_t r = static_cast<std::size_t>(rng.range(1, 14));
        std::size_t c = static_cast<std::size_t>(rng.range(1, 14));
        RatMatrix m = random_matrix(rng, r, c);
        auto ker = kernel_basis(m);
        bool ann = true;
        for (const auto& v : ker) {
            auto w = m.apply(v);
            for (const auto& x : w) ann &= is_zero(x);
        }
        s.check(matrix_rank(m) + ker.size() == c, "rank + nullity = cols, case " + num(it));
        s.check(ann, "kernel vectors are annihilated, case " + num(it));
    }

    for (int it = 0; it < 100; ++it) {
        std::size_t n = static_cast<std::size_t>(rng.range(1, 6));
        RatMatrix m = random_matrix(rng, n, n);
        s.check(eval_poly(char_poly(m), m).is_zero(), "Cayley-Hamilton, case " + num(it));
    }

    for (int it = 0; it < 50; ++it) {
        Rat p = rng.rat(-9, 9), q = rng.rat(-9, 9);
        UniPoly cubic{RatVec{q, p, Rat(0), Rat(1)}};
        s.check(discriminant(cubic) == -4 * p * p * p - 27 * q * q,
                "depressed cubic discriminant, case " + num(it));
    }
}

void suite_g2(Rng& rng, Suite& s)
{
    const G2Structure& lie = g2(); // construction re-verifies Jacobi on all triples
    s.check(lie.root_system().long_indices().size() == 6, "six long roots");
    s.check(lie.root_system().short_indices().size() == 6, "six short roots");
    s.check(matrix_rank(lie.killing_form()) == 14, "Killing form nondegenerate");

    for (int it = 0; it < 50; ++it) {
        G2Element x = random_g2_element(rng), y = random_g2_element(rng);
        Rat a = rng.rat(-5, 5);
        RatMatrix lhs = lie.ad_matrix(x.scaled(a) + y);
        RatMatrix rhs = lie.ad_matrix(x).scaled(a) + lie.ad_matrix(y);
        s.check(lhs == rhs, "ad is linear, case " + num(it));
    }

    for (int it = 0; it < 50; ++it) {
        G2Element gg = random_g2_element(rng);
        G2Element x = random_g2_element(rng), y = random_g2_element(rng);
        Rat lhs = lie.killing(lie.bracket(gg, x), y) + lie.killing(x, lie.bracket(gg, y));
        s.check(is_zero(lhs), "Killing form is ad-invariant, case " + num(it));
    }

    for (int it = 0; it < 100; ++it) {
        G2Element g;
        switch (it % 4) {
        case 0: g = random_g2_element(rng); break;
        case 1: // mixed: short-killed Cartan plus the matching root vector
            g = lie.cartan_element(Rat(0), rng.rat(1, 4)) +
                lie.root_vector(0).scaled(rng.rat(1, 3));
            break;
        case 2: // nilpotent: combination of positive root vectors
            g = lie.root_vector(static_cast<int>(rng.below(6)))
                    .scaled(rng.rat(1, 3)) +
                lie.root_vector(static_cast<int>(rng.below(6))).scaled(rng.rat(0, 2));
            break;
        default:
            g = lie.cartan_element(rng.rat(-3, 3), rng.rat(-3, 3));
            break;
        }
        auto [gs, gn] = lie.jordan_decomposition(g);
        s.check(gs + gn == g, "jordan: parts sum to the element, case " + num(it));
        s.check(lie.bracket(gs, gn).is_zero(), "jordan: parts commute, case " + num(it));
        RatMatrix adn = lie.ad_matrix(gn);
        RatMatrix pw = RatMatrix::identity(14);
        for (int k = 0; k < 14 && !pw.is_zero(); ++k) pw = pw * adn;
        s.check(pw.is_zero(), "jordan: nilpotent part has nilpotent ad, case " + num(it));
        RatMatrix ads = lie.ad_matrix(gs);
        if (!ads.is_zero()) {
            UniPoly f = squarefree_part(char_poly(ads));
            s.check(eval_poly(f, ads).is_zero(),
                    "jordan: semisimple part annihilated by squarefree charpoly, case " + num(it));
        }
    }

    // centralizer dimension spectrum: always >= 2 and never 3
    for (int it = 0; it < 500; ++it) {
        G2Element g = random_g2_element(rng);
        if (g.is_zero()) continue;
        int d = lie.centralizer_dim(g);
        s.check(d >= 2 && d != 3, "centralizer dim >= 2 and != 3, case " + num(it));
    }

    // calibration agrees with the literal root products on Cartan elements
    for (int it = 0; it < 20; ++it) {
        Rat a = rng.rat(-6, 6), b = rng.rat(-6, 6);
        auto got = lie.invariant_sextics(lie.cartan_element(a, b));
        auto want = cartan_root_products(a, b);
        s.check(got == want, "sextics match root products on the Cartan, case " + num(it));
    }

    // conjugation invariance: centralizer dimension and the exact values of
    // the two invariant polynomials
    for (int it = 0; it < 20; ++it) {
        G2Element h = lie.cartan_element(rng.rat(-4, 4), rng.rat(-4, 4));
        RatMatrix m = random_unipotent_conjugator(rng, 2);
        G2Element moved = conjugate(m, h);
        s.check(lie.centralizer_dim(moved) == lie.centralizer_dim(h),
                "conjugation preserves centralizer dim, case " + num(it));
        s.check(lie.invariant_sextics(moved) == lie.invariant_sextics(h),
                "conjugation preserves the sextics exactly, case " + num(it));
    }
}

void suite_flag_sextic(Rng& rng, Suite& s)
{
    struct Row {
        TracelessMatrix3 c;
        SurfaceType type;
        int dim;
        std::optional<long> lines;
    };
    const std::vector<Row> rows{
        {diag_c(Rat(1), Rat(1)), SurfaceType::ReducibleFirstKind, 4, std::nullopt},
        {cube_roots_representative(), SurfaceType::SmoothDP6_Z6, 2, 6},
        {diag_c(Rat(1), Rat(2)), SurfaceType::SmoothDP6_Z2, 2, 6},
        {c1_normal_form(), SurfaceType::A1, 2, 4},
        {c2_normal_form(), SurfaceType::A2, 3, 2},
        {c3_normal_form(), SurfaceType::ReducibleSecondKind, 5, std::nullopt},
    };

    for (std::size_t r = 0; r < rows.size(); ++r) {
        SexticReport rep = classify_section(rows[r].c);
        s.check(rep.surface_type == rows[r].type, "normal form row " + num(r) + " type");
        s.check(rep.aut0_dim == rows[r].dim, "normal form row " + num(r) + " aut0 dim");
        s.check(count_lines(rows[r].c) == rows[r].lines, "normal form row " + num(r) + " lines");
        s.check(pcent_lie_dim(rows[r].c) == rep.aut0_dim,
                "normal form row " + num(r) + " Lie dim matches the table");
    }

    // invariance under conjugation, transposition and scaling
    for (std::size_t r = 0; r < rows.size(); ++r) {
        SurfaceType want = rows[r].type;
        for (int it = 0; it < 100; ++it) {
            RatMatrix a = random_invertible3(rng);
            RatMatrix moved = a * rows[r].c.matrix() * *inverse(a);
            TracelessMatrix3 cc(moved);
            s.check(classify_section(cc).surface_type == want,
                    "conjugation invariance, row " + num(r) + " case " + num(it));
            s.check(pcent_lie_dim(cc) == classify_section(cc).aut0_dim,
                    "Lie dim invariance, row " + num(r) + " case " + num(it));
        }
        TracelessMatrix3 tr(rows[r].c.matrix().transpose());
        s.check(classify_section(tr).surface_type == want, "transpose invariance, row " + num(r));
        Rat lam = rng.rat(1, 7);
        TracelessMatrix3 sc(rows[r].c.matrix().scaled(lam));
        s.check(classify_section(sc).surface_type == want, "scaling invariance, row " + num(r));
    }

    // brute-force line oracle on matrices diagonalizable over Q
    auto eigendirection_count = [](const RatMatrix& c) -> long {
        long count = 0;
        for (int a = 0; a <= 8; ++a)
            for (int b = a == 0 ? 0 : -8; b <= 8; ++b)
                for (int d = (a == 0 && b == 0) ? 1 : -8; d <= 8; ++d) {
                    long gg = std::gcd(std::gcd(std::abs(a), std::abs(b)), std::abs(d));
                    if (gg != 1) continue;
                    RatVec x{Rat(a), Rat(b), Rat(d)};
                    RatVec y = c.apply(x);
                    // cross(y, x) = 0 iff x spans an eigendirection
                    bool eig = is_zero(y[1] * x[2] - y[2] * x[1]) &&
                               is_zero(y[2] * x[0] - y[0] * x[2]) &&
                               is_zero(y[0] * x[1] - y[1] * x[0]);
                    if (eig && ++count > 3) return 4; // a pencil: infinitely many
                }
        return count;
    };
    for (int it = 0; it < 50; ++it) {
        RatMatrix p = random_unimodular3(rng);
        Rat d0 = rng.rat(-4, 4), d1 = rng.rat(-4, 4);
        if (it % 5 == 0) d1 = d0; // include the pencil case
        RatMatrix d(3, 3);
        d.at(0, 0) = d0;
        d.at(1, 1) = d1;
        d.at(2, 2) = -d0 - d1;
        RatMatrix c = p * d * *inverse(p);
        if (c.is_zero()) continue;
        TracelessMatrix3 cc(c);
        long right = eigendirection_count(c);
        long left = eigendirection_count(c.transpose());
        auto counted = count_lines(cc);
        if (right > 3 || left > 3)
            s.check(!counted.has_value(), "line oracle (pencil), case " + num(it));
        else
            s.check(counted == std::optional<long>(right + left), "line oracle, case " + num(it));
    }

    // singular points of the six normal forms
    auto sing_smooth = find_singular_points(diag_c(Rat(1), Rat(2)));
    s.check(sing_smooth.points.empty() && !sing_smooth.is_curve, "smooth form has no singular point");
    auto sing_a1 = find_singular_points(c1_normal_form());
    s.check(sing_a1.points.size() == 1 && !sing_a1.is_curve, "A1 form has one singular point");
    auto sing_a2 = find_singular_points(c2_normal_form());
    s.check(sing_a2.points.size() == 1 && !sing_a2.is_curve, "A2 form has one singular point");
    s.check(find_singular_points(diag_c(Rat(1), Rat(1))).is_curve,
            "first-kind reducible form is singular along a curve");
    s.check(find_singular_points(c3_normal_form()).is_curve,
            "second-kind reducible form is singular along a curve");
}

void suite_conic_pairs(Rng& rng, Suite& s)
{
    Conic u = upsilon_normal_form();
    s.check(classify_pair(u, u) == TangencyType::Equal, "equal pair");
    s.check(classify_pair(u, bitangent_partner(Rat(2), Rat(1))) == TangencyType::Bitangent,
            "pencil member is bitangent");
    s.check(classify_pair(u, quadritangent_partner(Rat(1), Rat(1))) == TangencyType::Quadritangent,
            "osculating pencil member is quadritangent");
    s.check(intersection_multiplicities(u, bitangent_partner(Rat(2), Rat(1))) ==
                (std::vector<int>{2, 2}),
            "bitangent multiplicities");
    s.check(intersection_multiplicities(u, quadritangent_partner(Rat(1), Rat(1))) ==
                (std::vector<int>{4}),
            "quadritangent multiplicities");

    for (int it = 0; it < 20; ++it) {
        Rat a = rng.rat(1, 9), b = rng.rat(1, 9);
        if (a == b) b += 1; // stay away from Upsilon itself
        s.check(classify_pair(u, bitangent_partner(a, b)) == TangencyType::Bitangent,
                "random pencil member bitangent, case " + num(it));
    }

    // coordinate-change invariance
    for (int it = 0; it < 100; ++it) {
        RatMatrix t = random_invertible3(rng);
        auto move = [&](const Conic& c) { return Conic(t.transpose() * c.gram() * t); };
        TangencyType want = it % 3 == 0   ? TangencyType::Bitangent
                            : it % 3 == 1 ? TangencyType::Quadritangent
                                          : TangencyType::NotEvenTouching;
        Conic j = it % 3 == 0   ? bitangent_partner(Rat(3), Rat(1))
                  : it % 3 == 1 ? quadritangent_partner(Rat(1), Rat(2))
                                : Conic::from_upper_triangle(
                                      {Rat(1), Rat(0), Rat(0), Rat(1), Rat(0), Rat(-1)});
        s.check(classify_pair(move(u), move(j)) == want,
                "classification invariant under coordinate change, case " + num(it));
    }

    // emitted generators preserve both normal-form conics exactly
    {
        auto bit = pair_stabilizer(TangencyType::Bitangent);
        for (const auto& gmat : bit.generators) {
            s.check(preserves_conic(gmat, u), "bitangent generator preserves the base conic");
            s.check(preserves_conic(gmat, bitangent_partner(Rat(2), Rat(1))),
                    "bitangent generator preserves the partner");
        }
        auto quad = pair_stabilizer(TangencyType::Quadritangent);
        for (const auto& gmat : quad.generators) {
            s.check(preserves_conic(gmat, u), "quadritangent generator preserves the base conic");
            s.check(preserves_conic(gmat, quadritangent_partner(Rat(1), Rat(1))),
                    "quadritangent generator preserves the partner");
        }
    }

    // multiplicities always sum to 4 when defined
    for (int it = 0; it < 50; ++it) {
        RatVec six(6);
        for (auto& x : six) x = rng.rat(-4, 4);
        bool zero = true;
        for (const auto& x : six) zero &= is_zero(x);
        if (zero) continue;
        Conic j = Conic::from_upper_triangle(six);
        if (j.proportional_to(u)) continue;
        auto m = intersection_multiplicities(u, j);
        s.check(std::accumulate(m.begin(), m.end(), 0) == 4,
                "multiplicities sum to 4, case " + num(it));
    }
}

void suite_ledger(Rng& rng, Suite& s)
{
    for (const auto& chk : verify_ledger_identities())
        s.check(chk.pass, "identity: " + chk.name);

    const MomentTable w = builtin_w_table();
    auto random_expr = [&](int deg) {
        ClassExpr e;
        ClassExpr h = ClassExpr::generator(0), a = ClassExpr::generator(1);
        for (int i = 0; i <= deg; ++i)
            e = e + h.pow(i) * a.pow(deg - i) * ClassExpr::constant(rng.rat(-5, 5));
        if (e.is_zero()) e = h.pow(deg);
        return e;
    };
    for (int it = 0; it < 40; ++it) {
        ClassExpr e = random_expr(1), f = random_expr(1);
        ClassExpr g3 = random_expr(3);
        Rat a = rng.rat(-5, 5);
        if ((e.scaled(a) + f).is_zero()) continue;
        Rat lhs = evaluate(w, {e.scaled(a) + f, g3});
        Rat rhs = a * evaluate(w, {e, g3}) + evaluate(w, {f, g3});
        s.check(lhs == rhs, "evaluate is multilinear, case " + num(it));
    }
    for (int it = 0; it < 40; ++it) {
        ClassExpr e = random_expr(1), f = random_expr(1), g = random_expr(2);
        s.check(evaluate(w, {e, f, g}) == evaluate(w, {g, e, f}),
                "evaluate is symmetric in the factors, case " + num(it));
    }
}

void suite_binary_cubic(Rng& rng, Suite& s)
{
    auto cube = [](long u, long v) {
        BinaryCubic f;
        Rat a(u), b(v);
        f.a = {a * a * a, 3 * a * a * b, 3 * a * b * b, b * b * b};
        return f;
    };
    auto linear_product = [](std::array<std::pair<long, long>, 3> ls) {
        BinaryCubic f;
        // (u0 x + v0 y)(u1 x + v1 y)(u2 x + v2 y)
        std::array<Rat, 4> c{Rat(0), Rat(0), Rat(0), Rat(0)};
        c[0] = Rat(ls[0].first * ls[1].first * ls[2].first);
        c[1] = Rat(ls[0].first * ls[1].first * ls[2].second +
                   ls[0].first * ls[1].second * ls[2].first +
                   ls[0].second * ls[1].first * ls[2].first);
        c[2] = Rat(ls[0].first * ls[1].second * ls[2].second +
                   ls[0].second * ls[1].first * ls[2].second +
                   ls[0].second * ls[1].second * ls[2].first);
        c[3] = Rat(ls[0].second * ls[1].second * ls[2].second);
        f.a = c;
        return f;
    };

    const std::vector<std::pair<P4Point, OrbitLabel>> reps{
        {P4Point(BinaryCubic{}, Rat(1)), OrbitLabel::VertexP},
        {P4Point(cube(1, 0), Rat(0)), OrbitLabel::GammaCurve},
        {P4Point(BinaryCubic{{Rat(0), Rat(1), Rat(0), Rat(0)}}, Rat(0)),
         OrbitLabel::TangentDevelopable},
        {P4Point(BinaryCubic{{Rat(0), Rat(1), Rat(1), Rat(0)}}, Rat(0)),
         OrbitLabel::GenericPlanePoint},
        {P4Point(cube(0, 1), Rat(1)), OrbitLabel::ConeMinus},
        {P4Point(BinaryCubic{{Rat(0), Rat(1), Rat(0), Rat(0)}}, Rat(1)), OrbitLabel::DeltaMixed},
        {P4Point(BinaryCubic{{Rat(0), Rat(1), Rat(1), Rat(0)}}, Rat(1)), OrbitLabel::OpenOrbit},
    };
    for (std::size_t r = 0; r < reps.size(); ++r)
        s.check(classify_point(reps[r].first) == reps[r].second,
                "orbit representative " + num(r));

    for (std::size_t r = 0; r < reps.size(); ++r) {
        // translations only on the hyperplane at infinity: the strata are
        // GL2 orbits, and the full affine group merges the c != 0 ones
        const bool at_infinity = is_zero(reps[r].first.c);
        for (int it = 0; it < 50; ++it) {
            RatMatrix g = random_invertible2(rng);
            BinaryCubic h;
            if (at_infinity)
                for (auto& x : h.a) x = rng.rat(-3, 3);
            P4Point moved = act(h, g, reps[r].first);
            s.check(classify_point(moved) == reps[r].second,
                    "orbit invariance, rep " + num(r) + " case " + num(it));
        }
        Rat lam = rng.rat(1, 9);
        P4Point scaled(reps[r].first.f.scaled(lam), reps[r].first.c * lam);
        s.check(classify_point(scaled) == reps[r].second, "scaling invariance, rep " + num(r));
    }

    // root-type invariance under substitution
    for (int it = 0; it < 50; ++it) {
        BinaryCubic f;
        for (auto& x : f.a) x = rng.rat(-4, 4);
        RatMatrix g = random_invertible2(rng);
        s.check(cubic_root_type(f) == cubic_root_type(compose_linear(f, g)),
                "root type invariant under substitution, case " + num(it));
    }

    // Hessian criterion against planted factorizations
    for (int it = 0; it < 200; ++it) {
        int kind = it % 3;
        long u0 = rng.range(-4, 4), v0 = rng.range(-4, 4);
        if (u0 == 0 && v0 == 0) u0 = 1;
        long u1 = rng.range(-4, 4), v1 = rng.range(-4, 4);
        if (u1 == 0 && v1 == 0) v1 = 1;
        if (u0 * v1 == u1 * v0) { u1 = v0 + 1; v1 = u0 == 0 ? 1 : -u0; }
        long u2 = u0 + u1, v2 = v0 + v1 + 1;
        if (u0 * v2 == u2 * v0 || u1 * v2 == u2 * v1) { u2 = u0 - u1; v2 = v0 - v1 + 3; }
        if (u2 == 0 && v2 == 0) u2 = 1;
        BinaryCubic f;
        CubicRootType want;
        if (kind == 0) {
            f = cube(u0, v0);
            want = CubicRootType::TripleRoot;
        } else if (kind == 1) {
            f = linear_product({{{u0, v0}, {u0, v0}, {u1, v1}}});
            want = CubicRootType::DoubleRoot;
        } else {
            if (u0 * v2 == u2 * v0 || u1 * v2 == u2 * v1) continue;
            f = linear_product({{{u0, v0}, {u1, v1}, {u2, v2}}});
            want = CubicRootType::ThreeDistinct;
        }
        s.check(cubic_root_type(f) == want, "planted root structure, case " + num(it));
    }
}

void suite_pipeline(Rng& rng, Suite& s)
{
    const G2Structure& lie = g2();

    auto rep_generic = classify_fourfold(sample_generic());
    s.check(rep_generic.variety_name == VarietyName::Generic &&
                rep_generic.aut0 == Aut0Section::Torus2 &&
                rep_generic.cubic_cone_count == ConeCount::Six &&
                rep_generic.sigma_s_type == SigmaSType::SmoothDP6,
            "generic sample report");
    auto rep_s = classify_fourfold(sample_v18s());
    s.check(rep_s.variety_name == VarietyName::V18s && rep_s.aut0 == Aut0Section::GL2 &&
                rep_s.cubic_cone_count == ConeCount::TwoFamiliesPlusTwo &&
                rep_s.sigma_s_type == SigmaSType::ReducibleFirstKind,
            "V18s sample report");
    auto rep_a = classify_fourfold(sample_v18a());
    s.check(rep_a.variety_name == VarietyName::V18a && rep_a.aut0 == Aut0Section::GaGm &&
                rep_a.cubic_cone_count == ConeCount::Four &&
                rep_a.sigma_s_type == SigmaSType::TypeA1,
            "V18a sample report");

    s.check(cross_check_with_flag_sextic(rep_a, c1_normal_form()), "cross-check V18a vs C1");
    s.check(cross_check_with_flag_sextic(rep_s, diag_c(Rat(1), Rat(1))),
            "cross-check V18s vs diag(1,1,-2)");
    s.check(!cross_check_with_flag_sextic(rep_a, c2_normal_form()),
            "A2 sections are never demanded");
    s.check(cross_check_with_flag_sextic(rep_generic, diag_c(Rat(1), Rat(2))),
            "cross-check generic vs smooth sextic");

    // trichotomy invariance under unipotent conjugation
    const std::array<std::pair<G2Element, VarietyName>, 3> samples{
        {{sample_generic(), VarietyName::Generic},
         {sample_v18s(), VarietyName::V18s},
         {sample_v18a(), VarietyName::V18a}}};
    for (int which = 0; which < 3; ++which) {
        for (int it = 0; it < 10; ++it) {
            RatMatrix m = random_unipotent_conjugator(rng, 2);
            auto rep = classify_fourfold(conjugate(m, samples[which].first));
            s.check(rep.variety_name == samples[which].second,
                    "conjugation keeps the class, sample " + num(which) + " case " + num(it));
        }
    }

    // report invariants on inputs spanning all classes
    for (int it = 0; it < 200; ++it) {
        G2Element g;
        switch (it % 5) {
        case 0: g = samples[0].first; break;
        case 1: g = samples[1].first; break;
        case 2: g = samples[2].first; break;
        case 3: g = lie.cartan_element(rng.rat(1, 4), Rat(0)); break; // long root killed
        default: g = lie.root_vector(static_cast<int>(rng.below(12))); break;
        }
        if (it >= 5 && it % 7 == 0) g = conjugate(random_unipotent_conjugator(rng, 1), g);
        auto rep = classify_fourfold(g);
        if (!rep.section_smooth) {
            s.check(!rep.aut0 && !rep.variety_name && !rep.sigma_s_type,
                    "singular section carries no smooth-case fields, case " + num(it));
            continue;
        }
        bool gl2 = rep.aut0 == Aut0Section::GL2;
        bool gagm = rep.aut0 == Aut0Section::GaGm;
        bool torus = rep.aut0 == Aut0Section::Torus2;
        s.check(gl2 == (rep.variety_name == VarietyName::V18s) &&
                    gl2 == (rep.sigma_s_type == SigmaSType::ReducibleFirstKind),
                "GL2 chain, case " + num(it));
        s.check(gagm == (rep.variety_name == VarietyName::V18a) &&
                    gagm == (rep.sigma_s_type == SigmaSType::TypeA1) &&
                    gagm == (rep.cubic_cone_count == ConeCount::Four),
                "GaGm chain, case " + num(it));
        s.check(torus == (rep.sigma_s_type == SigmaSType::SmoothDP6) &&
                    torus == (rep.cubic_cone_count == ConeCount::Six),
                "torus chain, case " + num(it));
    }

    // identical inputs give byte-identical reports
    G2Element probe = sample_v18a();
    std::string once = classification_report_to_json(classify_fourfold(probe)).dump();
    std::string twice = classification_report_to_json(classify_fourfold(probe)).dump();
    s.check(once == twice, "classification is deterministic");
}

} // namespace

SelftestOutcome run_selftest(std::uint64_t seed)
{
    struct Entry {
        const char* name;
        void (*fn)(Rng&, Suite&);
    };
    const std::array<Entry, 7> entries{{
        {"exact_core", suite_exact_core},
        {"g2_algebra", suite_g2},
        {"flag_sextic", suite_flag_sextic},
        {"conic_pairs", suite_conic_pairs},
        {"intersection_ledger", suite_ledger},
        {"binary_cubic_orbits", suite_binary_cubic},
        {"fm_pipeline", suite_pipeline},
    }};

    auto fnv = [](const char* s) {
        std::uint64_t h = 1469598103934665603ULL;
        for (; *s; ++s) h = (h ^ static_cast<unsigned char>(*s)) * 1099511628211ULL;
        return h;
    };

    SelftestOutcome out;
    out.pass = true;
    nlohmann::json suites = nlohmann::json::array();
    for (const auto& entry : entries) {
        Rng rng(seed ^ fnv(entry.name));
        Suite suite;
        suite.name = entry.name;
        entry.fn(rng, suite);
        nlohmann::json j;
        j["name"] = suite.name;
        j["cases"] = suite.cases;
        j["failed"] = static_cast<long>(suite.failures.size()) + suite.overflow;
        j["failures"] = suite.failures;
        suites.push_back(j);
        if (!suite.failures.empty() || suite.overflow > 0) out.pass = false;
    }
    out.report["schema"] = "fm18.selftest/1";
    out.report["seed"] = seed;
    out.report["suites"] = suites;
    out.report["pass"] = out.pass;
    return out;
}

} // namespace fm18
