#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fm18/binary_cubic.hpp"

#include <random>

using namespace fm18;

namespace {

BinaryCubic cubic(long a0, long a1, long a2, long a3)
{
    return BinaryCubic{{Rat(a0), Rat(a1), Rat(a2), Rat(a3)}};
}

RatMatrix mat2(long a, long b, long c, long d)
{
    RatMatrix m(2, 2);
    m.at(0, 0) = a;
    m.at(0, 1) = b;
    m.at(1, 0) = c;
    m.at(1, 1) = d;
    return m;
}

} // namespace

TEST_CASE("root types")
{
    CHECK(cubic_root_type(cubic(1, 0, 0, 0)) == CubicRootType::TripleRoot);    // x^3
    CHECK(cubic_root_type(cubic(0, 1, 0, 0)) == CubicRootType::DoubleRoot);    // x^2 y
    CHECK(cubic_root_type(cubic(0, 1, 1, 0)) == CubicRootType::ThreeDistinct); // xy(x+y)
    CHECK(cubic_root_type(cubic(0, 0, 0, 0)) == CubicRootType::Zero);
    // (x+y)^3
    CHECK(cubic_root_type(cubic(1, 3, 3, 1)) == CubicRootType::TripleRoot);
    CHECK(cubic(0, 1, 0, 0).hessian() == std::array<Rat, 3>{Rat(-1), Rat(0), Rat(0)});
    CHECK(is_zero(cubic(0, 1, 0, 0).disc()));
    CHECK(cubic(0, 1, 1, 0).disc() == Rat(1));
}

TEST_CASE("the affine-extension action")
{
    P4Point p(cubic(1, 0, 1, 0), Rat(2));
    P4Point same = act(BinaryCubic{}, RatMatrix::identity(2), p);
    CHECK(same.f == p.f);
    CHECK(same.c == p.c);

    // points with c = 0 are fixed by translations
    P4Point plane(cubic(1, 2, 3, 4), Rat(0));
    P4Point moved = act(cubic(9, 9, 9, 9), RatMatrix::identity(2), plane);
    CHECK(moved.f == plane.f);
    CHECK(is_zero(moved.c));

    // h = x^3 applied to (0, 1) gives (x^3, 1)
    P4Point vertex(BinaryCubic{}, Rat(1));
    P4Point t = act(cubic(1, 0, 0, 0), RatMatrix::identity(2), vertex);
    CHECK(t.f == cubic(1, 0, 0, 0));
    CHECK(t.c == Rat(1));

    CHECK_THROWS_AS(act(BinaryCubic{}, mat2(1, 2, 2, 4), p), std::invalid_argument);
    CHECK_THROWS_AS(P4Point(BinaryCubic{}, Rat(0)), std::invalid_argument);
}

TEST_CASE("composition with a linear substitution")
{
    // x^3 under x -> x + y becomes (x + y)^3
    BinaryCubic f = cubic(1, 0, 0, 0);
    CHECK(compose_linear(f, mat2(1, 1, 0, 1)) == cubic(1, 3, 3, 1));
    // root type is invariant under invertible substitutions
    std::mt19937_64 rng(3);
    for (int it = 0; it < 50; ++it) {
        BinaryCubic g;
        for (auto& x : g.a) x = Rat(-4 + static_cast<long>(rng() % 9));
        RatMatrix m = mat2(1, -3 + static_cast<long>(rng() % 7), 0, 1); // unipotent-ish
        m.at(1, 0) = Rat(-2 + static_cast<long>(rng() % 5));
        if (is_zero(determinant(m))) continue;
        CHECK(cubic_root_type(g) == cubic_root_type(compose_linear(g, m)));
    }
}

TEST_CASE("the seven orbits")
{
    CHECK(classify_point(P4Point(BinaryCubic{}, Rat(1))) == OrbitLabel::VertexP);
    CHECK(classify_point(P4Point(cubic(1, 0, 0, 0), Rat(0))) == OrbitLabel::GammaCurve);
    CHECK(classify_point(P4Point(cubic(0, 1, 0, 0), Rat(0))) == OrbitLabel::TangentDevelopable);
    CHECK(classify_point(P4Point(cubic(0, 1, 1, 0), Rat(0))) == OrbitLabel::GenericPlanePoint);
    CHECK(classify_point(P4Point(cubic(0, 0, 0, 1), Rat(1))) == OrbitLabel::ConeMinus);
    CHECK(classify_point(P4Point(cubic(0, 1, 0, 0), Rat(1))) == OrbitLabel::DeltaMixed);
    CHECK(classify_point(P4Point(cubic(0, 1, 1, 0), Rat(1))) == OrbitLabel::OpenOrbit);
}

TEST_CASE("orbit labels are action and scaling invariants")
{
    std::mt19937_64 rng(17);
    const std::vector<std::pair<P4Point, OrbitLabel>> reps{
        {P4Point(BinaryCubic{}, Rat(1)), OrbitLabel::VertexP},
        {P4Point(cubic(1, 0, 0, 0), Rat(0)), OrbitLabel::GammaCurve},
        {P4Point(cubic(0, 1, 0, 0), Rat(0)), OrbitLabel::TangentDevelopable},
        {P4Point(cubic(0, 1, 1, 0), Rat(0)), OrbitLabel::GenericPlanePoint},
        {P4Point(cubic(1, 0, 0, 0), Rat(1)), OrbitLabel::ConeMinus},
        {P4Point(cubic(0, 1, 0, 0), Rat(1)), OrbitLabel::DeltaMixed},
        {P4Point(cubic(0, 1, 1, 0), Rat(1)), OrbitLabel::OpenOrbit},
    };
    for (const auto& [rep, want] : reps) {
        // The seven strata are GL2 orbits. Translations preserve the
        // hyperplane c = 0 pointwise in h, so they may enter there; on
        // c != 0 they slide between strata (the full affine group has
        // only four orbits), so there the test acts by GL2 alone.
        const bool at_infinity = is_zero(rep.c);
        for (int it = 0; it < 20; ++it) {
            RatMatrix g(2, 2);
            do {
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j)
                        g.at(i, j) = Rat(-4 + static_cast<long>(rng() % 9));
            } while (is_zero(determinant(g)));
            BinaryCubic h;
            if (at_infinity)
                for (auto& x : h.a) x = Rat(-3 + static_cast<long>(rng() % 7));
            CHECK(classify_point(act(h, g, rep)) == want);
        }
        P4Point scaled(rep.f.scaled(Rat(7)), rep.c * Rat(7));
        CHECK(classify_point(scaled) == want);
    }
}

TEST_CASE("translations sweep the affine chart onto the cone strata")
{
    // act((h, id)) sends the vertex (0, 1) to (h, 1); the resulting label
    // is pinned by the root type of h.
    P4Point vertex(BinaryCubic{}, Rat(1));
    CHECK(classify_point(act(cubic(1, 0, 0, 0), RatMatrix::identity(2), vertex)) ==
          OrbitLabel::ConeMinus);
    CHECK(classify_point(act(cubic(0, 1, 0, 0), RatMatrix::identity(2), vertex)) ==
          OrbitLabel::DeltaMixed);
    CHECK(classify_point(act(cubic(0, 1, 1, 0), RatMatrix::identity(2), vertex)) ==
          OrbitLabel::OpenOrbit);
}
