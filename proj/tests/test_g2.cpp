#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fm18/g2.hpp"

#include <random>

using namespace fm18;

TEST_CASE("root system normalization")
{
    const RootSystemG2 rs;
    G2Root a1{1, 0}, a2{0, 1};
    CHECK(RootSystemG2::inner(a1, a1) == 2);
    CHECK(RootSystemG2::inner(a2, a2) == 6);
    CHECK(RootSystemG2::inner(a1, a2) == -3);
    CHECK(rs.long_indices().size() == 6);
    CHECK(rs.short_indices().size() == 6);
    for (const auto& r : rs.roots()) CHECK(rs.is_root(-r.m, -r.n));
}

TEST_CASE("structure basics")
{
    const G2Structure& lie = g2();
    CHECK(G2Structure::dim == 14);
    CHECK(G2Structure::rank == 2);

    // [e_{a1}, e_{-a1}] lies in the Cartan subalgebra
    G2Element b = lie.bracket(lie.root_vector(0), lie.root_vector(6));
    CHECK(!b.is_zero());
    for (int i = 2; i < 14; ++i) CHECK(is_zero(b.c[i]));

    // a Cartan element acts diagonally with the root values
    G2Element h = lie.cartan_element(Rat(1), Rat(1));
    RatMatrix ad = lie.ad_matrix(h);
    const long expected[12] = {1, 1, 2, 3, 4, 5, -1, -1, -2, -3, -4, -5};
    for (int i = 0; i < 14; ++i)
        for (int j = 0; j < 14; ++j) {
            if (i != j) CHECK(is_zero(ad.at(i, j)));
            else if (j < 2) CHECK(is_zero(ad.at(i, i)));
            else CHECK(ad.at(i, i) == Rat(expected[j - 2]));
        }
}

TEST_CASE("structure constant magnitudes follow the root strings")
{
    // |N_{a,b}| = p + 1 with p the length of the a-string below b. For the
    // five special pairs of positive roots this gives 1, 2, 3, 1, 3 in any
    // sign convention.
    const G2Structure& lie = g2();
    const RootSystemG2& rs = lie.root_system();
    auto magnitude = [&](int i, int j) -> Rat {
        const auto& ri = rs.roots()[i];
        const auto& rj = rs.roots()[j];
        int s = rs.index_of(ri.m + rj.m, ri.n + rj.n);
        REQUIRE(s >= 0);
        G2Element b = lie.bracket(lie.root_vector(i), lie.root_vector(j));
        return Rat(abs(b.c[G2Structure::root_basis_index(s)]));
    };
    CHECK(magnitude(0, 1) == 1); // a1 + a2
    CHECK(magnitude(0, 2) == 2); // a1 + (a1+a2)
    CHECK(magnitude(0, 3) == 3); // a1 + (2a1+a2)
    CHECK(magnitude(1, 4) == 1); // a2 + (3a1+a2)
    CHECK(magnitude(2, 3) == 3); // (a1+a2) + (2a1+a2)
}

TEST_CASE("ad of the highest root vector has rank 6")
{
    const G2Structure& lie = g2();
    // the highest root 3a1 + 2a2 sits at index 5
    CHECK(matrix_rank(lie.ad_matrix(lie.root_vector(5))) == 6);
    CHECK(lie.centralizer_dim(lie.root_vector(5)) == 8);
}

TEST_CASE("centralizer dimensions")
{
    const G2Structure& lie = g2();
    CHECK(lie.centralizer_dim(G2Element::zero()) == 14);
    CHECK(lie.centralizer_dim(lie.cartan_element(Rat(1), Rat(1))) == 2);
    CHECK(lie.centralizer_dim(lie.cartan_element(Rat(0), Rat(1))) == 4);
}

TEST_CASE("jordan decomposition on the three sample shapes")
{
    const G2Structure& lie = g2();
    G2Element h = lie.cartan_element(Rat(2), Rat(3));
    auto [s1, n1] = lie.jordan_decomposition(h);
    CHECK(s1 == h);
    CHECK(n1.is_zero());

    G2Element e = lie.root_vector(0);
    auto [s2, n2] = lie.jordan_decomposition(e);
    CHECK(s2.is_zero());
    CHECK(n2 == e);

    G2Element h0 = lie.cartan_element(Rat(0), Rat(1));
    auto [s3, n3] = lie.jordan_decomposition(h0 + e);
    CHECK(s3 == h0);
    CHECK(n3 == e);
}

TEST_CASE("invariant sextics")
{
    const G2Structure& lie = g2();
    auto [dl, ds] = lie.invariant_sextics(lie.cartan_element(Rat(1), Rat(1)));
    CHECK(dl == Rat(-400));
    CHECK(ds == Rat(-36));

    auto [dl0, ds0] = lie.invariant_sextics(lie.cartan_element(Rat(0), Rat(5)));
    CHECK(is_zero(ds0));
    CHECK(!is_zero(dl0));

    auto [dln, dsn] = lie.invariant_sextics(lie.root_vector(0));
    CHECK(is_zero(dln));
    CHECK(is_zero(dsn));
}

TEST_CASE("element classification and section groups")
{
    const G2Structure& lie = g2();
    OrbitClass generic = lie.classify_element(lie.cartan_element(Rat(1), Rat(1)));
    CHECK(generic.tag == OrbitTag::RegularSemisimple);
    CHECK(generic.centralizer_dim == 2);
    CHECK(!generic.in_D_long);
    CHECK(!generic.in_D_short);
    CHECK(aut0_of_section(generic) == Aut0Section::Torus2);

    OrbitClass sub = lie.classify_element(lie.cartan_element(Rat(0), Rat(1)));
    CHECK(sub.tag == OrbitTag::SubregularSemisimple);
    CHECK(sub.centralizer_dim == 4);
    CHECK(!sub.in_D_long);
    CHECK(sub.in_D_short);
    CHECK(aut0_of_section(sub) == Aut0Section::GL2);

    OrbitClass mixed =
        lie.classify_element(lie.cartan_element(Rat(0), Rat(1)) + lie.root_vector(0));
    CHECK(mixed.tag == OrbitTag::RegularMixed);
    CHECK(mixed.centralizer_dim == 2);
    CHECK(!mixed.in_D_long);
    CHECK(mixed.in_D_short);
    CHECK(aut0_of_section(mixed) == Aut0Section::GaGm);

    OrbitClass nil = lie.classify_element(lie.root_vector(3));
    CHECK(nil.tag == OrbitTag::Nilpotent);
    CHECK(nil.in_D_long);
    CHECK(aut0_of_section(nil) == Aut0Section::SectionSingular);
}

TEST_CASE("killing form values on the Cartan")
{
    // kappa(h, h') = sum over roots of a(h) a(h'). With a(h1) running over
    // +-{2, -3, -1, 1, 3, 0} and a(h2) over +-{-1, 2, 1, 0, -1, 1} this gives
    // 48, -24 and 16 exactly.
    const G2Structure& lie = g2();
    const RatMatrix& k = lie.killing_form();
    CHECK(k.at(0, 0) == Rat(48));
    CHECK(k.at(0, 1) == Rat(-24));
    CHECK(k.at(1, 0) == Rat(-24));
    CHECK(k.at(1, 1) == Rat(16));

    // kappa(e_a, e_{-a}) = kappa(h_a, h_a) / 2: 24 for short roots, 8 for
    // long ones
    for (int r = 0; r < 12; ++r) {
        int neg = r < 6 ? r + 6 : r - 6;
        Rat want = RootSystemG2::is_long(lie.root_system().roots()[r]) ? Rat(8) : Rat(24);
        CHECK(lie.killing(lie.root_vector(r), lie.root_vector(neg)) == want);
    }
}

TEST_CASE("jordan decomposition beyond the Cartan")
{
    const G2Structure& lie = g2();

    // e + f in the sl2 of the short simple root is semisimple, conjugate to
    // the coroot h_{a1}; the long root 3a1 + 2a2 pairs to zero with it, so
    // the element is subregular and lies on the long-root sextic
    G2Element ef = lie.root_vector(0) + lie.root_vector(6);
    auto [s, n] = lie.jordan_decomposition(ef);
    CHECK(s == ef);
    CHECK(n.is_zero());
    CHECK(lie.centralizer_dim(ef) == 4);
    OrbitClass efc = lie.classify_element(ef);
    CHECK(efc.tag == OrbitTag::SubregularSemisimple);
    CHECK(efc.in_D_long);
    CHECK(!efc.in_D_short);

    // for the long simple root the same element lands on the short-root
    // sextic instead (the coroot h_{a2} is killed by 2a1 + a2)
    G2Element ef2 = lie.root_vector(1) + lie.root_vector(7);
    OrbitClass ef2c = lie.classify_element(ef2);
    CHECK(ef2c.tag == OrbitTag::SubregularSemisimple);
    CHECK(ef2c.centralizer_dim == 4);
    CHECK(!ef2c.in_D_long);
    CHECK(ef2c.in_D_short);
    CHECK(aut0_of_section(ef2c) == Aut0Section::GL2);

    // a sum of the two simple root vectors is a regular nilpotent element
    G2Element reg = lie.root_vector(0) + lie.root_vector(1);
    auto [s2, n2] = lie.jordan_decomposition(reg);
    CHECK(s2.is_zero());
    CHECK(n2 == reg);
    OrbitClass cls = lie.classify_element(reg);
    CHECK(cls.tag == OrbitTag::Nilpotent);
    CHECK(cls.centralizer_dim == 2);
    CHECK(cls.nilpotent_kind == 2);
    CHECK(cls.in_D_long);

    // the mixed class works with the opposite root vector too
    G2Element mixed = lie.cartan_element(Rat(0), Rat(1)) + lie.root_vector(6);
    CHECK(lie.classify_element(mixed).tag == OrbitTag::RegularMixed);

    // the four nonzero nilpotent orbits, by centralizer dimension:
    // minimal (long root vector) 8, next (short root vector) 6,
    // subregular (two long roots summing to a root) 4, regular 2
    CHECK(lie.classify_element(lie.root_vector(1)).nilpotent_kind == 8);
    CHECK(lie.classify_element(lie.root_vector(0)).nilpotent_kind == 6);
    CHECK(lie.classify_element(lie.root_vector(1) + lie.root_vector(4)).nilpotent_kind == 4);
    CHECK(lie.classify_element(lie.root_vector(0) + lie.root_vector(1)).nilpotent_kind == 2);

    CHECK_THROWS_AS(lie.exp_ad_nilpotent(lie.cartan_element(Rat(1), Rat(1))),
                    std::invalid_argument);
}

TEST_CASE("killing form and conjugation invariance")
{
    const G2Structure& lie = g2();
    std::mt19937_64 rng(11);
    auto rnd = [&](long lo, long hi) { return Rat(lo + static_cast<long>(rng() % (hi - lo + 1))); };
    auto random_el = [&] {
        G2Element g;
        for (int i = 0; i < 14; ++i)
            if (rng() % 2 == 0) g.c[i] = rnd(-4, 4);
        return g;
    };

    for (int it = 0; it < 25; ++it) {
        G2Element g = random_el(), x = random_el(), y = random_el();
        CHECK(is_zero(lie.killing(lie.bracket(g, x), y) + lie.killing(x, lie.bracket(g, y))));
    }

    for (int it = 0; it < 10; ++it) {
        G2Element h = lie.cartan_element(rnd(-3, 3), rnd(-3, 3));
        RatMatrix m = lie.exp_ad_nilpotent(lie.root_vector(rng() % 12).scaled(rnd(-2, 2)));
        RatVec moved = m.apply(RatVec(h.c.begin(), h.c.end()));
        G2Element hm;
        for (int i = 0; i < 14; ++i) hm.c[i] = moved[i];
        CHECK(lie.centralizer_dim(hm) == lie.centralizer_dim(h));
        // the sextics are invariant polynomials: exact equality, not just
        // the same vanishing pattern
        CHECK(lie.invariant_sextics(hm) == lie.invariant_sextics(h));
    }
}

TEST_CASE("structure dump is valid JSON with the right shape")
{
    std::string dump = g2().dump_json();
    CHECK(dump.find("\"dim\":14") != std::string::npos);
    CHECK(dump.find("h1") != std::string::npos);
}
