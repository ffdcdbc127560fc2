#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fm18/conic_pairs.hpp"

#include <random>

using namespace fm18;

TEST_CASE("intersection multiplicities of the two pencils")
{
    Conic u = upsilon_normal_form();
    CHECK(intersection_multiplicities(u, bitangent_partner(Rat(2), Rat(1))) ==
          std::vector<int>{2, 2});
    CHECK(intersection_multiplicities(u, quadritangent_partner(Rat(1), Rat(1))) ==
          std::vector<int>{4});
    // x^2 + y^2 - z^2 meets the base conic in four distinct points
    Conic j = Conic::from_upper_triangle({Rat(1), Rat(0), Rat(0), Rat(1), Rat(0), Rat(-1)});
    CHECK(intersection_multiplicities(u, j) == std::vector<int>{1, 1, 1, 1});

    // x^2 + yz + xz restricted to the parametrization (ts : -t^2 : s^2) of
    // the base conic leaves t s^3: one transversal point and one contact of
    // order three
    Conic flex = Conic::from_upper_triangle(
        {Rat(1), Rat(0), Rat(1, 2), Rat(0), Rat(1, 2), Rat(0)});
    CHECK(intersection_multiplicities(u, flex) == std::vector<int>{1, 3});
    CHECK(classify_pair(u, flex) == TangencyType::NotEvenTouching);
}

TEST_CASE("error paths")
{
    Conic u = upsilon_normal_form();
    Conic degenerate = Conic::from_upper_triangle({Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)});
    CHECK_THROWS_WITH_AS(intersection_multiplicities(degenerate, u),
                         doctest::Contains("base conic singular"), std::invalid_argument);
    // x^2 + y^2 + z^2 has no rational point
    Conic anisotropic =
        Conic::from_upper_triangle({Rat(1), Rat(0), Rat(0), Rat(1), Rat(0), Rat(1)});
    CHECK_THROWS_WITH_AS(intersection_multiplicities(anisotropic, u),
                         doctest::Contains("no rational parametrization"), std::invalid_argument);
    CHECK_THROWS_AS(intersection_multiplicities(u, u), std::invalid_argument);
    CHECK_THROWS_AS(pair_stabilizer(TangencyType::NotEvenTouching), std::invalid_argument);
}

TEST_CASE("pair classification")
{
    Conic u = upsilon_normal_form();
    CHECK(classify_pair(u, u) == TangencyType::Equal);
    CHECK(classify_pair(u, bitangent_partner(Rat(3), Rat(1))) == TangencyType::Bitangent);
    CHECK(classify_pair(u, quadritangent_partner(Rat(1), Rat(2))) == TangencyType::Quadritangent);
    Conic j = Conic::from_upper_triangle({Rat(1), Rat(0), Rat(0), Rat(1), Rat(0), Rat(-1)});
    CHECK(classify_pair(u, j) == TangencyType::NotEvenTouching);
    // scaling the Gram matrix changes nothing
    CHECK(classify_pair(u, Conic(u.gram().scaled(Rat(5)))) == TangencyType::Equal);
}

TEST_CASE("stabilizers preserve both conics exactly")
{
    Conic u = upsilon_normal_form();

    auto bit = pair_stabilizer(TangencyType::Bitangent);
    CHECK(bit.group == PairGroup::Gm_semidirect_Z2);
    REQUIRE(bit.generators.size() == 2);
    for (const auto& g : bit.generators) {
        CHECK(preserves_conic(g, u));
        CHECK(preserves_conic(g, bitangent_partner(Rat(2), Rat(1))));
        CHECK(preserves_conic(g, bitangent_partner(Rat(5), Rat(3))));
    }

    auto quad = pair_stabilizer(TangencyType::Quadritangent);
    CHECK(quad.group == PairGroup::Ga_semidirect_Z2);
    REQUIRE(quad.generators.size() == 2);
    for (const auto& g : quad.generators) {
        CHECK(preserves_conic(g, u));
        CHECK(preserves_conic(g, quadritangent_partner(Rat(1), Rat(1))));
        CHECK(preserves_conic(g, quadritangent_partner(Rat(2), Rat(-3))));
    }

    auto eq = pair_stabilizer(TangencyType::Equal);
    CHECK(eq.group == PairGroup::PGL2);
    CHECK(eq.generators.empty());
}

TEST_CASE("section groups attached to the tangency types")
{
    CHECK(pair_to_aut0V(TangencyType::Equal) == Aut0FromPair::GL2);
    CHECK(pair_to_aut0V(TangencyType::Quadritangent) == Aut0FromPair::GaGm);
    CHECK(pair_to_aut0V(TangencyType::Bitangent) == Aut0FromPair::Torus2);
    CHECK_THROWS_AS(pair_to_aut0V(TangencyType::NotEvenTouching), std::invalid_argument);
}

TEST_CASE("classification survives coordinate changes")
{
    std::mt19937_64 rng(5);
    Conic u = upsilon_normal_form();
    for (int it = 0; it < 40; ++it) {
        RatMatrix t(3, 3);
        do {
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) t.at(i, j) = Rat(-3 + static_cast<long>(rng() % 7));
        } while (is_zero(determinant(t)));
        auto move = [&](const Conic& c) { return Conic(t.transpose() * c.gram() * t); };
        CHECK(classify_pair(move(u), move(bitangent_partner(Rat(4), Rat(1)))) ==
              TangencyType::Bitangent);
        CHECK(classify_pair(move(u), move(quadritangent_partner(Rat(1), Rat(3)))) ==
              TangencyType::Quadritangent);
    }
}

TEST_CASE("pencil members stay bitangent")
{
    std::mt19937_64 rng(9);
    Conic u = upsilon_normal_form();
    for (int it = 0; it < 20; ++it) {
        Rat a(1 + static_cast<long>(rng() % 9)), b(1 + static_cast<long>(rng() % 9));
        if (a == b) continue; // that member is the base conic itself
        CHECK(classify_pair(u, bitangent_partner(a, b)) == TangencyType::Bitangent);
    }
}
