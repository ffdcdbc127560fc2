#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fm18/ratmatrix.hpp"
#include "fm18/unipoly.hpp"

#include <random>

using namespace fm18;

namespace {

UniPoly P(std::initializer_list<long> lowest_first)
{
    RatVec v;
    for (long x : lowest_first) v.emplace_back(x);
    return UniPoly{v};
}

} // namespace

TEST_CASE("gcd of polynomials")
{
    // common factor
    CHECK(poly_gcd(P({-1, 0, 1}), P({-1, 1})) == P({-1, 1}));
    // gcd with zero is the other argument made monic
    CHECK(poly_gcd(P({0, 0, 0, 1}), UniPoly::zero()) == P({0, 0, 0, 1}));
    CHECK(poly_gcd(UniPoly::zero(), UniPoly::zero()).is_zero());
    // coprime pair, worked out by the Euclidean algorithm by hand:
    // x^3+x+1 = (3x^2+1)(x/3) + (2x/3 + 1), then a nonzero constant remains
    CHECK(poly_gcd(P({1, 1, 0, 1}), P({1, 0, 3})) == P({1}));
}

TEST_CASE("squarefree part")
{
    CHECK(squarefree_part(P({0, 0, -1, 1})) == P({0, -1, 1})); // x^2(x-1) -> x(x-1)
    CHECK(squarefree_part(P({0, 0, 0, 1})) == P({0, 1}));      // x^3 -> x
    CHECK(squarefree_part(P({1, 1, 0, 1})) == P({1, 1, 0, 1})); // already squarefree
    CHECK_THROWS_AS(squarefree_part(UniPoly::zero()), std::domain_error);
}

TEST_CASE("discriminants")
{
    // x^2 + bx + c -> b^2 - 4c
    for (long b = -3; b <= 3; ++b)
        for (long c = -3; c <= 3; ++c)
            CHECK(discriminant(P({c, b, 1})) == Rat(b * b - 4 * c));
    // depressed cubic
    for (long p = -3; p <= 3; ++p)
        for (long q = -3; q <= 3; ++q) {
            if (p == 0 && q == 0) continue;
            CHECK(discriminant(P({q, p, 0, 1})) == Rat(-4 * p * p * p - 27 * q * q));
        }
    CHECK(discriminant(P({-1, 0, 0, 1})) == Rat(-27));
    CHECK_THROWS_AS(discriminant(P({5})), std::domain_error);
}

TEST_CASE("squarefree decomposition multiplicities")
{
    // x^2 (x-1)^3
    UniPoly f = P({0, 0, 1}) * P({-1, 1}) * P({-1, 1}) * P({-1, 1});
    auto dec = squarefree_decomposition(f);
    REQUIRE(dec.size() == 2);
    CHECK(dec[0].second == 2);
    CHECK(*dec[0].first.degree() == 1);
    CHECK(dec[1].second == 3);
    CHECK(*dec[1].first.degree() == 1);
}

TEST_CASE("rank, kernel, char poly basics")
{
    CHECK(matrix_rank(RatMatrix::identity(3)) == 3);

    RatMatrix d(3, 3);
    d.at(0, 0) = 1;
    d.at(1, 1) = 2;
    d.at(2, 2) = 3;
    CHECK(char_poly(d) == P({-6, 11, -6, 1}));

    RatMatrix row(1, 3);
    row.at(0, 0) = row.at(0, 1) = row.at(0, 2) = 1;
    CHECK(kernel_basis(row).size() == 2);
}

TEST_CASE("solve distinguishes inconsistent from zero solution")
{
    RatMatrix a(2, 2);
    a.at(0, 0) = 1;
    a.at(1, 0) = 1; // second column zero: singular
    RatVec incons{Rat(1), Rat(2)};
    CHECK(!solve_linear(a, incons).has_value());
    RatVec zero{Rat(0), Rat(0)};
    auto sol = solve_linear(a, zero);
    REQUIRE(sol.has_value());
    CHECK(is_zero((*sol)[0]));
    CHECK(is_zero((*sol)[1]));
}

TEST_CASE("random algebra properties")
{
    std::mt19937_64 rng(7);
    auto rnd = [&](long lo, long hi) { return Rat(lo + static_cast<long>(rng() % (hi - lo + 1))); };

    for (int it = 0; it < 60; ++it) {
        std::size_t n = 1 + rng() % 6;
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rnd(-9, 9);
        CHECK(eval_poly(char_poly(m), m).is_zero());
        UniPoly mu = minimal_polynomial(m);
        CHECK(eval_poly(mu, m).is_zero());
        CHECK(poly_divmod(char_poly(m), mu).second.is_zero());
    }

    for (int it = 0; it < 60; ++it) {
        std::size_t r = 1 + rng() % 14, c = 1 + rng() % 14;
        RatMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (rng() % 3 == 0) m.at(i, j) = rnd(-9, 9);
        CHECK(matrix_rank(m) + kernel_basis(m).size() == c);
    }
}
