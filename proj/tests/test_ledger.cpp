#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fm18/ledger.hpp"

using namespace fm18;

TEST_CASE("builtin moments")
{
    auto w = builtin_w_table();
    CHECK(w.moments == std::array<long, 5>{5, 0, -5, -8, -6});
    auto v = builtin_v_table();
    CHECK(v.moments == std::array<long, 5>{18, 0, -3, -1, 1});
}

TEST_CASE("evaluation of the link classes")
{
    auto w = builtin_w_table();
    ClassExpr h = ClassExpr::generator(0), a = ClassExpr::generator(1);
    ClassExpr link = ClassExpr::constant(Rat(2)) * h - a;
    CHECK(evaluate(w, {link, link, link, link}) == Rat(18));
    ClassExpr b = h - a;
    CHECK(evaluate(w, {b, b, b, b}) == Rat(1));
    CHECK(evaluate(w, {link, link, link, b}) == Rat(0));
}

TEST_CASE("degenerate input is rejected")
{
    auto w = builtin_w_table();
    ClassExpr h = ClassExpr::generator(0);
    CHECK_THROWS_AS(evaluate(w, {h, h, h}), std::invalid_argument);          // degree 3
    CHECK_THROWS_AS(evaluate(w, {ClassExpr{}, h, h, h}), std::invalid_argument); // zero factor
    CHECK_THROWS_AS(evaluate(w, {h + ClassExpr::constant(Rat(1)), h, h, h}),
                    std::invalid_argument); // inhomogeneous
}

TEST_CASE("every recorded identity holds")
{
    auto checks = verify_ledger_identities();
    CHECK(checks.size() >= 20);
    for (const auto& c : checks) {
        INFO(c.name);
        CHECK(c.pass);
    }
}

TEST_CASE("expression parser")
{
    auto w = builtin_w_table();
    auto e = parse_class_expr("(2H-A)^3*(H-A)", "H", "A");
    CHECK(evaluate(w, {e}) == Rat(0));
    CHECK(evaluate(w, {parse_class_expr("(3H-A)^4", "H", "A")}) == Rat(225));
    CHECK(evaluate(w, {parse_class_expr("(2H-A)(2H-A)(2H-A)(2H-A)", "H", "A")}) == Rat(18));
    auto v = builtin_v_table();
    CHECK(evaluate(v, {parse_class_expr("(L-2B)^4", "L", "B")}) == Rat(-6));
    CHECK(evaluate(v, {parse_class_expr("L^4", "L", "B")}) == Rat(18));
    // rational coefficients work
    CHECK(evaluate(w, {parse_class_expr("(1/2 H)^4", "H", "A")}) == Rat(5, 16));
    CHECK_THROWS_AS(parse_class_expr("(2H-", "H", "A"), std::invalid_argument);
    CHECK_THROWS_AS(parse_class_expr("2H-Q", "H", "A"), std::invalid_argument);
}

TEST_CASE("multilinearity and symmetry")
{
    auto w = builtin_w_table();
    ClassExpr h = ClassExpr::generator(0), a = ClassExpr::generator(1);
    ClassExpr e = h - a, f = h + a.scaled(Rat(3)), g3 = (h * h * h) - (a * a * h);
    Rat lam(7, 2);
    CHECK(evaluate(w, {e.scaled(lam) + f, g3}) ==
          lam * evaluate(w, {e, g3}) + evaluate(w, {f, g3}));
    CHECK(evaluate(w, {e, f, h, a}) == evaluate(w, {a, h, f, e}));
}
