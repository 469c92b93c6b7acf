#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wckit/errors.hpp"
#include "wckit/textio.hpp"

using namespace wc;

TEST_CASE("wcurve text form") {
    const auto curve = parse_wcurve("wcurve 5 1 0");
    CHECK(curve.p == 5);
    CHECK(curve.a == 1);
    CHECK(curve.b == 0);
    CHECK_THROWS_AS(parse_wcurve("wcurve 5 1"), validation_error);
    CHECK_THROWS_AS(parse_wcurve("curve 5 1 0"), validation_error);
    CHECK_THROWS_AS(parse_wcurve("wcurve 5 0 0"), validation_error); // singular
}

TEST_CASE("cubic text form uses the lex monomial order") {
    const auto cubic = parse_cubic("cubic 5 1 0 0 0 0 0 1 0 0 1");
    CHECK(cubic.p() == 5);
    CHECK(cubic.coeffs()[0] == 1); // x^3
    CHECK(cubic.coeffs()[6] == 1); // y^3
    CHECK(cubic.coeffs()[9] == 1); // z^3
    CHECK_THROWS_AS(parse_cubic("cubic 5 1 0 0"), validation_error);
}

TEST_CASE("rcurve text form") {
    const auto curve = parse_rcurve("rcurve a=-1/1 b=0/1");
    CHECK(curve.a == Rational(-1));
    CHECK(curve.b == Rational(0));
    CHECK_THROWS_AS(parse_rcurve("rcurve a=0/1 b=0/1"), validation_error); // singular
    CHECK_THROWS_AS(parse_rcurve("rcurve a=1/1"), validation_error);
}

TEST_CASE("wc model text form") {
    const auto model = parse_wcmodel("wc n=5 aut=1,4");
    CHECK(model.n == 5);
    CHECK(model.aut == std::vector<int64_t>{1, 4});
    CHECK_THROWS_AS(parse_wcmodel("wc n=5 aut=1,2"), validation_error);
    CHECK_THROWS_AS(parse_wcmodel("wc aut=1"), validation_error);
}

TEST_CASE("brmodel text form") {
    const auto model = parse_brmodel("brmodel n=3 br=2,2 brs=1,0;0,1");
    CHECK(model.n == 3);
    CHECK(model.brauer.cyclic_orders() == std::vector<int64_t>{2, 2});
    CHECK(model.base_sub.size() == 4);
    const auto trivial = parse_brmodel("brmodel n=4 br=6 brs=");
    CHECK(trivial.base_sub == std::vector<int64_t>{0});
}

TEST_CASE("group and gmodule specs") {
    CHECK(parse_group("trivial").size() == 1);
    CHECK(parse_group("cyclic:5").size() == 5);
    CHECK(parse_group("klein4").size() == 4);
    CHECK(parse_group("sym3").size() == 6);
    CHECK(parse_group("table:0,1;1,0").size() == 2);
    CHECK_THROWS_AS(parse_group("dihedral:4"), validation_error);

    const auto trivial = parse_gmodule("cyclic:2", "2,2", "trivial");
    CHECK(trivial.module().size() == 4);
    const auto swap = parse_gmodule("cyclic:2", "2,2", "mat:1,0|0,1;0,1|1,0");
    CHECK(swap.act(1, swap.module().index_of({1, 0})) == swap.module().index_of({0, 1}));
    const auto mult = parse_gmodule("cyclic:4", "5", "mult:1,2,4,3");
    CHECK(mult.act(1, 2) == 4);
    CHECK_THROWS_AS(parse_gmodule("cyclic:2", "4", "mult:1,2"), validation_error);
    CHECK_THROWS_AS(parse_gmodule("cyclic:2", "4", "spin"), validation_error);
}

TEST_CASE("module value lists") {
    FiniteAbelianGroup m({2, 2});
    const auto vals = parse_module_values(m, "0,0;1,1", 2);
    CHECK(vals == std::vector<int64_t>{0, 3});
    CHECK_THROWS_AS(parse_module_values(m, "0,0", 2), validation_error);
    FiniteAbelianGroup z6({6});
    CHECK(parse_module_values(z6, "0;2;4", 3) == std::vector<int64_t>{0, 2, 4});
}

TEST_CASE("integer parsing") {
    CHECK(parse_int("-17") == -17);
    CHECK_THROWS_AS(parse_int("12x"), validation_error);
    CHECK_THROWS_AS(parse_int(""), validation_error);
    CHECK(parse_int_list("1,2,3") == std::vector<int64_t>{1, 2, 3});
    CHECK(parse_int_list("").empty());
}
