#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/oracles.hpp"
#include "wckit/errors.hpp"
#include "wckit/modarith.hpp"

using namespace wc;

TEST_CASE("unit_group on the worked examples") {
    CHECK(unit_group(5) == std::vector<int64_t>{1, 2, 3, 4});
    CHECK(unit_group(1) == std::vector<int64_t>{0});
    // gcd filter over 1..11
    CHECK(unit_group(12) == std::vector<int64_t>{1, 5, 7, 11});
}

TEST_CASE("unit_group size equals Euler phi") {
    for (int64_t m = 1; m <= 200; ++m) {
        const auto units = unit_group(m);
        const int64_t expected = m == 1 ? 1 : test::euler_phi(m);
        CHECK(static_cast<int64_t>(units.size()) == expected);
    }
}

TEST_CASE("element_order examples and laws") {
    CHECK(element_order(ZModElement(2, 5)) == 5);
    CHECK(element_order(ZModElement(0, 7)) == 1);
    CHECK(element_order(ZModElement(4, 12)) == 3); // 12 / gcd(4, 12)

    for (int64_t m = 1; m <= 60; ++m)
        for (int64_t x = 0; x < m; ++x) {
            const int64_t ord = residue_order(x, m);
            CHECK(m % ord == 0);
            // iterated addition reaches zero exactly at the order
            int64_t acc = 0, steps = 0;
            do {
                acc = mod_add(acc, x, m);
                ++steps;
            } while (acc != 0);
            CHECK(steps == ord);
            for (int64_t u : unit_group(m))
                CHECK(residue_order(mod_mul(u, x, m), m) == ord);
        }
}

TEST_CASE("ZModElement arithmetic stays reduced and refuses mixed moduli") {
    ZModElement a(7, 5), b(-1, 5);
    CHECK(a.value == 2);
    CHECK(b.value == 4);
    CHECK((a + b).value == 1);
    CHECK((a - b).value == 3);
    CHECK((a * b).value == 3);
    CHECK((-a).value == 3);
    CHECK_THROWS_AS(a + ZModElement(1, 7), validation_error);
    CHECK_THROWS_AS(ZModElement(0, 0), validation_error);
    CHECK_THROWS_AS(ZModElement(0, (int64_t{1} << 31)), validation_error);
}

TEST_CASE("subgroup_generated on the worked examples") {
    FiniteAbelianGroup z6({6});
    CHECK(z6.subgroup_generated(2) == std::vector<int64_t>{0, 2, 4});
    CHECK(z6.subgroup_generated(0) == std::vector<int64_t>{0});

    FiniteAbelianGroup g({2, 4});
    const auto sub = g.subgroup_generated(g.index_of({1, 1}));
    std::vector<int64_t> expected = {g.index_of({0, 0}), g.index_of({1, 1}), g.index_of({0, 2}),
                                     g.index_of({1, 3})};
    std::sort(expected.begin(), expected.end());
    CHECK(sub == expected);
}

TEST_CASE("subgroup_generated size and negation closure") {
    const std::vector<std::vector<int64_t>> shapes = {{1}, {2}, {6}, {12}, {2, 2}, {2, 4}, {3, 9}};
    for (const auto& shape : shapes) {
        FiniteAbelianGroup g(shape);
        for (int64_t x = 0; x < g.size(); ++x) {
            const auto sub = g.subgroup_generated(x);
            CHECK(static_cast<int64_t>(sub.size()) == g.element_order(x));
            for (int64_t v : sub)
                CHECK(std::binary_search(sub.begin(), sub.end(), g.neg(v)));
            for (int64_t v : sub)
                for (int64_t w : sub)
                    CHECK(std::binary_search(sub.begin(), sub.end(), g.add(v, w)));
        }
    }
}

TEST_CASE("FiniteAbelianGroup index encoding is lexicographic") {
    FiniteAbelianGroup g({2, 3});
    CHECK(g.size() == 6);
    CHECK(g.index_of({0, 0}) == 0);
    CHECK(g.index_of({0, 2}) == 2);
    CHECK(g.index_of({1, 0}) == 3);
    CHECK(g.tuple_of(5) == std::vector<int64_t>{1, 2});
    CHECK(g.index_of({3, 5}) == g.index_of({1, 2})); // reduced componentwise
    CHECK(g.add(g.index_of({1, 2}), g.index_of({1, 2})) == g.index_of({0, 1}));
    CHECK(g.exponent() == 6);
    CHECK_THROWS_AS(g.index_of({0}), validation_error);
    CHECK_THROWS_AS(g.tuple_of(6), validation_error);
}

TEST_CASE("mod_inverse and units") {
    CHECK(mod_inverse(3, 7) == 5);
    CHECK(mod_inverse(1, 1) == 0);
    CHECK_THROWS_AS(mod_inverse(4, 12), validation_error);
    for (int64_t m = 2; m <= 50; ++m)
        for (int64_t u : unit_group(m)) CHECK(mod_mul(u, mod_inverse(u, m), m) == 1);
}
