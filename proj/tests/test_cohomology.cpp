#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "support/oracles.hpp"
#include "wckit/cohomology.hpp"
#include "wckit/errors.hpp"

using namespace wc;

namespace {

GModule swap_module() {
    // conjugation on the 2-torsion: fixes 0 and (1,1), swaps (1,0) and (0,1)
    return GModule::from_generator_images(FiniteGroup::cyclic(2), FiniteAbelianGroup({2, 2}),
                                          {{{1, 0}, {0, 1}}, {{0, 1}, {1, 0}}});
}

GModule negation_module(int64_t n) {
    return GModule::from_multipliers(FiniteGroup::cyclic(2), FiniteAbelianGroup({n}), {1, n - 1});
}

GModule times2_on_z5() {
    // Z/4 acting on Z/5 through the order-4 unit 2
    return GModule::from_multipliers(FiniteGroup::cyclic(4), FiniteAbelianGroup({5}), {1, 2, 4, 3});
}

bool contains(const std::vector<Cocycle>& set, const Cocycle& c) {
    return std::count(set.begin(), set.end(), c) > 0;
}

} // namespace

TEST_CASE("group tables are verified at construction") {
    CHECK(FiniteGroup::cyclic(4).size() == 4);
    CHECK(FiniteGroup::klein_four().inverse(3) == 3);
    const auto s3 = FiniteGroup::symmetric3();
    bool commutes = true;
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) commutes = commutes && s3.op(a, b) == s3.op(b, a);
    CHECK_FALSE(commutes);
    CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 1}}), validation_error); // no inverse for 1
    CHECK_THROWS_AS(FiniteGroup::from_table({{1, 0}, {0, 0}}), validation_error); // no identity
}

TEST_CASE("GModule validates the action axioms") {
    FiniteGroup g2 = FiniteGroup::cyclic(2);
    FiniteAbelianGroup z4({4});
    CHECK_THROWS_AS(GModule::from_multipliers(g2, z4, {1, 2}), validation_error); // 2 not invertible
    CHECK_THROWS_AS(GModule::from_multipliers(g2, z4, {1, 1, 1}), validation_error);
    CHECK_THROWS_AS(GModule(g2, z4, {{0, 1, 2, 3}, {0, 2, 1, 3}}), validation_error); // not additive
    CHECK(GModule::from_multipliers(g2, z4, {1, 3}).act(1, 1) == 3);
}

TEST_CASE("cocycle sets on the real-example modules") {
    const auto trivial = GModule::trivial(FiniteGroup::cyclic(2), FiniteAbelianGroup({2, 2}));
    CHECK(cocycles(trivial).size() == 4); // Hom(Z/2, Z/2 x Z/2)

    const auto swap = swap_module();
    const auto z1 = cocycles(swap);
    CHECK(z1.size() == 2);
    // rho(sigma) must satisfy rho(sigma) + sigma.rho(sigma) = 0: only 0 and (1,1)
    const auto& m = swap.module();
    for (const auto& c : z1) {
        const auto v = m.tuple_of(c.value(1));
        CHECK((v == std::vector<int64_t>{0, 0} || v == std::vector<int64_t>{1, 1}));
    }

    const auto lone = GModule::trivial(FiniteGroup::trivial(), FiniteAbelianGroup({6}));
    CHECK(cocycles(lone).size() == 1);
}

TEST_CASE("coboundary sets") {
    const auto trivial = GModule::trivial(FiniteGroup::cyclic(2), FiniteAbelianGroup({2, 2}));
    CHECK(coboundaries(trivial).size() == 1); // only the zero map

    const auto swap = swap_module();
    const auto b1 = coboundaries(swap);
    CHECK(b1.size() == 2);
    CHECK(contains(b1, Cocycle(swap, {0, swap.module().index_of({1, 1})})));

    const auto neg4 = negation_module(4);
    const auto nb = coboundaries(neg4);
    CHECK(nb.size() == 2); // {g -> -2m : m in Z/4} = {0, 2}
    CHECK(contains(nb, Cocycle(neg4, {0, 2})));
}

TEST_CASE("h1 sizes on the worked examples") {
    CHECK(h1(GModule::trivial(FiniteGroup::cyclic(2), FiniteAbelianGroup({2, 2}))).size == 4);
    CHECK(h1(swap_module()).size == 1);
    CHECK(h1(GModule::trivial(FiniteGroup::trivial(), FiniteAbelianGroup({5}))).size == 1);
    CHECK(h1(negation_module(4)).size == 2);
}

TEST_CASE("h1 structure laws over a model grid") {
    std::vector<GModule> grid;
    for (const auto& G : test::all_groups_up_to_order_6())
        for (int64_t m : {1, 2, 3, 4, 6, 8})
            for (const auto& mult : test::all_multiplier_actions(G, m))
                grid.push_back(GModule::from_multipliers(G, FiniteAbelianGroup({m}), mult));
    grid.push_back(swap_module());
    grid.push_back(GModule::trivial(FiniteGroup::klein_four(), FiniteAbelianGroup({2, 2})));

    for (const auto& gm : grid) {
        const auto z1 = cocycles(gm);
        const auto b1 = coboundaries(gm);
        for (const auto& b : b1) CHECK(contains(z1, b));
        const auto res = h1(gm);
        CHECK(res.z1_size == static_cast<int64_t>(z1.size()));
        CHECK(res.b1_size == static_cast<int64_t>(b1.size()));
        CHECK(res.size * res.b1_size == res.z1_size);
        CHECK(static_cast<int64_t>(res.representatives.size()) == res.size);
        // exponent bound: |G| . h lands in B^1 for every class
        for (const auto& rep : res.representatives)
            CHECK(contains(b1, rep.times(gm.group().size())));
        // representatives are pairwise non-cohomologous
        for (size_t i = 0; i < res.representatives.size(); ++i)
            for (size_t j = i + 1; j < res.representatives.size(); ++j) {
                bool cohomologous = false;
                for (const auto& b : b1)
                    cohomologous = cohomologous || res.representatives[i].plus(b) ==
                                                       res.representatives[j];
                CHECK_FALSE(cohomologous);
            }
    }
}

TEST_CASE("trivial action gives Hom(G, M)") {
    for (const auto& G : test::all_groups_up_to_order_6())
        for (int64_t m : {2, 3, 4, 6, 12}) {
            FiniteAbelianGroup M({m});
            const auto gm = GModule::trivial(G, M);
            CHECK(static_cast<int64_t>(cocycles(gm).size()) == test::brute_hom_count(G, M));
        }
}

TEST_CASE("cocycle law is verified at construction") {
    const auto gm = times2_on_z5();
    CHECK_NOTHROW(Cocycle(gm, {0, 1, 3, 2}));
    CHECK_THROWS_AS(Cocycle(gm, {0, 1, 1, 1}), validation_error);
    CHECK_THROWS_AS(Cocycle(gm, {1, 1, 3, 2}), validation_error); // not normalized
}

TEST_CASE("twisted torsor action") {
    const auto gm = times2_on_z5();

    SUBCASE("zero cocycle reproduces the module action") {
        const auto t = torsor_from_cocycle(Cocycle(gm, {0, 0, 0, 0}));
        for (int g = 0; g < 4; ++g)
            for (int64_t y = 0; y < 5; ++y) CHECK(t.act(g, y) == gm.act(g, y));
    }

    SUBCASE("alpha(g) = 1 twists to y -> 2y + 1 with identity fourth iterate") {
        const auto t = torsor_from_cocycle(Cocycle(gm, {0, 1, 3, 2}));
        for (int64_t y = 0; y < 5; ++y) {
            CHECK(t.act(1, y) == (2 * y + 1) % 5);
            CHECK(t.act(1, t.act(1, t.act(1, t.act(1, y)))) == y);
        }
        CHECK(t.fixed_points().size() == 1); // 2y + 1 = y at y = 4
    }

    SUBCASE("coboundary twists are conjugate to the untwisted action by translation") {
        const auto& M = gm.module();
        for (int64_t m0 = 0; m0 < M.size(); ++m0) {
            std::vector<int64_t> vals(4);
            for (int g = 0; g < 4; ++g) vals[g] = M.sub(gm.act(g, m0), m0);
            const auto t = torsor_from_cocycle(Cocycle(gm, vals));
            for (int g = 0; g < 4; ++g)
                for (int64_t y = 0; y < M.size(); ++y)
                    CHECK(t.act(g, M.add(y, m0)) == M.add(gm.act(g, y), m0));
        }
    }

    SUBCASE("cohomologous cocycles give translation-isomorphic twisted sets") {
        const auto z1 = cocycles(gm);
        const auto b1 = coboundaries(gm);
        const auto& M = gm.module();
        for (const auto& alpha : z1)
            for (const auto& b : b1) {
                const auto t1 = torsor_from_cocycle(alpha);
                const auto t2 = torsor_from_cocycle(alpha.plus(b));
                bool intertwined = false;
                for (int64_t t = 0; t < M.size() && !intertwined; ++t) {
                    bool ok = true;
                    for (int g = 0; g < 4 && ok; ++g)
                        for (int64_t y = 0; y < M.size() && ok; ++y)
                            ok = M.add(t1.act(g, y), t) == t2.act(g, M.add(y, t));
                    intertwined = ok;
                }
                CHECK(intertwined);
            }
    }
}

TEST_CASE("picd worked examples") {
    const auto gm = times2_on_z5();
    const Cocycle alpha(gm, {0, 1, 3, 2});
    CHECK(picd_cocycle(alpha, 1) == alpha);
    CHECK(picd_cocycle(alpha, 0) == Cocycle(gm, {0, 0, 0, 0}));
    // degree 3: every size-3 multiset class c maps to 2c + 3 under the generator
    const auto d3 = picd_cocycle(alpha, 3);
    CHECK(d3.value(1) == 3);
    CHECK(d3 == alpha.times(3));
}

TEST_CASE("picd equals d.alpha with additivity on a sample grid") {
    std::vector<GModule> grid;
    for (const auto& G : test::all_groups_up_to_order_6()) {
        if (G.size() > 4) continue;
        for (int64_t m : {2, 3, 5, 8})
            for (const auto& mult : test::all_multiplier_actions(G, m))
                grid.push_back(GModule::from_multipliers(G, FiniteAbelianGroup({m}), mult));
    }
    grid.push_back(swap_module());
    for (const auto& gm : grid)
        for (const auto& alpha : cocycles(gm)) {
            std::vector<Cocycle> by_degree;
            for (int64_t d = 0; d <= 4; ++d) {
                const auto derived = picd_cocycle(alpha, d);
                CHECK(derived == alpha.times(d));
                by_degree.push_back(derived);
            }
            for (int64_t d1 = 0; d1 <= 2; ++d1)
                for (int64_t d2 = 0; d2 <= 2; ++d2)
                    CHECK(by_degree[d1 + d2] == by_degree[d1].plus(by_degree[d2]));
        }
}

TEST_CASE("enumeration guards reject oversized problems") {
    CHECK_THROWS_AS(GModule::trivial(FiniteGroup::cyclic(2), FiniteAbelianGroup({65})),
                    validation_error);
    CHECK_THROWS_AS(FiniteGroup::cyclic(9), validation_error);
    CHECK_THROWS_AS(picd_cocycle(Cocycle(times2_on_z5(), {0, 1, 3, 2}), 7), validation_error);
    CHECK_THROWS_AS(picd_cocycle(Cocycle(times2_on_z5(), {0, 1, 3, 2}), -1), validation_error);
}
