#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "wckit/errors.hpp"
#include "wckit/modarith.hpp"
#include "wckit/torsor_model.hpp"

using namespace wc;

namespace {

// every multiplier subgroup of (Z/n)^x, by subset filtering
std::vector<std::vector<int64_t>> all_aut_subgroups(int64_t n) {
    const auto units = unit_group(n);
    std::vector<std::vector<int64_t>> out;
    const size_t k = units.size();
    for (uint64_t mask = 0; mask < (uint64_t{1} << k); ++mask) {
        std::vector<int64_t> subset;
        for (size_t i = 0; i < k; ++i)
            if (mask & (uint64_t{1} << i)) subset.push_back(units[i]);
        if (subset.empty()) continue;
        std::set<int64_t> s(subset.begin(), subset.end());
        if (!s.count(mod_reduce(1, n))) continue;
        bool closed = true;
        for (int64_t u : s)
            for (int64_t v : s) closed = closed && s.count(mod_mul(u, v, n)) > 0;
        if (closed) out.push_back(subset);
    }
    return out;
}

} // namespace

TEST_CASE("model validation") {
    CHECK_NOTHROW(WCModel(5, {1, 4}));
    CHECK_NOTHROW(WCModel(1, {0}));
    CHECK_THROWS_AS(WCModel(5, {1, 2}), validation_error);  // {1,2} not closed: 4 missing
    CHECK_THROWS_AS(WCModel(6, {1, 2}), validation_error);  // 2 is not a unit mod 6
    CHECK_THROWS_AS(WCModel(5, {2, 3}), validation_error);  // missing 1
    CHECK_NOTHROW(WCModel(5, {1, 2, 3, 4}));
    CHECK_NOTHROW(WCModel(12, {1, -1})); // reduced to {1, 11}
}

TEST_CASE("iso_related worked examples") {
    const WCModel m5(5, {1, 4});
    CHECK(iso_related(TorsorClass(m5, 1), TorsorClass(m5, 4)));
    CHECK_FALSE(iso_related(TorsorClass(m5, 1), TorsorClass(m5, 2)));
    for (int64_t x = 0; x < 5; ++x) CHECK(iso_related(TorsorClass(m5, x), TorsorClass(m5, x)));
    CHECK_THROWS_AS(iso_related(TorsorClass(m5, 1), TorsorClass(WCModel(5, {1}), 1)),
                    validation_error);
}

TEST_CASE("derived_related worked examples") {
    const WCModel m5(5, {1, 4});
    const auto w = derived_witness(TorsorClass(m5, 2), TorsorClass(m5, 1));
    REQUIRE(w.has_value());
    CHECK(mod_mul(w->phi, w->d, 5) == 2);
    CHECK(gcd_i64(w->d, 5) == 1);

    const WCModel m6(6, {1, 5});
    CHECK_FALSE(derived_related(TorsorClass(m6, 2), TorsorClass(m6, 1)));
    CHECK(derived_related(TorsorClass(m6, 0), TorsorClass(m6, 0)));
}

TEST_CASE("moduli_label worked examples") {
    const WCModel m5(5, {1});
    CHECK(moduli_label(TorsorClass(m5, 1), 3).value == 3);
    CHECK(moduli_label(TorsorClass(m5, 1), 1).value == 1);
    CHECK(moduli_label(TorsorClass(m5, 3), 0).value == 0);
    const WCModel m6(6, {1});
    CHECK(moduli_label(TorsorClass(m6, 2), 4).value == 2); // 8 mod 6
    CHECK(moduli_label(TorsorClass(m6, 2), -1).value == 4);
}

TEST_CASE("classify worked examples") {
    const auto r5 = classify(WCModel(5, {1, 4}));
    CHECK(r5.iso_classes == std::vector<std::vector<int64_t>>{{0}, {1, 4}, {2, 3}});
    CHECK(r5.derived_classes == std::vector<std::vector<int64_t>>{{0}, {1, 2, 3, 4}});
    CHECK(r5.iso_classes_among_generators == 2);
    CHECK(r5.derived_classes_among_generators == 1);
    CHECK(r5.derived_matches_cyclic_partition);

    const auto r7 = classify(WCModel(7, {1, 6}));
    CHECK(r7.iso_classes.size() == 4);
    CHECK(r7.derived_classes.size() == 2);

    const auto r1 = classify(WCModel(1, {0}));
    CHECK(r1.iso_classes.size() == 1);
    CHECK(r1.derived_classes.size() == 1);
}

TEST_CASE("derived equivalence laws on every model with n <= 12") {
    for (int64_t n = 1; n <= 12; ++n)
        for (const auto& aut : all_aut_subgroups(n)) {
            const WCModel model(n, aut);
            auto cls = [&](int64_t v) { return TorsorClass(model, v); };
            for (int64_t x = 0; x < n; ++x) {
                CHECK(derived_related(cls(x), cls(x)));
                for (int64_t y = 0; y < n; ++y) {
                    const bool xy = derived_related(cls(x), cls(y));
                    CHECK(xy == derived_related(cls(y), cls(x)));
                    if (iso_related(cls(x), cls(y))) CHECK(xy);
                    if (xy) {
                        CHECK(residue_order(x, n) == residue_order(y, n));
                        for (int64_t z = 0; z < n; ++z)
                            if (derived_related(cls(y), cls(z)))
                                CHECK(derived_related(cls(x), cls(z)));
                    }
                }
            }
        }
}

TEST_CASE("classify partitions match the pairwise relations") {
    for (int64_t n = 1; n <= 12; ++n)
        for (const auto& aut : all_aut_subgroups(n)) {
            const WCModel model(n, aut);
            const auto report = classify(model);
            CHECK(report.derived_matches_cyclic_partition);

            // brute-force partition of derived_related as the oracle
            std::vector<std::vector<int64_t>> expected;
            std::vector<bool> seen(n, false);
            for (int64_t x = 0; x < n; ++x) {
                if (seen[x]) continue;
                std::vector<int64_t> cls;
                for (int64_t y = x; y < n; ++y)
                    if (!seen[y] &&
                        derived_related(TorsorClass(model, y), TorsorClass(model, x))) {
                        cls.push_back(y);
                        seen[y] = true;
                    }
                expected.push_back(std::move(cls));
            }
            CHECK(report.derived_classes == expected);

            // iso classes partition the space and refine the derived classes
            int64_t covered = 0;
            for (const auto& iso : report.iso_classes) {
                covered += static_cast<int64_t>(iso.size());
                bool inside = false;
                for (const auto& der : report.derived_classes)
                    inside = inside ||
                             std::includes(der.begin(), der.end(), iso.begin(), iso.end());
                CHECK(inside);
            }
            CHECK(covered == n);
        }
}

TEST_CASE("generic multiplier model on prime orders") {
    for (int64_t p : {5, 7, 11, 13, 17, 19, 23}) {
        const auto report = classify(WCModel(p, {1, p - 1}));
        CHECK(report.iso_classes_among_generators == (p - 1) / 2);
        CHECK(report.derived_classes_among_generators == 1);
    }
}
