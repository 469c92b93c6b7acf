#include "wckit/torsor_model.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "wckit/errors.hpp"
#include "wckit/modarith.hpp"

namespace wc {

WCModel::WCModel(int64_t n_, std::vector<int64_t> aut_multipliers) : n(n_), aut() {
    checked_modulus(n);
    std::set<int64_t> s;
    for (int64_t u : aut_multipliers) s.insert(mod_reduce(u, n));
    const int64_t one = mod_reduce(1, n);
    if (!s.count(one))
        throw validation_error("multiplier set must contain 1");
    for (int64_t u : s) {
        if (!is_unit(u, n))
            throw validation_error("multiplier " + std::to_string(u) + " is not a unit mod " +
                                   std::to_string(n));
        for (int64_t v : s)
            if (!s.count(mod_mul(u, v, n)))
                throw validation_error("multiplier set is not closed under multiplication");
    }
    aut.assign(s.begin(), s.end());
}

TorsorClass::TorsorClass(WCModel m, int64_t v) : model(std::move(m)), value(mod_reduce(v, model.n)) {}

int64_t TorsorClass::order() const { return residue_order(value, model.n); }

static void check_same_model(const TorsorClass& x, const TorsorClass& y) {
    if (!(x.model == y.model))
        throw validation_error("torsor classes live in different models");
}

bool iso_related(const TorsorClass& x, const TorsorClass& y) {
    check_same_model(x, y);
    const int64_t n = x.model.n;
    for (int64_t phi : x.model.aut)
        if (x.value == mod_mul(phi, y.value, n)) return true;
    return false;
}

std::optional<DerivedWitness> derived_witness(const TorsorClass& x, const TorsorClass& y) {
    check_same_model(x, y);
    const int64_t n = x.model.n;
    const int64_t ord_y = y.order();
    // d ranges over integers, but phi*d*y and gcd(d, ord(y)) only depend on
    // d mod n (ord(y) divides n), so sweeping d in [1, n] is exhaustive.
    for (int64_t phi : x.model.aut)
        for (int64_t d = 1; d <= n; ++d) {
            if (gcd_i64(d, ord_y) != 1) continue;
            if (x.value == mod_mul(phi, mod_mul(d % n, y.value, n), n))
                return DerivedWitness{phi, d == n ? 0 : d};
        }
    return std::nullopt;
}

bool derived_related(const TorsorClass& x, const TorsorClass& y) {
    return derived_witness(x, y).has_value();
}

TorsorClass moduli_label(const TorsorClass& y, int64_t d) {
    const int64_t n = y.model.n;
    return TorsorClass(y.model, mod_mul(mod_reduce(d, n), y.value, n));
}

ClassifyReport classify(const WCModel& model) {
    const int64_t n = model.n;
    ClassifyReport r{model, {}, {}, {}, {}, {}, 0, 0, true};

    std::vector<bool> seen(n, false);
    for (int64_t x = 0; x < n; ++x) {
        if (seen[x]) continue;
        std::set<int64_t> orbit;
        for (int64_t phi : model.aut) orbit.insert(mod_mul(phi, x, n));
        std::vector<int64_t> cls(orbit.begin(), orbit.end());
        for (int64_t v : cls) seen[v] = true;
        r.iso_classes.push_back(std::move(cls));
    }

    // derived classes via pairwise relation against each class's least member
    std::fill(seen.begin(), seen.end(), false);
    for (int64_t x = 0; x < n; ++x) {
        if (seen[x]) continue;
        std::vector<int64_t> cls;
        TorsorClass tx(model, x);
        for (int64_t y = x; y < n; ++y) {
            if (seen[y]) continue;
            if (derived_related(TorsorClass(model, y), tx)) {
                cls.push_back(y);
                seen[y] = true;
            }
        }
        r.derived_classes.push_back(std::move(cls));
    }

    // oracle cross-check: derived classes = "generate the same cyclic subgroup"
    {
        FiniteAbelianGroup zn({n});
        std::map<std::vector<int64_t>, std::vector<int64_t>> by_subgroup;
        for (int64_t x = 0; x < n; ++x) by_subgroup[zn.subgroup_generated(x)].push_back(x);
        std::vector<std::vector<int64_t>> cyclic_partition;
        for (auto& [sub, members] : by_subgroup) cyclic_partition.push_back(members);
        auto sorted = [](std::vector<std::vector<int64_t>> p) {
            std::sort(p.begin(), p.end());
            return p;
        };
        r.derived_matches_cyclic_partition =
            sorted(cyclic_partition) == sorted(r.derived_classes);
    }

    auto order_of = [&](int64_t v) { return residue_order(v, n); };
    for (int64_t x = 0; x < n; ++x) r.elements_per_order[order_of(x)]++;
    for (const auto& cls : r.iso_classes) {
        int64_t o = order_of(cls.front());
        r.iso_classes_per_order[o]++;
        if (o == n) r.iso_classes_among_generators++;
    }
    for (const auto& cls : r.derived_classes) {
        int64_t o = order_of(cls.front());
        r.derived_classes_per_order[o]++;
        if (o == n) r.derived_classes_among_generators++;
    }
    return r;
}

} // namespace wc
