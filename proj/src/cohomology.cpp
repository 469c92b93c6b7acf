#include "wckit/cohomology.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "wckit/errors.hpp"
#include "wckit/guards.hpp"

namespace wc {

FiniteGroup::FiniteGroup(int n, std::vector<int> table, int id, std::vector<int> inv)
    : n_(n), table_(std::move(table)), id_(id), inv_(std::move(inv)) {}

int FiniteGroup::op(int a, int b) const {
    if (a < 0 || a >= n_ || b < 0 || b >= n_)
        throw validation_error("group element index out of range");
    return table_[static_cast<size_t>(a) * n_ + b];
}

int FiniteGroup::inverse(int a) const {
    if (a < 0 || a >= n_) throw validation_error("group element index out of range");
    return inv_[a];
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>>& rows) {
    const int n = static_cast<int>(rows.size());
    if (n < 1) throw validation_error("group table must be nonempty");
    if (n > guards().group_size_cap)
        throw validation_error("group size " + std::to_string(n) + " exceeds guard " +
                               std::to_string(guards().group_size_cap));
    std::vector<int> t(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n)
            throw validation_error("group table must be square");
        for (int j = 0; j < n; ++j) {
            int v = rows[i][j];
            if (v < 0 || v >= n) throw validation_error("group table entry out of range");
            t[static_cast<size_t>(i) * n + j] = v;
        }
    }
    auto mul = [&](int a, int b) { return t[static_cast<size_t>(a) * n + b]; };
    // identity
    int id = -1;
    for (int e = 0; e < n && id < 0; ++e) {
        bool ok = true;
        for (int g = 0; g < n && ok; ++g)
            ok = mul(e, g) == g && mul(g, e) == g;
        if (ok) id = e;
    }
    if (id < 0) throw validation_error("group table has no identity");
    // associativity
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw validation_error("group table is not associative");
    // inverses
    std::vector<int> inv(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (mul(a, b) == id && mul(b, a) == id) {
                inv[a] = b;
                break;
            }
        if (inv[a] < 0) throw validation_error("group table element lacks an inverse");
    }
    return FiniteGroup(n, std::move(t), id, std::move(inv));
}

FiniteGroup FiniteGroup::trivial() { return cyclic(1); }

FiniteGroup FiniteGroup::cyclic(int n) {
    if (n < 1) throw validation_error("cyclic group order must be >= 1");
    std::vector<std::vector<int>> rows(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rows[i][j] = (i + j) % n;
    return from_table(rows);
}

FiniteGroup FiniteGroup::klein_four() {
    // (Z/2)^2 with elements indexed 0..3 as bit pairs
    std::vector<std::vector<int>> rows(4, std::vector<int>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) rows[i][j] = i ^ j;
    return from_table(rows);
}

FiniteGroup FiniteGroup::symmetric3() {
    // permutations of {0,1,2} listed in lexicographic one-line order
    const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    auto find = [&](const int p[3]) {
        for (int k = 0; k < 6; ++k)
            if (perms[k][0] == p[0] && perms[k][1] == p[1] && perms[k][2] == p[2]) return k;
        return -1;
    };
    std::vector<std::vector<int>> rows(6, std::vector<int>(6));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            int comp[3];
            for (int x = 0; x < 3; ++x) comp[x] = perms[i][perms[j][x]]; // i after j
            rows[i][j] = find(comp);
        }
    return from_table(rows);
}

GModule::GModule(FiniteGroup group, FiniteAbelianGroup module,
                 std::vector<std::vector<int64_t>> action_tables) {
    const int n = group.size();
    const int64_t m = module.size();
    if (m > guards().module_size_cap)
        throw validation_error("module size " + std::to_string(m) + " exceeds guard " +
                               std::to_string(guards().module_size_cap));
    if (static_cast<int>(action_tables.size()) != n)
        throw validation_error("need one action table per group element");
    for (int g = 0; g < n; ++g) {
        const auto& f = action_tables[g];
        if (static_cast<int64_t>(f.size()) != m)
            throw validation_error("action table has wrong module size");
        std::vector<bool> hit(m, false);
        for (int64_t x = 0; x < m; ++x) {
            if (f[x] < 0 || f[x] >= m) throw validation_error("action table image out of range");
            hit[f[x]] = true;
        }
        for (int64_t x = 0; x < m; ++x)
            if (!hit[x]) throw validation_error("action map is not bijective");
        for (int64_t x = 0; x < m; ++x)
            for (int64_t y = 0; y < m; ++y)
                if (f[module.add(x, y)] != module.add(f[x], f[y]))
                    throw validation_error("action map is not additive");
    }
    for (int64_t x = 0; x < m; ++x)
        if (action_tables[group.identity()][x] != x)
            throw validation_error("identity must act trivially");
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int64_t x = 0; x < m; ++x)
                if (action_tables[group.op(g, h)][x] != action_tables[g][action_tables[h][x]])
                    throw validation_error("action is not compatible with the group law");
    auto d = std::make_shared<Data>(
        Data{std::move(group), std::move(module), std::move(action_tables)});
    data_ = std::move(d);
}

GModule GModule::trivial(FiniteGroup group, FiniteAbelianGroup module) {
    std::vector<std::vector<int64_t>> tables(group.size());
    std::vector<int64_t> identity(module.size());
    for (int64_t x = 0; x < module.size(); ++x) identity[x] = x;
    for (auto& t : tables) t = identity;
    return GModule(std::move(group), std::move(module), std::move(tables));
}

GModule GModule::from_multipliers(FiniteGroup group, FiniteAbelianGroup module,
                                  const std::vector<int64_t>& multipliers) {
    if (static_cast<int>(multipliers.size()) != group.size())
        throw validation_error("need one multiplier per group element");
    std::vector<std::vector<int64_t>> tables(group.size());
    for (int g = 0; g < group.size(); ++g) {
        tables[g].resize(module.size());
        for (int64_t x = 0; x < module.size(); ++x)
            tables[g][x] = module.scalar_mul(multipliers[g], x);
    }
    return GModule(std::move(group), std::move(module), std::move(tables));
}

GModule GModule::from_generator_images(
    FiniteGroup group, FiniteAbelianGroup module,
    const std::vector<std::vector<std::vector<int64_t>>>& images) {
    if (static_cast<int>(images.size()) != group.size())
        throw validation_error("need one generator-image list per group element");
    const size_t k = module.cyclic_orders().size();
    std::vector<std::vector<int64_t>> tables(group.size());
    for (int g = 0; g < group.size(); ++g) {
        if (images[g].size() != k)
            throw validation_error("need one image per module generator");
        std::vector<int64_t> gen_img(k);
        for (size_t j = 0; j < k; ++j) gen_img[j] = module.index_of(images[g][j]);
        tables[g].resize(module.size());
        for (int64_t x = 0; x < module.size(); ++x) {
            auto t = module.tuple_of(x);
            int64_t acc = module.zero();
            for (size_t j = 0; j < k; ++j)
                acc = module.add(acc, module.scalar_mul(t[j], gen_img[j]));
            tables[g][x] = acc;
        }
    }
    return GModule(std::move(group), std::move(module), std::move(tables));
}

bool GModule::operator==(const GModule& o) const {
    return data_ == o.data_ ||
           (data_->group == o.data_->group && data_->module == o.data_->module &&
            data_->action == o.data_->action);
}

Cocycle::Cocycle(GModule gmodule, std::vector<int64_t> values)
    : gmodule_(std::move(gmodule)), values_(std::move(values)) {
    const auto& G = gmodule_.group();
    const auto& M = gmodule_.module();
    if (static_cast<int>(values_.size()) != G.size())
        throw validation_error("cocycle needs one value per group element");
    for (int64_t v : values_)
        if (v < 0 || v >= M.size()) throw validation_error("cocycle value out of range");
    if (values_[G.identity()] != M.zero())
        throw validation_error("cocycle must be normalized: rho(e) = 0");
    for (int g = 0; g < G.size(); ++g)
        for (int h = 0; h < G.size(); ++h)
            if (values_[G.op(g, h)] != M.add(gmodule_.act(g, values_[h]), values_[g]))
                throw validation_error("crossed-homomorphism law fails at a pair (g, h)");
}

Cocycle Cocycle::plus(const Cocycle& o) const {
    if (!(gmodule_ == o.gmodule_)) throw validation_error("cocycles live on different modules");
    std::vector<int64_t> v(values_.size());
    for (size_t i = 0; i < values_.size(); ++i)
        v[i] = gmodule_.module().add(values_[i], o.values_[i]);
    return Cocycle(gmodule_, std::move(v));
}

Cocycle Cocycle::times(int64_t k) const {
    std::vector<int64_t> v(values_.size());
    for (size_t i = 0; i < values_.size(); ++i)
        v[i] = gmodule_.module().scalar_mul(k, values_[i]);
    return Cocycle(gmodule_, std::move(v));
}

static bool satisfies_law(const GModule& gm, const std::vector<int64_t>& vals) {
    const auto& G = gm.group();
    const auto& M = gm.module();
    for (int g = 0; g < G.size(); ++g)
        for (int h = 0; h < G.size(); ++h)
            if (vals[G.op(g, h)] != M.add(gm.act(g, vals[h]), vals[g])) return false;
    return true;
}

std::vector<Cocycle> cocycles(const GModule& gm) {
    const auto& G = gm.group();
    const auto& M = gm.module();
    const int n = G.size();
    const int64_t m = M.size();
    // guard: |M|^|G| candidates
    double cand = 1.0;
    for (int i = 0; i < n; ++i) cand *= static_cast<double>(m);
    if (cand > static_cast<double>(guards().cocycle_candidate_cap))
        throw validation_error("cocycle enumeration |M|^|G| exceeds guard");
    // odometer over the non-identity positions; rho(e) fixed at 0
    std::vector<int> free_pos;
    for (int g = 0; g < n; ++g)
        if (g != G.identity()) free_pos.push_back(g);
    std::vector<int64_t> vals(n, M.zero());
    std::vector<Cocycle> out;
    while (true) {
        if (satisfies_law(gm, vals)) out.emplace_back(gm, vals);
        size_t i = 0;
        for (; i < free_pos.size(); ++i) {
            int g = free_pos[i];
            if (++vals[g] < m) break;
            vals[g] = 0;
        }
        if (i == free_pos.size()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Cocycle> coboundaries(const GModule& gm) {
    const auto& G = gm.group();
    const auto& M = gm.module();
    std::set<std::vector<int64_t>> seen;
    for (int64_t x = 0; x < M.size(); ++x) {
        std::vector<int64_t> vals(G.size());
        for (int g = 0; g < G.size(); ++g) vals[g] = M.sub(gm.act(g, x), x);
        seen.insert(std::move(vals));
    }
    std::vector<Cocycle> out;
    out.reserve(seen.size());
    for (const auto& v : seen) out.emplace_back(gm, v);
    return out;
}

H1Result h1(const GModule& gm) {
    auto z1 = cocycles(gm);
    auto b1 = coboundaries(gm);
    std::set<std::vector<int64_t>> b1_set;
    for (const auto& c : b1) b1_set.insert(c.values());
    for (const auto& c : b1)
        if (!std::binary_search(z1.begin(), z1.end(), c))
            throw check_failure("a coboundary failed the cocycle law");
    if (z1.size() % b1.size() != 0)
        throw check_failure("|B^1| does not divide |Z^1|");
    const auto& M = gm.module();
    std::set<std::vector<int64_t>> covered;
    std::vector<Cocycle> reps;
    for (const auto& c : z1) { // lexicographic order: first unseen member is minimal in its coset
        if (covered.count(c.values())) continue;
        reps.push_back(c);
        for (const auto& b : b1_set) {
            std::vector<int64_t> shifted(c.values().size());
            for (size_t i = 0; i < shifted.size(); ++i) shifted[i] = M.add(c.values()[i], b[i]);
            covered.insert(std::move(shifted));
        }
    }
    H1Result r;
    r.z1_size = static_cast<int64_t>(z1.size());
    r.b1_size = static_cast<int64_t>(b1.size());
    r.size = r.z1_size / r.b1_size;
    if (r.size != static_cast<int64_t>(reps.size()))
        throw check_failure("H^1 representative count disagrees with |Z^1|/|B^1|");
    r.representatives = std::move(reps);
    return r;
}

TwistedGSet::TwistedGSet(Cocycle alpha) : alpha_(std::move(alpha)) {
    const auto& gm = alpha_.gmodule();
    const auto& G = gm.group();
    const auto& M = gm.module();
    for (int g = 0; g < G.size(); ++g)
        for (int h = 0; h < G.size(); ++h)
            for (int64_t y = 0; y < M.size(); ++y)
                if (act(G.op(g, h), y) != act(g, act(h, y)))
                    throw check_failure("twisted action fails (gh)*y = g*(h*y)");
}

int64_t TwistedGSet::act(int g, int64_t y) const {
    const auto& gm = alpha_.gmodule();
    return gm.module().add(gm.act(g, y), alpha_.value(g));
}

std::vector<int64_t> TwistedGSet::fixed_points() const {
    const auto& gm = alpha_.gmodule();
    std::vector<int64_t> out;
    for (int64_t y = 0; y < gm.module().size(); ++y) {
        bool fixed = true;
        for (int g = 0; g < gm.group().size() && fixed; ++g) fixed = act(g, y) == y;
        if (fixed) out.push_back(y);
    }
    return out;
}

TwistedGSet torsor_from_cocycle(const Cocycle& alpha) { return TwistedGSet(alpha); }

Cocycle picd_cocycle(const Cocycle& alpha, int64_t d) {
    if (d < 0) throw validation_error("divisor degree d must be >= 0");
    if (d > guards().picd_degree_cap)
        throw validation_error("divisor degree " + std::to_string(d) + " exceeds guard " +
                               std::to_string(guards().picd_degree_cap));
    const auto& gm = alpha.gmodule();
    const auto& G = gm.group();
    const auto& M = gm.module();
    const int64_t m = M.size();

    // number of size-d multisets = C(m + d - 1, d)
    double count = 1.0;
    for (int64_t i = 0; i < d; ++i) count = count * static_cast<double>(m + i) / (i + 1);
    if (count > static_cast<double>(guards().divisor_count_cap))
        throw validation_error("divisor enumeration exceeds guard");

    // induced map on classes, per group element: img[g][c], -1 = class unseen
    std::vector<std::vector<int64_t>> img(G.size(), std::vector<int64_t>(m, -1));
    std::vector<int64_t> multiset(d, 0); // non-decreasing tuples over [0, m)
    while (true) {
        int64_t cls = M.zero();
        for (int64_t i = 0; i < d; ++i) cls = M.add(cls, multiset[i]);
        for (int g = 0; g < G.size(); ++g) {
            // class of the pointwise twisted image: sum of g.y_i + alpha(g), i = 1..d
            int64_t image_cls = M.zero();
            for (int64_t i = 0; i < d; ++i)
                image_cls = M.add(image_cls, gm.act(g, multiset[i]));
            image_cls = M.add(image_cls, M.scalar_mul(d, alpha.value(g)));
            if (img[g][cls] == -1)
                img[g][cls] = image_cls;
            else if (img[g][cls] != image_cls)
                throw check_failure(
                    "divisor action does not descend to linear-equivalence classes");
        }
        // next non-decreasing tuple
        int64_t i = d;
        while (i-- > 0) {
            if (multiset[i] + 1 < m) {
                int64_t v = multiset[i] + 1;
                for (int64_t j = i; j < d; ++j) multiset[j] = v;
                break;
            }
        }
        if (i < 0 || d == 0) break;
    }

    // extract the cocycle relative to the base class 0 and insist the induced
    // action is exactly twisted translation c -> g.c + t(g)
    std::vector<int64_t> t(G.size(), M.zero());
    for (int g = 0; g < G.size(); ++g) {
        if (img[g][0] == -1) throw check_failure("base class 0 has no divisor representative");
        t[g] = img[g][0];
        for (int64_t c = 0; c < m; ++c) {
            if (img[g][c] == -1) continue; // only possible when d = 0
            if (img[g][c] != M.add(gm.act(g, c), t[g]))
                throw check_failure("induced class action is not a twisted translation");
        }
    }
    return Cocycle(gm, std::move(t));
}

} // namespace wc
