#include "wckit/brauer_fibration.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "wckit/errors.hpp"

namespace wc {

SplitBrauerModel::SplitBrauerModel(int64_t n_, FiniteAbelianGroup brauer_part,
                                   const std::vector<int64_t>& base_generators)
    : n(checked_modulus(n_)), brauer(std::move(brauer_part)), base_sub() {
    std::set<int64_t> closure{brauer.zero()};
    std::vector<int64_t> frontier{brauer.zero()};
    for (int64_t g : base_generators) {
        if (g < 0 || g >= brauer.size())
            throw validation_error("base subgroup generator out of range");
        if (closure.insert(g).second) frontier.push_back(g);
    }
    while (!frontier.empty()) {
        std::vector<int64_t> next;
        for (int64_t a : frontier)
            for (int64_t g : base_generators) {
                int64_t s = brauer.add(a, g);
                if (closure.insert(s).second) next.push_back(s);
            }
        frontier = std::move(next);
    }
    base_sub.assign(closure.begin(), closure.end());
    for (int64_t a : base_sub)
        if (!closure.count(brauer.neg(a)))
            throw check_failure("base subgroup closure is not negation-stable");
}

bool SplitBrauerModel::contains_in_base(int64_t element) const {
    return std::binary_search(base_sub.begin(), base_sub.end(), element);
}

static void check_class(const BrauerClass& c, const SplitBrauerModel& model) {
    if (c.x < 0 || c.x >= model.n)
        throw validation_error("torsor component out of range [0, n)");
    if (c.gamma < 0 || c.gamma >= model.brauer.size())
        throw validation_error("Brauer component out of range");
}

std::optional<int64_t> fiber_derived_witness(const BrauerClass& alpha, const BrauerClass& beta,
                                             const SplitBrauerModel& model) {
    check_class(alpha, model);
    check_class(beta, model);
    const int64_t ord_x = residue_order(alpha.x, model.n);
    const int64_t span = lcm_checked(model.n, model.brauer.exponent());
    for (int64_t a = 1; a <= span; ++a) {
        if (gcd_i64(a, ord_x) != 1) continue;
        if (mod_reduce(a * alpha.x, model.n) != beta.x) continue;
        const int64_t diff =
            model.brauer.sub(model.brauer.scalar_mul(a, alpha.gamma), beta.gamma);
        if (model.contains_in_base(diff)) return a;
    }
    return std::nullopt;
}

bool fiber_derived_related(const BrauerClass& alpha, const BrauerClass& beta,
                           const SplitBrauerModel& model) {
    return fiber_derived_witness(alpha, beta, model).has_value();
}

namespace {

// quotient (Z/n + Br)/Br(S): elements are pairs with the Brauer part
// canonicalized to the least member of its base-subgroup coset
struct QuotientElem {
    int64_t x;
    int64_t g;
    bool operator<(const QuotientElem& o) const { return x != o.x ? x < o.x : g < o.g; }
    bool operator==(const QuotientElem& o) const = default;
};

QuotientElem canonicalize(int64_t x, int64_t g, const SplitBrauerModel& model) {
    int64_t best = -1;
    for (int64_t s : model.base_sub) {
        int64_t cand = model.brauer.add(g, s);
        if (best < 0 || cand < best) best = cand;
    }
    return {x, best};
}

std::set<QuotientElem> cyclic_span(const BrauerClass& c, const SplitBrauerModel& model) {
    std::set<QuotientElem> span;
    int64_t x = 0, g = model.brauer.zero();
    do {
        span.insert(canonicalize(x, g, model));
        x = mod_reduce(x + c.x, model.n);
        g = model.brauer.add(g, c.gamma);
    } while (!(x == 0 && g == model.brauer.zero()));
    return span;
}

} // namespace

bool same_cyclic_in_quotient(const BrauerClass& alpha, const BrauerClass& beta,
                             const SplitBrauerModel& model) {
    check_class(alpha, model);
    check_class(beta, model);
    return cyclic_span(alpha, model) == cyclic_span(beta, model);
}

} // namespace wc
