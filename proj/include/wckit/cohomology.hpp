#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "wckit/modarith.hpp"

namespace wc {

/// Finite group given by an explicit multiplication table. Associativity,
/// identity and inverses are all verified at construction.
class FiniteGroup {
public:
    static FiniteGroup from_table(const std::vector<std::vector<int>>& table);
    static FiniteGroup trivial();
    static FiniteGroup cyclic(int n);
    static FiniteGroup klein_four();
    static FiniteGroup symmetric3();

    int size() const { return n_; }
    int identity() const { return id_; }
    int op(int a, int b) const;
    int inverse(int a) const;
    const std::vector<int>& table() const { return table_; }

    bool operator==(const FiniteGroup& o) const { return n_ == o.n_ && table_ == o.table_; }

private:
    FiniteGroup(int n, std::vector<int> table, int id, std::vector<int> inv);

    int n_;
    std::vector<int> table_; // row-major n x n
    int id_;
    std::vector<int> inv_;
};

/// A finite abelian group with a G-action by additive automorphisms.
/// Stored as one permutation of the module per group element; the action
/// axioms (additivity, bijectivity, identity, compatibility with the group
/// law) are verified at construction.
class GModule {
public:
    GModule(FiniteGroup group, FiniteAbelianGroup module,
            std::vector<std::vector<int64_t>> action_tables);

    static GModule trivial(FiniteGroup group, FiniteAbelianGroup module);
    /// Action by multiplication: element g acts as x -> multipliers[g] * x.
    static GModule from_multipliers(FiniteGroup group, FiniteAbelianGroup module,
                                    const std::vector<int64_t>& multipliers);
    /// Action by matrices: per group element, column j is the image tuple of
    /// the j-th standard generator.
    static GModule from_generator_images(
        FiniteGroup group, FiniteAbelianGroup module,
        const std::vector<std::vector<std::vector<int64_t>>>& images);

    const FiniteGroup& group() const { return data_->group; }
    const FiniteAbelianGroup& module() const { return data_->module; }
    int64_t act(int g, int64_t x) const { return data_->action[g][x]; }

    bool operator==(const GModule& o) const;

private:
    struct Data {
        FiniteGroup group;
        FiniteAbelianGroup module;
        std::vector<std::vector<int64_t>> action;
    };
    std::shared_ptr<const Data> data_;
};

/// Normalized crossed homomorphism rho: G -> M with
/// rho(gh) = g.rho(h) + rho(g) and rho(e) = 0, verified at construction.
class Cocycle {
public:
    Cocycle(GModule gmodule, std::vector<int64_t> values);

    const GModule& gmodule() const { return gmodule_; }
    int64_t value(int g) const { return values_[g]; }
    const std::vector<int64_t>& values() const { return values_; }

    Cocycle plus(const Cocycle& o) const;
    Cocycle times(int64_t k) const;

    bool operator==(const Cocycle& o) const { return values_ == o.values_; }
    bool operator<(const Cocycle& o) const { return values_ < o.values_; }

private:
    GModule gmodule_;
    std::vector<int64_t> values_;
};

/// The full set Z^1(G, M), by filtering all normalized maps through the
/// crossed-homomorphism law. Sorted lexicographically.
std::vector<Cocycle> cocycles(const GModule& gm);

/// The set B^1(G, M) = { g -> g.m - m : m in M }. Sorted, deduplicated.
std::vector<Cocycle> coboundaries(const GModule& gm);

struct H1Result {
    int64_t z1_size;
    int64_t b1_size;
    int64_t size; // |H^1| = |Z^1| / |B^1|
    std::vector<Cocycle> representatives; // lexicographically minimal coset members
};
H1Result h1(const GModule& gm);

/// The twisted G-set g*y = g.y + alpha(g) on the underlying module.
/// That this is a genuine action is verified at construction.
class TwistedGSet {
public:
    explicit TwistedGSet(Cocycle alpha);

    const GModule& gmodule() const { return alpha_.gmodule(); }
    const Cocycle& cocycle() const { return alpha_; }
    int64_t act(int g, int64_t y) const;
    std::vector<int64_t> fixed_points() const;

private:
    Cocycle alpha_;
};

TwistedGSet torsor_from_cocycle(const Cocycle& alpha);

/// Degree-d line-bundle classes on the torsor twisted by alpha.
///
/// Degree-d divisors are size-d multisets of module elements and the class of
/// a multiset is its sum (the genus-1 Abel-Jacobi identification: summation
/// Pic^d -> M is a bijection on classes). The twisted action moves divisors
/// pointwise; this routine derives the induced action on classes, checks that
/// it is of twisted-translation form c -> g.c + t(g) (anything else signals a
/// model bug), and returns the extracted cocycle t. For every d the result
/// works out to d*alpha; callers assert that identity rather than assume it.
Cocycle picd_cocycle(const Cocycle& alpha, int64_t d);

} // namespace wc
