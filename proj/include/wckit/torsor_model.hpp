#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace wc {

/// Cyclic-group model of a subgroup of the Weil-Chatelet group H^1(k, E),
/// together with the multipliers through which Aut_k(E) acts on it. The
/// multiplier set must be a subgroup of (Z/n)^x containing 1; the generic
/// non-CM case is {1, n-1}.
struct WCModel {
    int64_t n;
    std::vector<int64_t> aut; // sorted multiplier subgroup

    WCModel(int64_t n, std::vector<int64_t> aut_multipliers);
    bool operator==(const WCModel& o) const = default;
};

/// An element of the modeled subgroup: a torsor class of period dividing n.
struct TorsorClass {
    WCModel model;
    int64_t value; // residue in [0, n)

    TorsorClass(WCModel m, int64_t v);
    int64_t order() const;
};

/// Same Aut-orbit: exists phi in the multiplier set with x = phi * y.
bool iso_related(const TorsorClass& x, const TorsorClass& y);

struct DerivedWitness {
    int64_t phi;
    int64_t d;
};

/// Derived equivalence in the model: exists phi in the multiplier set and an
/// integer d with gcd(d, ord(y)) = 1 such that x = phi * d * y.
std::optional<DerivedWitness> derived_witness(const TorsorClass& x, const TorsorClass& y);
bool derived_related(const TorsorClass& x, const TorsorClass& y);

/// d * y, the class of the degree-d line-bundle moduli space J_y(1, d);
/// d = 0 yields the Jacobian (the zero class).
TorsorClass moduli_label(const TorsorClass& y, int64_t d);

struct ClassifyReport {
    WCModel model;
    std::vector<std::vector<int64_t>> iso_classes;     // Aut-orbits, sorted by least member
    std::vector<std::vector<int64_t>> derived_classes; // sorted by least member
    std::map<int64_t, int64_t> elements_per_order;
    std::map<int64_t, int64_t> iso_classes_per_order;
    std::map<int64_t, int64_t> derived_classes_per_order;
    int64_t iso_classes_among_generators;     // classes of elements of full order n
    int64_t derived_classes_among_generators;
    bool derived_matches_cyclic_partition; // cross-check against subgroup_generated
};

/// Partition {0, ..., n-1} into iso classes and derived classes. The derived
/// partition is cross-checked against the "generates the same cyclic
/// subgroup" partition, which it provably equals in this model.
ClassifyReport classify(const WCModel& model);

} // namespace wc
