#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wckit/modarith.hpp"

namespace wc {

/// Finite model of the split Brauer group of the generic fiber of a Jacobian
/// elliptic fibration: Br = Br(k) + H^1(k, J_eta) with H^1 modeled by Z/n,
/// Br(k) by an opaque finite abelian group, and Br(S) by a subgroup of it.
/// No field arithmetic is modeled; only the group structure matters.
struct SplitBrauerModel {
    int64_t n;                    // order of the torsor part
    FiniteAbelianGroup brauer;    // model of Br(k)
    std::vector<int64_t> base_sub; // model of Br(S): sorted element indices

    SplitBrauerModel(int64_t n, FiniteAbelianGroup brauer_part,
                     const std::vector<int64_t>& base_generators);
    bool contains_in_base(int64_t element) const;
};

/// alpha = (X, gamma): torsor component x mod n, Brauer component as an
/// element index of the model's group.
struct BrauerClass {
    int64_t x;
    int64_t gamma;
};

/// Witness a with gcd(a, ord(x_alpha)) = 1, a*x_alpha = x_beta mod n, and
/// a*gamma - epsilon in the base subgroup. One integer a serves both
/// coordinates at once, as in a*(X, gamma) = (aX, a gamma); a is enumerated
/// mod lcm(n, exp(Br)), which is where every condition lives.
std::optional<int64_t> fiber_derived_witness(const BrauerClass& alpha, const BrauerClass& beta,
                                             const SplitBrauerModel& model);
bool fiber_derived_related(const BrauerClass& alpha, const BrauerClass& beta,
                           const SplitBrauerModel& model);

/// Do the images of alpha and beta in (Z/n + Br)/Br(S) generate the same
/// cyclic subgroup? Computed by closing each image under addition with
/// coset-canonical representatives.
bool same_cyclic_in_quotient(const BrauerClass& alpha, const BrauerClass& beta,
                             const SplitBrauerModel& model);

} // namespace wc
