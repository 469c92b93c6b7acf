#pragma once

#include <cstdint>

namespace wc {

// Enumeration guards for the brute-force routines. Everything here is sized
// for desk-scale inputs; WC_GUARD_SCALE (integer >= 1, read once) multiplies
// the scalable limits for callers who accept longer runs.

struct Guards {
    int64_t modulus_cap;           // hard cap on any modulus (2^31 - 1)
    int64_t module_size_cap;       // |M| in cohomology enumerations
    int64_t group_size_cap;        // |G| in cohomology enumerations
    int64_t picd_degree_cap;       // divisor degree d
    int64_t cocycle_candidate_cap; // |M|^|G| candidate maps (absolute)
    int64_t divisor_count_cap;     // multisets enumerated by picd (absolute)
    int64_t curve_prime_cap;       // p for Weierstrass point counting
    int64_t cubic_prime_cap;       // p for plane-cubic operations
    int64_t pair_modulus_cap;      // m for congruence-image enumeration
    int64_t sp2_modulus_cap;       // m for the genus-2 symplectic closure
};

int64_t guard_scale();
const Guards& guards();

} // namespace wc
