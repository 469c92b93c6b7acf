#pragma once

#include <cstdint>
#include <vector>

namespace wc {

struct Mat2 {
    int64_t a, b, c, d; // [[a, b], [c, d]] over Z/m

    bool operator==(const Mat2& o) const = default;
};

/// The mod-m shadow of the congruence subgroup Gamma_0(N): all of SL2(Z/m)
/// with lower-left entry divisible by gcd(N, m). Strong approximation for
/// SL2 over Z identifies this congruence-condition set with the actual image
/// of Gamma_0(N); gamma0_word_check closes random words in lifted generators
/// as a runtime cross-check of the containment direction.
struct CongruenceImage {
    int64_t level;      // N
    int64_t modulus;    // m
    int64_t congruence; // gcd(N, m)
    std::vector<Mat2> matrices; // sorted by packed key
};

CongruenceImage gamma0_image(int64_t N, int64_t m);

/// Reduce `count` seeded random words in T = [[1,1],[0,1]], L_N = [[1,0],[N,1]]
/// and -I mod m and confirm each lands inside the congruence set.
bool gamma0_word_check(int64_t N, int64_t m, uint64_t seed, int count);

struct PairClass {
    int64_t x; // H^1(k, A) component
    int64_t y; // H^1(k, A-dual) component

    bool operator==(const PairClass& o) const = default;
    bool operator<(const PairClass& o) const { return x != o.x ? x < o.x : y < o.y; }
};

/// Multipliers modeling the polarization phi*: H^1(k,A) -> H^1(k,A^) and the
/// reverse map psi through which the b-entry acts.
struct PolarizationModel {
    int64_t phi;
    int64_t psi;
};

/// psi defaults to phi^-1 when phi is a unit mod m, else 0. The b-entry only
/// ever acts against a zero second coordinate in the polarized-conclusion
/// check, so the default never affects it.
PolarizationModel default_polarization(int64_t phi, int64_t m);

/// BFS closure of `start` under (x, y) -> (a x + b psi(y), c phi(x) + d y)
/// over every matrix of the group. Sorted.
std::vector<PairClass> orbit(const PairClass& start, const CongruenceImage& group,
                             const PolarizationModel& pol);

struct PolarizedReport {
    int64_t level;
    int64_t modulus;
    bool pass;
    struct Entry {
        int64_t x;         // orbit base point (x, 0)
        int64_t y;         // orbit member (y, 0)
        int64_t witness_a; // y = a x with gcd(a, ord(x)) = 1, or -1 if none
        bool ok;
    };
    std::vector<Entry> entries;
};

/// For every x mod m: every member of the orbit of (x, 0) with zero second
/// coordinate must be a*x for some a coprime to ord(x).
PolarizedReport polarized_conclusion_check(int64_t N, int64_t m, const PolarizationModel& pol);

struct SpImage {
    int genus;
    int64_t modulus;
    int64_t size;
    std::vector<Mat2> sl2;            // genus 1: the full matrix set
    std::vector<uint64_t> packed4x4;  // genus 2: nibble-packed 4x4 matrices, sorted
};

/// Closure of the reductions mod m of the standard integral symplectic
/// generators: T and its transpose for genus 1 (verified equal to SL2(Z/m) by
/// direct enumeration), the elementary symmetric translations [[I,B],[0,I]]
/// plus the block rotation [[0,I],[-I,0]] for genus 2 (each member verified
/// symplectic).
SpImage sp_image(int genus, int64_t m);

/// |SL2(Z/m)| and |Sp4(Z/m)| from the standard local factors, for cross-checks.
int64_t sl2_order(int64_t m);
int64_t sp4_order(int64_t m);

} // namespace wc
