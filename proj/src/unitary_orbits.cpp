#include "wckit/unitary_orbits.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <unordered_set>

#include "wckit/errors.hpp"
#include "wckit/guards.hpp"
#include "wckit/modarith.hpp"

namespace wc {

namespace {

int64_t pack2(const Mat2& g, int64_t m) {
    return ((g.a * m + g.b) * m + g.c) * m + g.d;
}

Mat2 mul2(const Mat2& g, const Mat2& h, int64_t m) {
    return {mod_add(mod_mul(g.a, h.a, m), mod_mul(g.b, h.c, m), m),
            mod_add(mod_mul(g.a, h.b, m), mod_mul(g.b, h.d, m), m),
            mod_add(mod_mul(g.c, h.a, m), mod_mul(g.d, h.c, m), m),
            mod_add(mod_mul(g.c, h.b, m), mod_mul(g.d, h.d, m), m)};
}

Mat2 reduce2(int64_t a, int64_t b, int64_t c, int64_t d, int64_t m) {
    return {mod_reduce(a, m), mod_reduce(b, m), mod_reduce(c, m), mod_reduce(d, m)};
}

void check_pair_modulus(int64_t m) {
    checked_modulus(m);
    if (m > guards().pair_modulus_cap)
        throw validation_error("modulus " + std::to_string(m) + " exceeds guard " +
                               std::to_string(guards().pair_modulus_cap));
}

} // namespace

CongruenceImage gamma0_image(int64_t N, int64_t m) {
    if (N < 1) throw validation_error("level N must be >= 1");
    check_pair_modulus(m);
    const int64_t g = gcd_i64(N, m);
    CongruenceImage out{N, m, g, {}};
    for (int64_t a = 0; a < m; ++a)
        for (int64_t b = 0; b < m; ++b)
            for (int64_t c = 0; c < m; ++c) {
                if (c % g != 0) continue;
                for (int64_t d = 0; d < m; ++d)
                    if (mod_sub(mod_mul(a, d, m), mod_mul(b, c, m), m) == mod_reduce(1, m))
                        out.matrices.push_back({a, b, c, d});
            }

    std::unordered_set<int64_t> keys;
    keys.reserve(out.matrices.size() * 2);
    for (const auto& mat : out.matrices) keys.insert(pack2(mat, m));

    // identity and inverses (adjugate of a det-1 matrix)
    if (!keys.count(pack2(reduce2(1, 0, 0, 1, m), m)))
        throw check_failure("congruence image lacks the identity");
    for (const auto& mat : out.matrices)
        if (!keys.count(pack2(reduce2(mat.d, -mat.b, -mat.c, mat.a, m), m)))
            throw check_failure("congruence image lacks an inverse");

    // closure under multiplication: exhaustive when affordable, otherwise a
    // seeded deterministic sample
    const size_t n = out.matrices.size();
    if (n * n <= 4'000'000) {
        for (const auto& g1 : out.matrices)
            for (const auto& g2 : out.matrices)
                if (!keys.count(pack2(mul2(g1, g2, m), m)))
                    throw check_failure("congruence image is not closed under multiplication");
    } else {
        std::mt19937_64 rng(0x6a0);
        std::uniform_int_distribution<size_t> pick(0, n - 1);
        for (int t = 0; t < 1'000'000; ++t)
            if (!keys.count(pack2(mul2(out.matrices[pick(rng)], out.matrices[pick(rng)], m), m)))
                throw check_failure("congruence image is not closed under multiplication");
    }
    return out;
}

bool gamma0_word_check(int64_t N, int64_t m, uint64_t seed, int count) {
    if (N < 1) throw validation_error("level N must be >= 1");
    check_pair_modulus(m);
    const int64_t g = gcd_i64(N, m);
    const Mat2 T = reduce2(1, 1, 0, 1, m);
    const Mat2 L = reduce2(1, 0, N, 1, m);
    const Mat2 negI = reduce2(-1, 0, 0, -1, m);
    const Mat2 Tinv = reduce2(1, -1, 0, 1, m);
    const Mat2 Linv = reduce2(1, 0, -N, 1, m);
    const Mat2 gens[5] = {T, L, negI, Tinv, Linv};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, 4);
    std::uniform_int_distribution<int> len(1, 24);
    for (int w = 0; w < count; ++w) {
        Mat2 acc = reduce2(1, 0, 0, 1, m);
        const int L_ = len(rng);
        for (int i = 0; i < L_; ++i) acc = mul2(acc, gens[pick(rng)], m);
        const bool det_ok =
            mod_sub(mod_mul(acc.a, acc.d, m), mod_mul(acc.b, acc.c, m), m) == mod_reduce(1, m);
        if (!det_ok || acc.c % g != 0) return false;
    }
    return true;
}

PolarizationModel default_polarization(int64_t phi, int64_t m) {
    checked_modulus(m);
    phi = mod_reduce(phi, m);
    return {phi, is_unit(phi, m) ? mod_inverse(phi, m) : 0};
}

std::vector<PairClass> orbit(const PairClass& start, const CongruenceImage& group,
                             const PolarizationModel& pol) {
    const int64_t m = group.modulus;
    const int64_t phi = mod_reduce(pol.phi, m);
    const int64_t psi = mod_reduce(pol.psi, m);
    const PairClass s{mod_reduce(start.x, m), mod_reduce(start.y, m)};
    auto key = [m](const PairClass& p) { return p.x * m + p.y; };
    std::set<int64_t> seen{key(s)};
    std::vector<PairClass> frontier{s}, all{s};
    while (!frontier.empty()) {
        std::vector<PairClass> next;
        for (const PairClass& p : frontier)
            for (const Mat2& g : group.matrices) {
                PairClass q{mod_add(mod_mul(g.a, p.x, m), mod_mul(g.b, mod_mul(psi, p.y, m), m), m),
                            mod_add(mod_mul(g.c, mod_mul(phi, p.x, m), m), mod_mul(g.d, p.y, m), m)};
                if (seen.insert(key(q)).second) {
                    next.push_back(q);
                    all.push_back(q);
                }
            }
        frontier = std::move(next);
    }
    std::sort(all.begin(), all.end());
    return all;
}

PolarizedReport polarized_conclusion_check(int64_t N, int64_t m, const PolarizationModel& pol) {
    const CongruenceImage group = gamma0_image(N, m);
    PolarizedReport report{N, m, true, {}};
    for (int64_t x = 0; x < m; ++x) {
        const int64_t ord_x = residue_order(x, m);
        for (const PairClass& member : orbit({x, 0}, group, pol)) {
            if (member.y != 0) continue;
            // both conditions on the integer a depend only on a mod m
            // (ord(x) divides m), so the residue sweep is exhaustive
            int64_t witness = -1;
            for (int64_t a = 0; a < m && witness < 0; ++a)
                if (gcd_i64(a, ord_x) == 1 && mod_mul(a, x, m) == member.x) witness = a;
            const bool ok = witness >= 0;
            report.entries.push_back({x, member.x, witness, ok});
            if (!ok) report.pass = false;
        }
    }
    return report;
}

int64_t sl2_order(int64_t m) {
    // |SL2(Z/m)| = m^3 * prod_{p | m} (1 - p^-2)
    int64_t num = m * m * m, rem = m;
    for (int64_t p = 2; p * p <= rem; ++p)
        if (rem % p == 0) {
            num = num / (p * p) * (p * p - 1);
            while (rem % p == 0) rem /= p;
        }
    if (rem > 1) num = num / (rem * rem) * (rem * rem - 1);
    return num;
}

int64_t sp4_order(int64_t m) {
    // |Sp4(Z/m)| = m^10 * prod_{p | m} (1 - p^-2)(1 - p^-4)
    int64_t num = 1;
    for (int64_t i = 0; i < 10; ++i) num *= m;
    int64_t rem = m;
    auto apply = [&](int64_t p) {
        int64_t p2 = p * p, p4 = p2 * p2;
        num = num / p2 * (p2 - 1);
        num = num / p4 * (p4 - 1);
    };
    for (int64_t p = 2; p * p <= rem; ++p)
        if (rem % p == 0) {
            apply(p);
            while (rem % p == 0) rem /= p;
        }
    if (rem > 1) apply(rem);
    return num;
}

namespace {

using Mat4 = std::array<int64_t, 16>; // row-major 4x4 over Z/m

uint64_t pack4(const Mat4& g) {
    uint64_t key = 0;
    for (int i = 0; i < 16; ++i) key = (key << 4) | static_cast<uint64_t>(g[i]);
    return key;
}

Mat4 mul4(const Mat4& g, const Mat4& h, int64_t m) {
    Mat4 out{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            int64_t s = 0;
            for (int k = 0; k < 4; ++k) s += g[i * 4 + k] * h[k * 4 + j];
            out[i * 4 + j] = s % m;
        }
    return out;
}

bool is_symplectic4(const Mat4& g, int64_t m) {
    // M^t J M = J with J = [[0, I], [-I, 0]]
    auto J = [m](int i, int j) -> int64_t {
        if (i == j - 2) return 1;
        if (i == j + 2) return m - 1;
        return 0;
    };
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            int64_t s = 0;
            for (int k = 0; k < 4; ++k)
                for (int l = 0; l < 4; ++l) s += g[k * 4 + i] * J(k, l) % m * g[l * 4 + j];
            if (mod_reduce(s, m) != J(i, j) % m) return false;
        }
    return true;
}

} // namespace

SpImage sp_image(int genus, int64_t m) {
    checked_modulus(m);
    if (genus == 1) {
        check_pair_modulus(m);
        const Mat2 T = reduce2(1, 1, 0, 1, m);
        const Mat2 Tt = reduce2(1, 0, 1, 1, m);
        std::set<int64_t> seen;
        std::vector<Mat2> frontier{reduce2(1, 0, 0, 1, m)}, all = frontier;
        seen.insert(pack2(all[0], m));
        while (!frontier.empty()) {
            std::vector<Mat2> next;
            for (const Mat2& g : frontier)
                for (const Mat2& gen : {T, Tt}) {
                    Mat2 h = mul2(g, gen, m);
                    if (seen.insert(pack2(h, m)).second) {
                        next.push_back(h);
                        all.push_back(h);
                    }
                }
            frontier = std::move(next);
        }
        // cross-check against direct enumeration of SL2(Z/m)
        std::set<int64_t> direct;
        for (int64_t a = 0; a < m; ++a)
            for (int64_t b = 0; b < m; ++b)
                for (int64_t c = 0; c < m; ++c)
                    for (int64_t d = 0; d < m; ++d)
                        if (mod_sub(mod_mul(a, d, m), mod_mul(b, c, m), m) == mod_reduce(1, m))
                            direct.insert(pack2({a, b, c, d}, m));
        if (direct != seen)
            throw check_failure("genus-1 generator closure does not equal SL2(Z/m)");
        std::sort(all.begin(), all.end(),
                  [m](const Mat2& x, const Mat2& y) { return pack2(x, m) < pack2(y, m); });
        SpImage out{1, m, static_cast<int64_t>(all.size()), std::move(all), {}};
        return out;
    }
    if (genus != 2) throw validation_error("genus must be 1 or 2");
    if (m > guards().sp2_modulus_cap)
        throw validation_error("genus-2 modulus " + std::to_string(m) + " exceeds guard " +
                               std::to_string(guards().sp2_modulus_cap) +
                               " (|Sp4(Z/m)| grows like m^10)");
    if (m > 16) throw validation_error("genus-2 packing requires m <= 16");

    auto identity4 = [&] {
        Mat4 g{};
        for (int i = 0; i < 4; ++i) g[i * 4 + i] = 1 % m;
        return g;
    }();
    std::vector<Mat4> gens;
    // translations [[I, B], [0, I]] for the elementary symmetric B
    const int64_t Bs[3][4] = {{1, 0, 0, 0}, {0, 0, 0, 1}, {0, 1, 1, 0}};
    for (const auto& B : Bs) {
        Mat4 g = identity4;
        g[0 * 4 + 2] = B[0] % m;
        g[0 * 4 + 3] = B[1] % m;
        g[1 * 4 + 2] = B[2] % m;
        g[1 * 4 + 3] = B[3] % m;
        gens.push_back(g);
    }
    {
        Mat4 rot{}; // [[0, I], [-I, 0]]
        rot[0 * 4 + 2] = 1 % m;
        rot[1 * 4 + 3] = 1 % m;
        rot[2 * 4 + 0] = mod_reduce(-1, m);
        rot[3 * 4 + 1] = mod_reduce(-1, m);
        gens.push_back(rot);
    }
    for (const auto& g : gens)
        if (!is_symplectic4(g, m)) throw check_failure("a genus-2 generator is not symplectic");

    std::unordered_set<uint64_t> seen{pack4(identity4)};
    std::vector<Mat4> frontier{identity4};
    std::vector<uint64_t> packed{pack4(identity4)};
    while (!frontier.empty()) {
        std::vector<Mat4> next;
        for (const Mat4& g : frontier)
            for (const Mat4& gen : gens) {
                Mat4 h = mul4(g, gen, m);
                if (seen.insert(pack4(h)).second) {
                    next.push_back(h);
                    packed.push_back(pack4(h));
                    if (!is_symplectic4(h, m))
                        throw check_failure("generator closure escaped Sp4(Z/m)");
                }
            }
        frontier = std::move(next);
    }
    std::sort(packed.begin(), packed.end());
    SpImage out{2, m, static_cast<int64_t>(packed.size()), {}, std::move(packed)};
    return out;
}

} // namespace wc
