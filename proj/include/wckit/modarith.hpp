#pragma once

#include <cstdint>
#include <vector>

namespace wc {

// Exact arithmetic in Z/m and in explicit products of cyclic groups.
// Moduli are capped at 2^31 - 1 so every product fits in int64_t; anything
// larger is rejected up front rather than allowed to wrap.

int64_t checked_modulus(int64_t m);
int64_t mod_reduce(int64_t v, int64_t m);
int64_t mod_add(int64_t a, int64_t b, int64_t m);
int64_t mod_sub(int64_t a, int64_t b, int64_t m);
int64_t mod_mul(int64_t a, int64_t b, int64_t m);
int64_t mod_pow(int64_t base, int64_t exp, int64_t m);
int64_t gcd_i64(int64_t a, int64_t b);
int64_t lcm_checked(int64_t a, int64_t b);
bool is_unit(int64_t v, int64_t m);
int64_t mod_inverse(int64_t v, int64_t m);

/// A residue with its modulus attached. Values with different moduli never
/// combine; mixing them throws.
struct ZModElement {
    int64_t value;
    int64_t modulus;

    ZModElement(int64_t v, int64_t m);

    ZModElement operator+(const ZModElement& o) const;
    ZModElement operator-(const ZModElement& o) const;
    ZModElement operator*(const ZModElement& o) const;
    ZModElement operator-() const;
    bool operator==(const ZModElement& o) const = default;
};

/// Smallest t >= 1 with t*x = 0 (mod m); equals m / gcd(x, m).
int64_t element_order(const ZModElement& x);
int64_t residue_order(int64_t value, int64_t modulus);

/// { u in [1, m) : gcd(u, m) = 1 }, sorted. For m = 1 the trivial unit {0}.
std::vector<int64_t> unit_group(int64_t m);

/// Product of cyclic groups Z/n1 x ... x Z/nk, elements addressed either as
/// reduced tuples or as canonical indices in [0, size). The index encoding is
/// mixed-radix with the first factor most significant, so index order equals
/// lexicographic tuple order. Equality is positional: no Smith-normal-form
/// canonicalization happens.
class FiniteAbelianGroup {
public:
    explicit FiniteAbelianGroup(std::vector<int64_t> cyclic_orders);

    const std::vector<int64_t>& cyclic_orders() const { return orders_; }
    int64_t size() const { return size_; }
    int64_t exponent() const;

    int64_t index_of(const std::vector<int64_t>& tuple) const;
    std::vector<int64_t> tuple_of(int64_t index) const;

    int64_t zero() const { return 0; }
    int64_t add(int64_t a, int64_t b) const;
    int64_t neg(int64_t a) const;
    int64_t sub(int64_t a, int64_t b) const;
    int64_t scalar_mul(int64_t k, int64_t a) const;
    int64_t element_order(int64_t a) const;

    /// {0, x, 2x, ...}: iterated addition until the cycle closes. Sorted.
    std::vector<int64_t> subgroup_generated(int64_t a) const;

    bool operator==(const FiniteAbelianGroup& o) const { return orders_ == o.orders_; }

private:
    void check_index(int64_t a) const;

    std::vector<int64_t> orders_;
    int64_t size_;
};

} // namespace wc
