#include "wckit/modarith.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "wckit/errors.hpp"
#include "wckit/guards.hpp"

namespace wc {

int64_t checked_modulus(int64_t m) {
    if (m < 1) throw validation_error("modulus must be >= 1, got " + std::to_string(m));
    if (m > guards().modulus_cap)
        throw validation_error("modulus " + std::to_string(m) + " exceeds cap 2^31-1");
    return m;
}

int64_t mod_reduce(int64_t v, int64_t m) {
    int64_t r = v % m;
    return r < 0 ? r + m : r;
}

static void check_same_modulus(int64_t a, int64_t b) {
    if (a != b)
        throw validation_error("cannot combine residues mod " + std::to_string(a) +
                               " and mod " + std::to_string(b));
}

int64_t mod_add(int64_t a, int64_t b, int64_t m) {
    int64_t s = a + b; // both in [0, m), m <= 2^31-1: no overflow
    return s >= m ? s - m : s;
}

int64_t mod_sub(int64_t a, int64_t b, int64_t m) {
    int64_t s = a - b;
    return s < 0 ? s + m : s;
}

int64_t mod_mul(int64_t a, int64_t b, int64_t m) {
    return (a * b) % m; // m <= 2^31-1 keeps the product below 2^62
}

int64_t mod_pow(int64_t base, int64_t exp, int64_t m) {
    if (exp < 0) throw validation_error("mod_pow: negative exponent");
    int64_t acc = mod_reduce(1, m);
    int64_t b = mod_reduce(base, m);
    while (exp > 0) {
        if (exp & 1) acc = mod_mul(acc, b, m);
        b = mod_mul(b, b, m);
        exp >>= 1;
    }
    return acc;
}

int64_t gcd_i64(int64_t a, int64_t b) {
    return std::gcd(a, b);
}

int64_t lcm_checked(int64_t a, int64_t b) {
    if (a == 0 || b == 0) return 0;
    int64_t g = std::gcd(a, b);
    int64_t l = (a / g) * b;
    if (l > guards().modulus_cap)
        throw validation_error("lcm " + std::to_string(l) + " exceeds cap 2^31-1");
    return l;
}

bool is_unit(int64_t v, int64_t m) {
    if (m == 1) return true;
    return std::gcd(mod_reduce(v, m), m) == 1;
}

int64_t mod_inverse(int64_t v, int64_t m) {
    checked_modulus(m);
    if (m == 1) return 0;
    int64_t a = mod_reduce(v, m);
    if (std::gcd(a, m) != 1)
        throw validation_error(std::to_string(v) + " is not a unit mod " + std::to_string(m));
    // extended Euclid
    int64_t old_r = a, r = m;
    int64_t old_s = 1, s = 0;
    while (r != 0) {
        int64_t q = old_r / r;
        int64_t tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    return mod_reduce(old_s, m);
}

ZModElement::ZModElement(int64_t v, int64_t m) : value(0), modulus(checked_modulus(m)) {
    value = mod_reduce(v, modulus);
}

ZModElement ZModElement::operator+(const ZModElement& o) const {
    check_same_modulus(modulus, o.modulus);
    return {mod_add(value, o.value, modulus), modulus};
}

ZModElement ZModElement::operator-(const ZModElement& o) const {
    check_same_modulus(modulus, o.modulus);
    return {mod_sub(value, o.value, modulus), modulus};
}

ZModElement ZModElement::operator*(const ZModElement& o) const {
    check_same_modulus(modulus, o.modulus);
    return {mod_mul(value, o.value, modulus), modulus};
}

ZModElement ZModElement::operator-() const {
    return {mod_sub(0, value, modulus), modulus};
}

int64_t residue_order(int64_t value, int64_t modulus) {
    checked_modulus(modulus);
    int64_t v = mod_reduce(value, modulus);
    return modulus / std::gcd(v, modulus);
}

int64_t element_order(const ZModElement& x) {
    return residue_order(x.value, x.modulus);
}

std::vector<int64_t> unit_group(int64_t m) {
    checked_modulus(m);
    if (m == 1) return {0};
    std::vector<int64_t> units;
    for (int64_t u = 1; u < m; ++u)
        if (std::gcd(u, m) == 1) units.push_back(u);
    return units;
}

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int64_t> cyclic_orders)
    : orders_(std::move(cyclic_orders)), size_(1) {
    for (int64_t n : orders_) {
        checked_modulus(n);
        if (size_ > guards().modulus_cap / n)
            throw validation_error("finite abelian group order exceeds cap 2^31-1");
        size_ *= n;
    }
}

int64_t FiniteAbelianGroup::exponent() const {
    int64_t e = 1;
    for (int64_t n : orders_) e = lcm_checked(e, n);
    return e;
}

int64_t FiniteAbelianGroup::index_of(const std::vector<int64_t>& tuple) const {
    if (tuple.size() != orders_.size())
        throw validation_error("tuple length " + std::to_string(tuple.size()) +
                               " does not match " + std::to_string(orders_.size()) +
                               " cyclic factors");
    int64_t idx = 0;
    for (size_t i = 0; i < orders_.size(); ++i)
        idx = idx * orders_[i] + mod_reduce(tuple[i], orders_[i]);
    return idx;
}

std::vector<int64_t> FiniteAbelianGroup::tuple_of(int64_t index) const {
    check_index(index);
    std::vector<int64_t> t(orders_.size(), 0);
    for (size_t i = orders_.size(); i-- > 0;) {
        t[i] = index % orders_[i];
        index /= orders_[i];
    }
    return t;
}

void FiniteAbelianGroup::check_index(int64_t a) const {
    if (a < 0 || a >= size_)
        throw validation_error("element index " + std::to_string(a) + " out of range [0, " +
                               std::to_string(size_) + ")");
}

int64_t FiniteAbelianGroup::add(int64_t a, int64_t b) const {
    check_index(a);
    check_index(b);
    int64_t out = 0;
    int64_t place = size_;
    for (size_t i = 0; i < orders_.size(); ++i) {
        place /= orders_[i];
        int64_t da = a / place, db = b / place;
        a %= place;
        b %= place;
        out = out * orders_[i] + mod_add(da, db, orders_[i]);
    }
    return out;
}

int64_t FiniteAbelianGroup::neg(int64_t a) const {
    check_index(a);
    int64_t out = 0;
    int64_t place = size_;
    for (size_t i = 0; i < orders_.size(); ++i) {
        place /= orders_[i];
        int64_t da = a / place;
        a %= place;
        out = out * orders_[i] + mod_sub(0, da, orders_[i]);
    }
    return out;
}

int64_t FiniteAbelianGroup::sub(int64_t a, int64_t b) const {
    return add(a, neg(b));
}

int64_t FiniteAbelianGroup::scalar_mul(int64_t k, int64_t a) const {
    check_index(a);
    int64_t out = 0;
    int64_t place = size_;
    for (size_t i = 0; i < orders_.size(); ++i) {
        place /= orders_[i];
        int64_t da = a / place;
        a %= place;
        out = out * orders_[i] + mod_reduce(mod_reduce(k, orders_[i]) * da, orders_[i]);
    }
    return out;
}

int64_t FiniteAbelianGroup::element_order(int64_t a) const {
    check_index(a);
    int64_t ord = 1;
    int64_t place = size_;
    for (size_t i = 0; i < orders_.size(); ++i) {
        place /= orders_[i];
        int64_t da = a / place;
        a %= place;
        ord = lcm_checked(ord, residue_order(da, orders_[i]));
    }
    return ord;
}

std::vector<int64_t> FiniteAbelianGroup::subgroup_generated(int64_t a) const {
    check_index(a);
    std::vector<int64_t> members;
    int64_t cur = 0;
    do {
        members.push_back(cur);
        cur = add(cur, a);
    } while (cur != 0);
    std::sort(members.begin(), members.end());
    return members;
}

} // namespace wc
