#include "wckit/elliptic_ff.hpp"

#include <algorithm>
#include <string>

#include "wckit/errors.hpp"
#include "wckit/guards.hpp"
#include "wckit/modarith.hpp"

namespace wc {

bool is_prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

static int64_t checked_curve_prime(int64_t p, int64_t cap, const char* what) {
    if (!is_prime(p)) throw validation_error(std::string(what) + ": p must be prime");
    if (p <= 3) throw validation_error(std::string(what) + ": characteristic 2 and 3 are rejected");
    if (p > cap)
        throw validation_error(std::string(what) + ": p exceeds guard " + std::to_string(cap));
    return p;
}

WeierstrassCurve::WeierstrassCurve(int64_t p_, int64_t a_, int64_t b_)
    : p(checked_curve_prime(p_, guards().curve_prime_cap, "wcurve")),
      a(mod_reduce(a_, p)),
      b(mod_reduce(b_, p)) {
    if (discriminant() == 0)
        throw validation_error("singular curve: discriminant -16(4a^3+27b^2) = 0 mod p");
}

int64_t WeierstrassCurve::discriminant() const {
    int64_t t = mod_add(mod_mul(4, mod_mul(a, mod_mul(a, a, p), p), p),
                        mod_mul(27, mod_mul(b, b, p), p), p);
    return mod_mul(mod_reduce(-16, p), t, p);
}

int64_t WeierstrassCurve::j_invariant() const {
    int64_t a3 = mod_mul(4, mod_mul(a, mod_mul(a, a, p), p), p);
    int64_t denom = mod_add(a3, mod_mul(27, mod_mul(b, b, p), p), p);
    return mod_mul(mod_reduce(1728, p), mod_mul(a3, mod_inverse(denom, p), p), p);
}

static std::vector<uint8_t> square_table(int64_t p) {
    std::vector<uint8_t> sq(p, 0);
    for (int64_t v = 0; v < p; ++v) sq[mod_mul(v, v, p)] = 1;
    return sq;
}

static int64_t count_points(int64_t p, int64_t a, int64_t b, const std::vector<uint8_t>& sq) {
    int64_t count = 1; // point at infinity
    for (int64_t x = 0; x < p; ++x) {
        int64_t rhs = mod_add(mod_mul(x, mod_mul(x, x, p), p), mod_add(mod_mul(a, x, p), b, p), p);
        if (rhs == 0)
            count += 1;
        else if (sq[rhs])
            count += 2;
    }
    return count;
}

int64_t curve_group_order(const WeierstrassCurve& curve) {
    auto sq = square_table(curve.p);
    int64_t n = count_points(curve.p, curve.a, curve.b, sq);
    int64_t diff = n - curve.p - 1;
    if (diff * diff > 4 * curve.p)
        throw check_failure("point count violates the Hasse bound");
    return n;
}

int aut_group_order(const WeierstrassCurve& curve) {
    // F_p^x is cyclic of order p-1, so #{u : u^k = 1} = gcd(k, p-1)
    if (curve.b == 0) return static_cast<int>(gcd_i64(4, curve.p - 1)); // j = 1728
    if (curve.a == 0) return static_cast<int>(gcd_i64(6, curve.p - 1)); // j = 0
    return 2;
}

// ---------------------------------------------------------------------------
// small extension fields F_{p^k}, k <= 3, as quotient rings F_p[t]/(f)
// ---------------------------------------------------------------------------

namespace {

struct ExtField {
    int64_t p;
    int k;
    std::array<int64_t, 3> red; // t^k = red[0] + red[1] t + red[2] t^2

    using Elem = std::array<int64_t, 3>;

    ExtField(int64_t p_, int k_) : p(p_), k(k_), red{0, 0, 0} {
        if (k == 1) return;
        // monic f of degree k (k = 2 or 3) is irreducible iff it has no root
        for (int64_t f0 = 0; f0 < p; ++f0) {
            for (int64_t f1 = 0; f1 < p; ++f1) {
                int64_t f2max = k == 3 ? p : 1;
                for (int64_t f2 = 0; f2 < f2max; ++f2) {
                    bool has_root = false;
                    for (int64_t x = 0; x < p && !has_root; ++x) {
                        int64_t v = mod_pow(x, k, p);
                        if (k == 3) v = mod_add(v, mod_mul(f2, mod_mul(x, x, p), p), p);
                        v = mod_add(v, mod_add(mod_mul(f1, x, p), f0, p), p);
                        has_root = v == 0;
                    }
                    if (!has_root) {
                        red[0] = mod_reduce(-f0, p);
                        red[1] = mod_reduce(-f1, p);
                        red[2] = k == 3 ? mod_reduce(-f2, p) : 0;
                        return;
                    }
                }
            }
        }
        throw check_failure("no irreducible polynomial found"); // cannot happen
    }

    int64_t order() const {
        int64_t q = 1;
        for (int i = 0; i < k; ++i) q *= p;
        return q;
    }

    Elem zero() const { return {0, 0, 0}; }
    Elem one() const { return {1, 0, 0}; }
    Elem from_base(int64_t v) const { return {mod_reduce(v, p), 0, 0}; }
    Elem from_index(int64_t idx) const {
        Elem e{0, 0, 0};
        for (int i = 0; i < k; ++i) {
            e[i] = idx % p;
            idx /= p;
        }
        return e;
    }

    bool is_zero(const Elem& a) const { return a[0] == 0 && a[1] == 0 && a[2] == 0; }

    Elem add(const Elem& a, const Elem& b) const {
        return {mod_add(a[0], b[0], p), mod_add(a[1], b[1], p), mod_add(a[2], b[2], p)};
    }
    Elem sub(const Elem& a, const Elem& b) const {
        return {mod_sub(a[0], b[0], p), mod_sub(a[1], b[1], p), mod_sub(a[2], b[2], p)};
    }
    Elem scale(int64_t c, const Elem& a) const {
        c = mod_reduce(c, p);
        return {mod_mul(c, a[0], p), mod_mul(c, a[1], p), mod_mul(c, a[2], p)};
    }

    Elem mul(const Elem& a, const Elem& b) const {
        int64_t prod[5] = {0, 0, 0, 0, 0};
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
        for (int d = 2 * k - 2; d >= k; --d) {
            int64_t c = prod[d];
            if (c == 0) continue;
            prod[d] = 0;
            for (int i = 0; i < k; ++i)
                prod[d - k + i] = (prod[d - k + i] + c * red[i]) % p;
        }
        return {prod[0], k > 1 ? prod[1] : 0, k > 2 ? prod[2] : 0};
    }

};

// polynomial of degree <= 2 over an ExtField, low degree first
struct ExtQuadratic {
    std::array<ExtField::Elem, 3> c;
    int deg; // -1 when zero
};

ExtQuadratic make_quadratic(const ExtField& F, const ExtField::Elem& c0,
                            const ExtField::Elem& c1, const ExtField::Elem& c2) {
    ExtQuadratic q{{c0, c1, c2}, -1};
    for (int d = 2; d >= 0; --d)
        if (!F.is_zero(q.c[d])) {
            q.deg = d;
            break;
        }
    return q;
}

// remainder up to a unit factor (pseudo-division, no field inversions);
// gcd degrees are unaffected by the scaling
ExtQuadratic pseudo_rem(const ExtField& F, ExtQuadratic a, const ExtQuadratic& b) {
    while (a.deg >= b.deg && a.deg >= 0) {
        const ExtField::Elem la = a.c[a.deg];
        const ExtField::Elem lb = b.c[b.deg];
        const int shift = a.deg - b.deg;
        std::array<ExtField::Elem, 3> nc = {F.zero(), F.zero(), F.zero()};
        for (int i = 0; i <= a.deg; ++i) nc[i] = F.mul(lb, a.c[i]);
        for (int i = 0; i <= b.deg; ++i) nc[i + shift] = F.sub(nc[i + shift], F.mul(la, b.c[i]));
        a = make_quadratic(F, nc[0], nc[1], nc[2]);
    }
    return a;
}

// do the (up to three) restricted partials share a root over the algebraic
// closure? zero polynomials constrain nothing; all-zero means the whole line
// is singular.
bool common_root_exists(const ExtField& F, const std::vector<ExtQuadratic>& polys) {
    std::vector<ExtQuadratic> nz;
    for (const auto& q : polys) {
        if (q.deg == 0) return false; // a nonzero constant kills every candidate
        if (q.deg >= 1) nz.push_back(q);
    }
    if (nz.empty()) return true;
    ExtQuadratic g = nz[0];
    for (size_t i = 1; i < nz.size(); ++i) {
        ExtQuadratic a = g, b = nz[i];
        while (b.deg >= 0) {
            ExtQuadratic r = pseudo_rem(F, a, b);
            a = b;
            b = r;
        }
        g = a;
        if (g.deg == 0) return false;
    }
    return g.deg >= 1;
}

// conic coefficient order: x^2, xy, xz, y^2, yz, z^2
using Conic = std::array<int64_t, 6>;

std::array<Conic, 3> partials_of(const std::array<int64_t, 10>& c, int64_t p) {
    auto r = [p](int64_t v) { return mod_reduce(v, p); };
    Conic fx = {r(3 * c[0]), r(2 * c[1]), r(2 * c[2]), c[3], c[4], c[5]};
    Conic fy = {c[1], r(2 * c[3]), c[4], r(3 * c[6]), r(2 * c[7]), c[8]};
    Conic fz = {c[2], c[4], r(2 * c[5]), c[7], r(2 * c[8]), r(3 * c[9])};
    return {fx, fy, fz};
}

ExtField::Elem conic_eval(const ExtField& F, const Conic& q, const ExtField::Elem& x,
                          const ExtField::Elem& y, const ExtField::Elem& z) {
    ExtField::Elem acc = F.scale(q[0], F.mul(x, x));
    acc = F.add(acc, F.scale(q[1], F.mul(x, y)));
    acc = F.add(acc, F.scale(q[2], F.mul(x, z)));
    acc = F.add(acc, F.scale(q[3], F.mul(y, y)));
    acc = F.add(acc, F.scale(q[4], F.mul(y, z)));
    acc = F.add(acc, F.scale(q[5], F.mul(z, z)));
    return acc;
}

// has the curve a singular point over F_{p^k}? partials share a projective zero
bool singular_over(const std::array<Conic, 3>& d, int64_t p, int k) {
    ExtField F(p, k);
    const int64_t q = F.order();
    // chart z = 1: quadratics in y for each x0
    for (int64_t idx = 0; idx < q; ++idx) {
        ExtField::Elem x0 = F.from_index(idx);
        ExtField::Elem x0sq = F.mul(x0, x0);
        std::vector<ExtQuadratic> restricted;
        restricted.reserve(3);
        for (const Conic& qq : d) {
            // A y^2 + B y + C with A = q[y^2], B = q[xy] x0 + q[yz], C = q[x^2] x0^2 + q[xz] x0 + q[z^2]
            ExtField::Elem A = F.from_base(qq[3]);
            ExtField::Elem B = F.add(F.scale(qq[1], x0), F.from_base(qq[4]));
            ExtField::Elem C =
                F.add(F.add(F.scale(qq[0], x0sq), F.scale(qq[2], x0)), F.from_base(qq[5]));
            restricted.push_back(make_quadratic(F, C, B, A));
        }
        if (common_root_exists(F, restricted)) return true;
    }
    // line z = 0: points (x0 : 1 : 0) and (1 : 0 : 0)
    for (int64_t idx = 0; idx < q; ++idx) {
        ExtField::Elem x0 = F.from_index(idx);
        ExtField::Elem one = F.one(), zero = F.zero();
        bool all = true;
        for (const Conic& qq : d)
            if (!F.is_zero(conic_eval(F, qq, x0, one, zero))) {
                all = false;
                break;
            }
        if (all) return true;
    }
    bool all = true;
    for (const Conic& qq : d)
        if (qq[0] != 0) all = false;
    return all;
}

} // namespace

PlaneCubic::PlaneCubic(int64_t p, const std::array<int64_t, 10>& coeffs)
    : p_(checked_curve_prime(p, guards().cubic_prime_cap, "cubic")), coeffs_() {
    bool all_zero = true;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        coeffs_[i] = mod_reduce(coeffs[i], p_);
        if (coeffs_[i] != 0) all_zero = false;
    }
    if (all_zero) throw validation_error("cubic: the zero form does not define a curve");
    auto d = partials_of(coeffs_, p_);
    for (int k = 1; k <= 3; ++k)
        if (singular_over(d, p_, k))
            throw validation_error("cubic defines a singular curve (singular point of degree <= " +
                                   std::to_string(k) + ")");
}

int64_t PlaneCubic::evaluate(int64_t x, int64_t y, int64_t z) const {
    x = mod_reduce(x, p_);
    y = mod_reduce(y, p_);
    z = mod_reduce(z, p_);
    const auto& c = coeffs_;
    int64_t acc = 0;
    int64_t monos[10] = {
        mod_mul(x, mod_mul(x, x, p_), p_), mod_mul(x, mod_mul(x, y, p_), p_),
        mod_mul(x, mod_mul(x, z, p_), p_), mod_mul(x, mod_mul(y, y, p_), p_),
        mod_mul(x, mod_mul(y, z, p_), p_), mod_mul(x, mod_mul(z, z, p_), p_),
        mod_mul(y, mod_mul(y, y, p_), p_), mod_mul(y, mod_mul(y, z, p_), p_),
        mod_mul(y, mod_mul(z, z, p_), p_), mod_mul(z, mod_mul(z, z, p_), p_)};
    for (int i = 0; i < 10; ++i) acc = mod_add(acc, mod_mul(c[i], monos[i], p_), p_);
    return acc;
}

bool PlaneCubic::contains(const ProjectivePoint& pt) const {
    if (mod_reduce(pt.x, p_) == 0 && mod_reduce(pt.y, p_) == 0 && mod_reduce(pt.z, p_) == 0)
        throw validation_error("(0:0:0) is not a projective point");
    return evaluate(pt.x, pt.y, pt.z) == 0;
}

int64_t PlaneCubic::hessian_at(const ProjectivePoint& pt) const {
    const auto& c = coeffs_;
    const int64_t p = p_;
    int64_t x = mod_reduce(pt.x, p), y = mod_reduce(pt.y, p), z = mod_reduce(pt.z, p);
    auto lin = [&](int64_t cx, int64_t cy, int64_t cz) {
        return mod_add(mod_add(mod_mul(mod_reduce(cx, p), x, p), mod_mul(mod_reduce(cy, p), y, p), p),
                       mod_mul(mod_reduce(cz, p), z, p), p);
    };
    int64_t xx = lin(6 * c[0], 2 * c[1], 2 * c[2]);
    int64_t xy = lin(2 * c[1], 2 * c[3], c[4]);
    int64_t xz = lin(2 * c[2], c[4], 2 * c[5]);
    int64_t yy = lin(2 * c[3], 6 * c[6], 2 * c[7]);
    int64_t yz = lin(c[4], 2 * c[7], 2 * c[8]);
    int64_t zz = lin(2 * c[5], 2 * c[8], 6 * c[9]);
    int64_t det = mod_mul(xx, mod_sub(mod_mul(yy, zz, p), mod_mul(yz, yz, p), p), p);
    det = mod_sub(det, mod_mul(xy, mod_sub(mod_mul(xy, zz, p), mod_mul(yz, xz, p), p), p), p);
    det = mod_add(det, mod_mul(xz, mod_sub(mod_mul(xy, yz, p), mod_mul(yy, xz, p), p), p), p);
    return det;
}

ProjectivePoint normalize(const ProjectivePoint& pt, int64_t p) {
    int64_t x = mod_reduce(pt.x, p), y = mod_reduce(pt.y, p), z = mod_reduce(pt.z, p);
    int64_t lead = x != 0 ? x : (y != 0 ? y : z);
    if (lead == 0) throw validation_error("(0:0:0) is not a projective point");
    int64_t inv = mod_inverse(lead, p);
    return {mod_mul(x, inv, p), mod_mul(y, inv, p), mod_mul(z, inv, p)};
}

bool same_point(const ProjectivePoint& a, const ProjectivePoint& b, int64_t p) {
    auto na = normalize(a, p), nb = normalize(b, p);
    return na.x == nb.x && na.y == nb.y && na.z == nb.z;
}

template <typename Fn>
static void for_each_projective_point(int64_t p, Fn&& fn) {
    for (int64_t x = 0; x < p; ++x)
        for (int64_t y = 0; y < p; ++y)
            if (fn(ProjectivePoint{x, y, 1})) return;
    for (int64_t x = 0; x < p; ++x)
        if (fn(ProjectivePoint{x, 1, 0})) return;
    fn(ProjectivePoint{1, 0, 0});
}

int64_t cubic_point_count(const PlaneCubic& cubic) {
    int64_t n = 0;
    for_each_projective_point(cubic.p(), [&](const ProjectivePoint& pt) {
        if (cubic.evaluate(pt.x, pt.y, pt.z) == 0) ++n;
        return false;
    });
    return n;
}

std::optional<ProjectivePoint> cubic_rational_point(const PlaneCubic& cubic) {
    std::optional<ProjectivePoint> found;
    for_each_projective_point(cubic.p(), [&](const ProjectivePoint& pt) {
        if (cubic.evaluate(pt.x, pt.y, pt.z) == 0) {
            found = normalize(pt, cubic.p());
            return true;
        }
        return false;
    });
    return found;
}

// ---------------------------------------------------------------------------
// flex-based reduction to short Weierstrass form
// ---------------------------------------------------------------------------

namespace {

// dense ternary form of fixed degree; monomials in lex order (x before y before z)
struct TernaryForm {
    int degree;
    std::vector<int64_t> c;
};

std::vector<std::array<int, 3>> monomials_of(int degree) {
    std::vector<std::array<int, 3>> out;
    for (int i = degree; i >= 0; --i)
        for (int j = degree - i; j >= 0; --j) out.push_back({i, j, degree - i - j});
    return out;
}

int monomial_index(int degree, int i, int j) {
    int idx = 0;
    for (int a = degree; a > i; --a) idx += degree - a + 1;
    return idx + (degree - i - j);
}

TernaryForm form_mul(const TernaryForm& f, const TernaryForm& g, int64_t p) {
    TernaryForm out{f.degree + g.degree,
                    std::vector<int64_t>(monomials_of(f.degree + g.degree).size(), 0)};
    auto mf = monomials_of(f.degree), mg = monomials_of(g.degree);
    for (size_t a = 0; a < mf.size(); ++a) {
        if (f.c[a] == 0) continue;
        for (size_t b = 0; b < mg.size(); ++b) {
            if (g.c[b] == 0) continue;
            int i = mf[a][0] + mg[b][0], j = mf[a][1] + mg[b][1];
            int idx = monomial_index(out.degree, i, j);
            out.c[idx] = mod_add(out.c[idx], mod_mul(f.c[a], g.c[b], p), p);
        }
    }
    return out;
}

// substitute variables by rows of S: F'(v) = F(S v)
std::array<int64_t, 10> substitute_linear(const std::array<int64_t, 10>& c,
                                          const std::array<std::array<int64_t, 3>, 3>& S,
                                          int64_t p) {
    TernaryForm rows[3];
    for (int r = 0; r < 3; ++r)
        rows[r] = TernaryForm{1, {mod_reduce(S[r][0], p), mod_reduce(S[r][1], p),
                                  mod_reduce(S[r][2], p)}};
    TernaryForm acc{3, std::vector<int64_t>(10, 0)};
    auto m3 = monomials_of(3);
    for (size_t t = 0; t < m3.size(); ++t) {
        if (c[t] == 0) continue;
        TernaryForm term{0, {1}};
        for (int rep = 0; rep < m3[t][0]; ++rep) term = form_mul(term, rows[0], p);
        for (int rep = 0; rep < m3[t][1]; ++rep) term = form_mul(term, rows[1], p);
        for (int rep = 0; rep < m3[t][2]; ++rep) term = form_mul(term, rows[2], p);
        for (size_t i = 0; i < 10; ++i)
            acc.c[i] = mod_add(acc.c[i], mod_mul(c[t], term.c[i], p), p);
    }
    std::array<int64_t, 10> out;
    std::copy(acc.c.begin(), acc.c.end(), out.begin());
    return out;
}

int64_t det3(const std::array<std::array<int64_t, 3>, 3>& m, int64_t p) {
    int64_t d = mod_mul(m[0][0], mod_sub(mod_mul(m[1][1], m[2][2], p), mod_mul(m[1][2], m[2][1], p), p), p);
    d = mod_sub(d, mod_mul(m[0][1], mod_sub(mod_mul(m[1][0], m[2][2], p), mod_mul(m[1][2], m[2][0], p), p), p), p);
    d = mod_add(d, mod_mul(m[0][2], mod_sub(mod_mul(m[1][0], m[2][1], p), mod_mul(m[1][1], m[2][0], p), p), p), p);
    return d;
}

std::array<std::array<int64_t, 3>, 3> inverse3(const std::array<std::array<int64_t, 3>, 3>& m,
                                               int64_t p) {
    int64_t d = det3(m, p);
    int64_t di = mod_inverse(d, p);
    auto cof = [&](int r, int c) {
        int r1 = (r + 1) % 3, r2 = (r + 2) % 3, c1 = (c + 1) % 3, c2 = (c + 2) % 3;
        return mod_sub(mod_mul(m[r1][c1], m[r2][c2], p), mod_mul(m[r1][c2], m[r2][c1], p), p);
    };
    std::array<std::array<int64_t, 3>, 3> inv;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) inv[r][c] = mod_mul(cof(c, r), di, p); // adjugate transpose
    return inv;
}

// coordinate change sending flex R to (0:1:0) with tangent line z = 0
std::array<std::array<int64_t, 3>, 3> flex_frame(const PlaneCubic& cubic,
                                                 const ProjectivePoint& R) {
    const int64_t p = cubic.p();
    auto d = partials_of(cubic.coeffs(), p);
    int64_t rx = mod_reduce(R.x, p), ry = mod_reduce(R.y, p), rz = mod_reduce(R.z, p);
    auto eval_conic = [&](const Conic& q) {
        int64_t acc = mod_mul(q[0], mod_mul(rx, rx, p), p);
        acc = mod_add(acc, mod_mul(q[1], mod_mul(rx, ry, p), p), p);
        acc = mod_add(acc, mod_mul(q[2], mod_mul(rx, rz, p), p), p);
        acc = mod_add(acc, mod_mul(q[3], mod_mul(ry, ry, p), p), p);
        acc = mod_add(acc, mod_mul(q[4], mod_mul(ry, rz, p), p), p);
        acc = mod_add(acc, mod_mul(q[5], mod_mul(rz, rz, p), p), p);
        return acc;
    };
    std::array<int64_t, 3> tangent = {eval_conic(d[0]), eval_conic(d[1]), eval_conic(d[2])};
    if (tangent[0] == 0 && tangent[1] == 0 && tangent[2] == 0)
        throw check_failure("smooth cubic has vanishing gradient"); // cannot happen
    // forms vanishing at R: rows of the cross-product matrix
    std::array<std::array<int64_t, 3>, 3> vanishing = {{{0, mod_reduce(-rz, p), ry},
                                                        {rz, 0, mod_reduce(-rx, p)},
                                                        {mod_reduce(-ry, p), rx, 0}}};
    auto proportional = [&](const std::array<int64_t, 3>& u, const std::array<int64_t, 3>& v) {
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (mod_sub(mod_mul(u[i], v[j], p), mod_mul(u[j], v[i], p), p) != 0) return false;
        return true;
    };
    std::array<int64_t, 3> w{0, 0, 0};
    bool found = false;
    for (const auto& cand : vanishing) {
        if (cand[0] == 0 && cand[1] == 0 && cand[2] == 0) continue;
        if (!proportional(cand, tangent)) {
            w = cand;
            found = true;
            break;
        }
    }
    if (!found) throw check_failure("no independent vanishing form at flex"); // cannot happen
    for (int basis = 0; basis < 3; ++basis) {
        std::array<std::array<int64_t, 3>, 3> T = {{w, {0, 0, 0}, tangent}};
        T[1][basis] = 1;
        if (det3(T, p) != 0) return T;
    }
    throw check_failure("could not complete flex frame"); // cannot happen
}

std::optional<WeierstrassCurve> reduce_at_flex(const PlaneCubic& cubic,
                                               const ProjectivePoint& flex) {
    const int64_t p = cubic.p();
    auto T = flex_frame(cubic, flex);
    auto S = inverse3(T, p);
    auto c = substitute_linear(cubic.coeffs(), S, p);
    // expected shape: no y^3, xy^2, x^2y; nonzero y^2z and x^3
    const int64_t cy3 = c[6], cxy2 = c[3], cx2y = c[1];
    if (cy3 != 0 || cxy2 != 0 || cx2y != 0)
        throw check_failure("flex frame did not produce a Weierstrass configuration");
    const int64_t cy2z = c[7], cx3 = c[0];
    if (cy2z == 0 || cx3 == 0)
        throw check_failure("degenerate Weierstrass configuration on a smooth cubic");
    const int64_t inv = mod_inverse(cy2z, p);
    const int64_t b2 = mod_mul(c[4], inv, p); // xyz
    const int64_t b3 = mod_mul(c[8], inv, p); // yz^2
    const int64_t b4 = mod_mul(c[0], inv, p); // x^3
    const int64_t b5 = mod_mul(c[2], inv, p); // x^2z
    const int64_t b6 = mod_mul(c[5], inv, p); // xz^2
    const int64_t b7 = mod_mul(c[9], inv, p); // z^3
    // long Weierstrass y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
    const int64_t a1 = mod_reduce(-b2, p);
    const int64_t a3 = mod_mul(b3, b4, p);
    const int64_t a2 = mod_reduce(-b5, p);
    const int64_t a4 = mod_mul(b4, b6, p);
    const int64_t a6 = mod_reduce(-mod_mul(mod_mul(b4, b4, p), b7, p), p);
    // complete the square and depress the cubic
    const int64_t B2 = mod_add(mod_mul(a1, a1, p), mod_mul(4, a2, p), p);
    const int64_t B4 = mod_add(mod_mul(2, a4, p), mod_mul(a1, a3, p), p);
    const int64_t B6 = mod_add(mod_mul(a3, a3, p), mod_mul(4, a6, p), p);
    const int64_t A =
        mod_sub(mod_mul(B4, mod_inverse(2, p), p),
                mod_mul(mod_mul(B2, B2, p), mod_inverse(48, p), p), p);
    const int64_t B = mod_add(
        mod_sub(mod_mul(mod_mul(B2, mod_mul(B2, B2, p), p), mod_inverse(864, p), p),
                mod_mul(mod_mul(B2, B4, p), mod_inverse(24, p), p), p),
        mod_mul(B6, mod_inverse(4, p), p), p);
    int64_t disc = mod_add(mod_mul(4, mod_mul(A, mod_mul(A, A, p), p), p),
                           mod_mul(27, mod_mul(B, B, p), p), p);
    if (disc == 0)
        throw check_failure("flex reduction produced a singular model from a smooth cubic");
    return WeierstrassCurve(p, A, B);
}

} // namespace

ReductionResult weierstrass_from_cubic(const PlaneCubic& cubic, const ProjectivePoint& point) {
    const int64_t p = cubic.p();
    if (!cubic.contains(point))
        throw validation_error("the supplied point does not lie on the cubic");

    std::optional<ProjectivePoint> flex;
    if (cubic.hessian_at(point) == 0) {
        flex = point;
    } else {
        for_each_projective_point(p, [&](const ProjectivePoint& pt) {
            if (cubic.evaluate(pt.x, pt.y, pt.z) == 0 && cubic.hessian_at(pt) == 0) {
                flex = pt;
                return true;
            }
            return false;
        });
    }

    const int64_t target = cubic_point_count(cubic);
    if (flex) {
        auto curve = reduce_at_flex(cubic, *flex);
        if (curve_group_order(*curve) != target)
            throw check_failure("flex reduction changed the point count");
        return {*curve, same_point(*flex, point, p) ? ReductionRoute::flex_at_point
                                                    : ReductionRoute::flex_elsewhere};
    }

    // no rational flex: exhaustive search for the short model with the same
    // degree-1 zeta datum (the Jacobian exists and has a short model, so the
    // search cannot come up empty)
    auto sq = square_table(p);
    for (int64_t a = 0; a < p; ++a)
        for (int64_t b = 0; b < p; ++b) {
            int64_t disc = mod_add(mod_mul(4, mod_mul(a, mod_mul(a, a, p), p), p),
                                   mod_mul(27, mod_mul(b, b, p), p), p);
            if (disc == 0) continue;
            if (count_points(p, a, b, sq) == target)
                return {WeierstrassCurve(p, a, b), ReductionRoute::count_search};
        }
    throw check_failure("no short Weierstrass model matches the cubic's point count");
}

std::string to_string(ReductionRoute route) {
    switch (route) {
        case ReductionRoute::flex_at_point: return "flex-at-point";
        case ReductionRoute::flex_elsewhere: return "flex-elsewhere";
        case ReductionRoute::count_search: return "count-search";
    }
    return "unknown";
}

} // namespace wc
