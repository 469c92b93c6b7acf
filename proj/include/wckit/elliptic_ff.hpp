#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wc {

bool is_prime(int64_t n);

/// y^2 = x^3 + a x + b over F_p, p > 3 prime, nonsingular.
struct WeierstrassCurve {
    int64_t p;
    int64_t a;
    int64_t b;

    WeierstrassCurve(int64_t p, int64_t a, int64_t b);
    int64_t discriminant() const; // -16(4a^3 + 27b^2) mod p
    int64_t j_invariant() const;  // 1728 * 4a^3 / (4a^3 + 27b^2) mod p
    bool operator==(const WeierstrassCurve& o) const = default;
};

/// #E(F_p): direct count of affine solutions plus the point at infinity,
/// using a quadratic-residue table. The Hasse bound is asserted on the way
/// out.
int64_t curve_group_order(const WeierstrassCurve& curve);

/// |Aut(E)| in {2, 4, 6}: the number of u in F_p^x with u^4 = 1 when
/// j = 1728, with u^6 = 1 when j = 0, and 2 otherwise.
int aut_group_order(const WeierstrassCurve& curve);

struct ProjectivePoint {
    int64_t x;
    int64_t y;
    int64_t z;
};

/// Ternary cubic over F_p with coefficients in the lexicographic monomial
/// order x^3, x^2y, x^2z, xy^2, xyz, xz^2, y^3, y^2z, yz^2, z^3. Smoothness
/// is a construction invariant, verified by locating singular points over
/// F_p, F_p^2 and F_p^3 (a singular point of a cubic has degree at most 3);
/// the extensions are realized as quotient rings by found irreducible
/// polynomials.
class PlaneCubic {
public:
    PlaneCubic(int64_t p, const std::array<int64_t, 10>& coeffs);

    int64_t p() const { return p_; }
    const std::array<int64_t, 10>& coeffs() const { return coeffs_; }

    int64_t evaluate(int64_t x, int64_t y, int64_t z) const;
    bool contains(const ProjectivePoint& pt) const;
    /// Hessian determinant at a point; zero exactly at inflection points.
    int64_t hessian_at(const ProjectivePoint& pt) const;

private:
    int64_t p_;
    std::array<int64_t, 10> coeffs_;
};

/// Scale so the first nonzero coordinate is 1.
ProjectivePoint normalize(const ProjectivePoint& pt, int64_t p);
bool same_point(const ProjectivePoint& a, const ProjectivePoint& b, int64_t p);

/// #C(F_p) by projective enumeration.
int64_t cubic_point_count(const PlaneCubic& cubic);

/// Some rational point, by enumeration of the projective plane; never absent
/// for a smooth cubic with p >= 5 (Hasse: #C >= p + 1 - 2*sqrt(p) > 0).
std::optional<ProjectivePoint> cubic_rational_point(const PlaneCubic& cubic);

enum class ReductionRoute { flex_at_point, flex_elsewhere, count_search };

struct ReductionResult {
    WeierstrassCurve curve;
    ReductionRoute route;
};

/// Short Weierstrass model of the pointed genus-1 curve (C, P): when a
/// rational flex exists (P itself preferred), the exact coordinate change
/// moving the flex to (0:1:0) with tangent z = 0 followed by completing the
/// square and depressing the cubic; otherwise an exhaustive search for the
/// short model matching the point count #C(F_p). Point counts are preserved
/// either way, and verified.
ReductionResult weierstrass_from_cubic(const PlaneCubic& cubic, const ProjectivePoint& point);

std::string to_string(ReductionRoute route);

} // namespace wc
