#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace wc {

using Rational = boost::multiprecision::cpp_rational;

/// Polynomial with exact rational coefficients, stored low degree first.
/// The zero polynomial is represented by an empty coefficient vector.
class RationalPolynomial {
public:
    explicit RationalPolynomial(std::vector<Rational> ascending_coeffs);

    static RationalPolynomial depressed_cubic(const Rational& a, const Rational& b);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const; // -1 for the zero polynomial
    const Rational& coeff(int k) const;
    const Rational& leading() const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    RationalPolynomial derivative() const;

private:
    std::vector<Rational> coeffs_;
};

RationalPolynomial poly_remainder(const RationalPolynomial& a, const RationalPolynomial& b);
RationalPolynomial poly_gcd(const RationalPolynomial& a, const RationalPolynomial& b);

/// Exact count of distinct real roots via Sturm sign variations at -inf and
/// +inf. Requires degree >= 1 and a squarefree input (gcd(f, f') constant).
int sturm_real_roots(const RationalPolynomial& f);

/// y^2 = x^3 + a x + b over Q, viewed inside R. Nonsingular: the
/// discriminant -16(4a^3 + 27b^2) must not vanish.
struct RationalCurve {
    Rational a;
    Rational b;

    RationalCurve(Rational a, Rational b);
    Rational discriminant() const;
};

/// Structure of the real 2-torsion: full = (Z/2)^2 (three real roots of the
/// 2-division cubic), half = Z/2 (one real root).
enum class TwoTorsion { full, half };
TwoTorsion real_two_torsion(const RationalCurve& curve);
std::string to_string(TwoTorsion t);

/// |H^1(R, E)| in {1, 2}, from the Kummer sequence for multiplication by 2:
/// |H^1(R, E[2])| / |E(R)/2E(R)|. The H^1(R, E[2]) factor is computed by the
/// cohomology module on the Gal(C/R)-module E[2] (trivial action when the
/// 2-torsion is fully real, coordinate swap otherwise); the component factor
/// is 2 when the discriminant is positive (two real components) and 1 when
/// negative. The full case committing to the exact value 2, not just the
/// bound <= 2, uses E(R)/2E(R) = Z/2: the circle component is 2-divisible.
int h1_real_size(const RationalCurve& curve);

Rational parse_rational(const std::string& text); // "num/den" or plain integer

} // namespace wc
