#include "wckit/real_curves.hpp"

#include <utility>

#include "wckit/cohomology.hpp"
#include "wckit/errors.hpp"
#include "wckit/modarith.hpp"

namespace wc {

RationalPolynomial::RationalPolynomial(std::vector<Rational> ascending_coeffs)
    : coeffs_(std::move(ascending_coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RationalPolynomial RationalPolynomial::depressed_cubic(const Rational& a, const Rational& b) {
    return RationalPolynomial({b, a, Rational(0), Rational(1)});
}

int RationalPolynomial::degree() const { return static_cast<int>(coeffs_.size()) - 1; }

const Rational& RationalPolynomial::coeff(int k) const {
    static const Rational zero(0);
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[k];
}

const Rational& RationalPolynomial::leading() const {
    if (is_zero()) throw validation_error("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

RationalPolynomial RationalPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return RationalPolynomial({});
    std::vector<Rational> d(coeffs_.size() - 1);
    for (size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<int>(k);
    return RationalPolynomial(std::move(d));
}

RationalPolynomial poly_remainder(const RationalPolynomial& a, const RationalPolynomial& b) {
    if (b.is_zero()) throw validation_error("polynomial division by zero");
    std::vector<Rational> r = a.coeffs();
    const int db = b.degree();
    while (static_cast<int>(r.size()) - 1 >= db) {
        const Rational q = r.back() / b.leading();
        const int shift = static_cast<int>(r.size()) - 1 - db;
        for (int k = 0; k <= db; ++k) r[k + shift] -= q * b.coeff(k);
        r.pop_back();
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
    return RationalPolynomial(std::move(r));
}

RationalPolynomial poly_gcd(const RationalPolynomial& a, const RationalPolynomial& b) {
    RationalPolynomial x = a, y = b;
    while (!y.is_zero()) {
        RationalPolynomial r = poly_remainder(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

static int sign_of(const Rational& q) {
    if (q > 0) return 1;
    if (q < 0) return -1;
    return 0;
}

static int count_variations(const std::vector<int>& signs) {
    int v = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

int sturm_real_roots(const RationalPolynomial& f) {
    if (f.degree() < 1) throw validation_error("Sturm count requires degree >= 1");
    RationalPolynomial fp = f.derivative();
    if (poly_gcd(f, fp).degree() != 0)
        throw validation_error("Sturm count requires a squarefree polynomial");

    std::vector<RationalPolynomial> chain;
    chain.push_back(f);
    chain.push_back(std::move(fp));
    while (chain.back().degree() >= 1) {
        RationalPolynomial r = poly_remainder(chain[chain.size() - 2], chain.back());
        std::vector<Rational> neg = r.coeffs();
        for (auto& c : neg) c = -c;
        chain.emplace_back(std::move(neg));
    }

    std::vector<int> at_pos, at_neg;
    for (const auto& p : chain) {
        if (p.is_zero()) continue; // only possible as the final remainder
        const int lead = sign_of(p.leading());
        at_pos.push_back(lead);
        at_neg.push_back(p.degree() % 2 == 0 ? lead : -lead);
    }
    return count_variations(at_neg) - count_variations(at_pos);
}

RationalCurve::RationalCurve(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_)) {
    if (4 * a * a * a + 27 * b * b == 0)
        throw validation_error("singular curve: 4a^3 + 27b^2 = 0");
}

Rational RationalCurve::discriminant() const {
    return Rational(-16) * (4 * a * a * a + 27 * b * b);
}

TwoTorsion real_two_torsion(const RationalCurve& curve) {
    const int roots = sturm_real_roots(RationalPolynomial::depressed_cubic(curve.a, curve.b));
    if (roots == 3) return TwoTorsion::full;
    if (roots == 1) return TwoTorsion::half;
    throw check_failure("2-division cubic reported " + std::to_string(roots) + " real roots");
}

std::string to_string(TwoTorsion t) {
    return t == TwoTorsion::full ? "full" : "half";
}

int h1_real_size(const RationalCurve& curve) {
    const TwoTorsion torsion = real_two_torsion(curve);
    const bool positive_disc = curve.discriminant() > 0;
    if (positive_disc != (torsion == TwoTorsion::full))
        throw check_failure("discriminant sign disagrees with the real root count");

    FiniteAbelianGroup two_torsion({2, 2});
    GModule mod = torsion == TwoTorsion::full
                      ? GModule::trivial(FiniteGroup::cyclic(2), two_torsion)
                      : GModule::from_generator_images(
                            // conjugation fixes one point of order 2 and swaps the others
                            FiniteGroup::cyclic(2), two_torsion,
                            {{{1, 0}, {0, 1}}, {{0, 1}, {1, 0}}});
    const int64_t h1_two = h1(mod).size;
    const int64_t components = positive_disc ? 2 : 1;
    if (h1_two % components != 0)
        throw check_failure("Kummer size formula does not divide evenly");
    const int64_t size = h1_two / components;
    if (size != 1 && size != 2)
        throw check_failure("|H^1(R, E)| computed outside {1, 2}");
    return static_cast<int>(size);
}

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(boost::multiprecision::cpp_int(text));
        }
        boost::multiprecision::cpp_int num(text.substr(0, slash));
        boost::multiprecision::cpp_int den(text.substr(slash + 1));
        if (den == 0) throw validation_error("rational with zero denominator: " + text);
        return Rational(num, den);
    } catch (const validation_error&) {
        throw;
    } catch (const std::exception&) {
        throw validation_error("cannot parse rational: " + text);
    }
}

} // namespace wc
