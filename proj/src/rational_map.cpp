#include "polar/rational_map.hpp"

#include <stdexcept>

namespace polar {

RationalFunction::RationalFunction(Polynomial n, Polynomial d) {
    if (d.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (n.is_zero()) {
        num = n;
        den = Polynomial::constant(1);
        return;
    }
    const Polynomial g = gcd(n, d);
    num = divide_exact(n, g);
    den = divide_exact(d, g);
    const BigRational lead = den.leading();
    num *= BigRational(1) / lead;
    den *= BigRational(1) / lead;
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num * b.num, a.den * b.den);
}

RationalFunction derivative(const RationalFunction& f) {
    return RationalFunction(differentiate(f.num) * f.den - f.num * differentiate(f.den), f.den * f.den);
}

RationalMap::RationalMap(Polynomial num, Polynomial den, Interval domain)
    : f_(std::move(num), std::move(den)), domain_(std::move(domain)) {
    if (evaluate(f_.den, domain_.lo).is_zero() || sturm_root_count(f_.den, domain_) != 0) {
        throw std::domain_error("map denominator " + f_.den.str() + " vanishes on the domain");
    }
}

RationalMap RationalMap::mobius(const BigRational& a, const BigRational& b, const BigRational& c,
                                const BigRational& d, Interval domain) {
    if ((a * d - b * c).is_zero()) throw std::domain_error("degenerate Mobius map: ad - bc = 0");
    return RationalMap(Polynomial({b, a}), Polynomial({d, c}), std::move(domain));
}

RationalMap RationalMap::identity(Interval domain) {
    return RationalMap(Polynomial::x(), Polynomial::constant(1), std::move(domain));
}

RationalMap RationalMap::cubic() {
    return RationalMap(Polynomial::monomial(4, 3), pow(Polynomial({1, 0, 1}), 2), Interval(-1, 1));
}

Polynomial cleared_composition(const Polynomial& p, const RationalMap& f) {
    if (p.is_zero()) return p;
    const auto n = static_cast<unsigned>(p.degree());
    Polynomial out;
    for (unsigned k = 0; k <= n; ++k) {
        out += pow(f.numerator(), k) * pow(f.denominator(), n - k) * p.coeff(k);
    }
    return out;
}

}  // namespace polar
