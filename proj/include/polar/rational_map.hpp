#ifndef POLAR_RATIONAL_MAP_HPP
#define POLAR_RATIONAL_MAP_HPP

#include "polar/polynomial.hpp"

#include <optional>
#include <string>

namespace polar {

/// num / den with gcd(num, den) = 1 and a monic denominator.
struct RationalFunction {
    Polynomial num;
    Polynomial den;

    RationalFunction(Polynomial n, Polynomial d);

    BigRational operator()(const BigRational& x) const { return evaluate(num, x) / evaluate(den, x); }
    /// Equality as functions, by cross-multiplication.
    bool same_function(const RationalFunction& other) const { return num * other.den == other.num * den; }
    std::string str() const { return "(" + num.str() + ") / (" + den.str() + ")"; }
};

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
/// Quotient rule.
RationalFunction derivative(const RationalFunction& f);

/// A rational change of variable on a closed domain. The denominator has no
/// root in [lo, hi]; this is checked on construction.
class RationalMap {
public:
    RationalMap(Polynomial num, Polynomial den, Interval domain);

    /// (a x + b) / (c x + d)
    static RationalMap mobius(const BigRational& a, const BigRational& b, const BigRational& c,
                              const BigRational& d, Interval domain);
    static RationalMap identity(Interval domain);
    /// 4x^3 / (x^2 + 1)^2 on [-1, 1]
    static RationalMap cubic();

    const RationalFunction& function() const { return f_; }
    const Polynomial& numerator() const { return f_.num; }
    const Polynomial& denominator() const { return f_.den; }
    const Interval& domain() const { return domain_; }
    BigRational operator()(const BigRational& x) const { return f_(x); }

private:
    RationalFunction f_;
    Interval domain_;
};

/// sum_k p_k N^k D^(deg p - k): p(N/D) with denominators cleared.
Polynomial cleared_composition(const Polynomial& p, const RationalMap& f);

}  // namespace polar

#endif  // POLAR_RATIONAL_MAP_HPP
