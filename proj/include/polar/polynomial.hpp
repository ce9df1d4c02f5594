#ifndef POLAR_POLYNOMIAL_HPP
#define POLAR_POLYNOMIAL_HPP

#include "polar/numeric.hpp"

#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace polar {

/// Dense univariate polynomial over the rationals; coefficient i multiplies x^i.
/// The zero polynomial has no coefficients and degree -1.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<BigRational> coeffs);
    explicit Polynomial(std::vector<BigRational> coeffs);

    static Polynomial constant(const BigRational& c);
    static Polynomial monomial(const BigRational& c, std::size_t power);
    static Polynomial x() { return monomial(1, 1); }
    /// (x - root)
    static Polynomial linear_factor(const BigRational& root);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    /// Coefficient of x^i, zero beyond the degree.
    BigRational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigRational(0); }
    std::span<const BigRational> coeffs() const { return c_; }
    BigRational leading() const { return c_.empty() ? BigRational(0) : c_.back(); }

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const BigRational& s);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const BigRational& s) { return a *= s; }
    friend Polynomial operator*(const BigRational& s, Polynomial a) { return a *= s; }
    friend Polynomial operator-(const Polynomial& a) { return a * BigRational(-1); }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Human-readable form, highest power first, e.g. "3/2*x^2 + 3/2*x".
    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

private:
    void trim();
    std::vector<BigRational> c_;
};

/// Half-open interval (lo, hi] with lo < hi.
struct Interval {
    BigRational lo;
    BigRational hi;

    Interval(BigRational lo_, BigRational hi_);
    BigRational width() const { return hi - lo; }
    bool contains(const BigRational& x) const { return lo < x && x <= hi; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

Polynomial pow(const Polynomial& p, unsigned exponent);

BigRational evaluate(const Polynomial& p, const BigRational& x);
Polynomial differentiate(const Polynomial& p);
Polynomial differentiate(const Polynomial& p, unsigned times);
/// F with F' = p and F(x0) = 0.
Polynomial antiderivative_vanishing_at(const Polynomial& p, const BigRational& x0);
BigRational definite_integral(const Polynomial& p, const Interval& iv);
/// p(q(x))
Polynomial compose(const Polynomial& p, const Polynomial& q);

/// Quotient and remainder; throws std::domain_error for d == 0.
std::pair<Polynomial, Polynomial> divide_with_remainder(const Polynomial& p, const Polynomial& d);
/// q with p = q*d; throws NotDivisible when the remainder is nonzero.
Polynomial divide_exact(const Polynomial& p, const Polynomial& d);
/// Monic gcd (zero if both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);
Polynomial monic(const Polynomial& p);
/// Positive rational multiple with coprime integer coefficients and positive leading coefficient.
Polynomial primitive_part(const Polynomial& p);
/// p / gcd(p, p'), monic.
Polynomial square_free_part(const Polynomial& p);
/// Yun decomposition: result[i] collects the factors of multiplicity i + 1 (monic).
std::vector<Polynomial> square_free_decomposition(const Polynomial& p);

bool is_even(const Polynomial& p);
bool is_odd(const Polynomial& p);

/// Exact number of distinct real roots in (iv.lo, iv.hi]. The square-free part
/// is taken first, so repeated roots count once. Throws std::domain_error for p == 0.
std::size_t sturm_root_count(const Polynomial& p, const Interval& iv);

/// Disjoint half-open intervals (lo, hi], one per distinct root of p in iv,
/// each no wider than `width`, in increasing order.
std::vector<Interval> isolate_roots(const Polynomial& p, const Interval& iv, const BigRational& width);

}  // namespace polar

#endif  // POLAR_POLYNOMIAL_HPP
