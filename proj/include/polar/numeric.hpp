#ifndef POLAR_NUMERIC_HPP
#define POLAR_NUMERIC_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace polar {

/// Arbitrary-precision signed integer. Value type, canonical by construction.
class BigInteger {
public:
    BigInteger() = default;
    BigInteger(long v) : v_(v) {}  // NOLINT: implicit from small integers is intended
    BigInteger(int v) : v_(v) {}   // NOLINT
    explicit BigInteger(const mpz_class& v) : v_(v) {}
    static BigInteger parse(std::string_view text);

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    std::string str() const { return v_.get_str(); }
    const mpz_class& raw() const { return v_; }

    BigInteger& operator+=(const BigInteger& o) { v_ += o.v_; return *this; }
    BigInteger& operator-=(const BigInteger& o) { v_ -= o.v_; return *this; }
    BigInteger& operator*=(const BigInteger& o) { v_ *= o.v_; return *this; }

    friend BigInteger operator+(BigInteger a, const BigInteger& b) { return a += b; }
    friend BigInteger operator-(BigInteger a, const BigInteger& b) { return a -= b; }
    friend BigInteger operator*(BigInteger a, const BigInteger& b) { return a *= b; }
    friend BigInteger operator-(const BigInteger& a) { return BigInteger(mpz_class(-a.v_)); }

    friend bool operator==(const BigInteger& a, const BigInteger& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const BigInteger& a, const BigInteger& b) {
        return cmp(a.v_, b.v_) <=> 0;
    }
    friend std::ostream& operator<<(std::ostream& os, const BigInteger& a) { return os << a.str(); }

private:
    mpz_class v_;
};

BigInteger gcd(const BigInteger& a, const BigInteger& b);
BigInteger lcm(const BigInteger& a, const BigInteger& b);
BigInteger abs(const BigInteger& a);
// Truncating quotient; caller guarantees exactness where it matters.
BigInteger exact_quotient(const BigInteger& a, const BigInteger& b);

/// Exact rational, always reduced with a positive denominator, so equality is
/// structural.
class BigRational {
public:
    BigRational() = default;
    BigRational(long v) : v_(v) {}  // NOLINT
    BigRational(int v) : v_(v) {}   // NOLINT
    BigRational(const BigInteger& n) : v_(n.raw()) {}  // NOLINT
    BigRational(const BigInteger& num, const BigInteger& den);
    BigRational(long num, long den) : BigRational(BigInteger(num), BigInteger(den)) {}
    explicit BigRational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    /// Accepts "p", "-p", "p/q".
    static BigRational parse(std::string_view text);

    BigInteger numerator() const { return BigInteger(v_.get_num()); }
    BigInteger denominator() const { return BigInteger(v_.get_den()); }
    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    /// "p/q", or "p" when the denominator is 1.
    std::string str() const { return v_.get_str(); }
    double to_double() const { return v_.get_d(); }
    const mpq_class& raw() const { return v_; }

    BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
    BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
    BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }
    BigRational& operator/=(const BigRational& o);

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
    friend BigRational operator-(const BigRational& a) { return BigRational(mpq_class(-a.v_)); }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
        return cmp(a.v_, b.v_) <=> 0;
    }
    friend std::ostream& operator<<(std::ostream& os, const BigRational& a) { return os << a.str(); }

private:
    mpq_class v_;
};

BigRational abs(const BigRational& a);
BigRational pow(const BigRational& base, unsigned exponent);

BigInteger factorial(long n);
/// k!! with 0!! = (-1)!! = 1. Throws DomainError for k < -1.
BigInteger double_factorial(long k);
/// C(n, k); zero outside 0 <= k <= n.
BigInteger binomial(long n, long k);

}  // namespace polar

#endif  // POLAR_NUMERIC_HPP
