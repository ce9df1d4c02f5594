#include "polar/numeric.hpp"

#include "polar/errors.hpp"

#include <string>

namespace polar {

BigInteger BigInteger::parse(std::string_view text) {
    mpz_class v;
    if (text.empty() || v.set_str(std::string(text), 10) != 0) {
        throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    }
    return BigInteger(v);
}

BigInteger gcd(const BigInteger& a, const BigInteger& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
    return BigInteger(g);
}

BigInteger lcm(const BigInteger& a, const BigInteger& b) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
    return BigInteger(l);
}

BigInteger abs(const BigInteger& a) { return a.sign() < 0 ? -a : a; }

BigInteger exact_quotient(const BigInteger& a, const BigInteger& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    return BigInteger(mpz_class(a.raw() / b.raw()));
}

BigRational::BigRational(const BigInteger& num, const BigInteger& den) {
    if (den.is_zero()) throw std::domain_error("zero denominator");
    v_ = mpq_class(num.raw(), den.raw());
    v_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return BigRational(BigInteger::parse(text));
    return BigRational(BigInteger::parse(text.substr(0, slash)), BigInteger::parse(text.substr(slash + 1)));
}

BigRational& BigRational::operator/=(const BigRational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    v_ /= o.v_;
    return *this;
}

BigRational abs(const BigRational& a) { return a.sign() < 0 ? -a : a; }

BigRational pow(const BigRational& base, unsigned exponent) {
    BigRational result(1);
    BigRational b = base;
    while (exponent != 0) {
        if (exponent & 1U) result *= b;
        exponent >>= 1U;
        if (exponent != 0) b *= b;
    }
    return result;
}

BigInteger factorial(long n) {
    if (n < 0) throw DomainError("factorial of negative integer " + std::to_string(n));
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return BigInteger(f);
}

BigInteger double_factorial(long k) {
    if (k < -1) throw DomainError("double factorial undefined for " + std::to_string(k));
    BigInteger result(1);
    for (long j = k; j > 1; j -= 2) result *= BigInteger(j);
    return result;
}

BigInteger binomial(long n, long k) {
    if (n < 0) throw DomainError("binomial with negative n");
    if (k < 0 || k > n) return BigInteger(0);
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return BigInteger(c);
}

}  // namespace polar
