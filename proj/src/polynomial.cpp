#include "polar/polynomial.hpp"

#include "polar/errors.hpp"

#include <sstream>
#include <stdexcept>

namespace polar {

Polynomial::Polynomial(std::initializer_list<BigRational> coeffs) : c_(coeffs) { trim(); }

Polynomial::Polynomial(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const BigRational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const BigRational& c, std::size_t power) {
    std::vector<BigRational> v(power + 1);
    v[power] = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::linear_factor(const BigRational& root) { return Polynomial({-root, 1}); }

void Polynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<BigRational> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const BigRational& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

std::string Polynomial::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        const BigRational& c = c_[k];
        if (c.is_zero()) continue;
        const BigRational mag = abs(c);
        if (first) {
            if (c.sign() < 0) os << '-';
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            os << mag;
            continue;
        }
        if (mag != BigRational(1)) os << mag << '*';
        os << 'x';
        if (k > 1) os << '^' << k;
    }
    return os.str();
}

Interval::Interval(BigRational lo_, BigRational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
    if (!(lo < hi)) throw std::invalid_argument("interval requires lo < hi");
}

Polynomial pow(const Polynomial& p, unsigned exponent) {
    Polynomial result = Polynomial::constant(1);
    Polynomial b = p;
    while (exponent != 0) {
        if (exponent & 1U) result *= b;
        exponent >>= 1U;
        if (exponent != 0) b *= b;
    }
    return result;
}

BigRational evaluate(const Polynomial& p, const BigRational& x) {
    BigRational acc(0);
    const auto c = p.coeffs();
    for (std::size_t k = c.size(); k-- > 0;) {
        acc *= x;
        acc += c[k];
    }
    return acc;
}

Polynomial differentiate(const Polynomial& p) {
    const auto c = p.coeffs();
    if (c.size() <= 1) return {};
    std::vector<BigRational> d(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * BigRational(static_cast<long>(i));
    return Polynomial(std::move(d));
}

Polynomial differentiate(const Polynomial& p, unsigned times) {
    Polynomial r = p;
    for (unsigned i = 0; i < times && !r.is_zero(); ++i) r = differentiate(r);
    return r;
}

Polynomial antiderivative_vanishing_at(const Polynomial& p, const BigRational& x0) {
    const auto c = p.coeffs();
    if (c.empty()) return {};
    std::vector<BigRational> a(c.size() + 1);
    for (std::size_t i = 0; i < c.size(); ++i) a[i + 1] = c[i] / BigRational(static_cast<long>(i + 1));
    Polynomial f(std::move(a));
    return f - Polynomial::constant(evaluate(f, x0));
}

BigRational definite_integral(const Polynomial& p, const Interval& iv) {
    const Polynomial f = antiderivative_vanishing_at(p, 0);
    return evaluate(f, iv.hi) - evaluate(f, iv.lo);
}

Polynomial compose(const Polynomial& p, const Polynomial& q) {
    Polynomial acc;
    const auto c = p.coeffs();
    for (std::size_t k = c.size(); k-- > 0;) {
        acc *= q;
        acc += Polynomial::constant(c[k]);
    }
    return acc;
}

std::pair<Polynomial, Polynomial> divide_with_remainder(const Polynomial& p, const Polynomial& d) {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    if (p.degree() < d.degree()) return {Polynomial{}, p};
    std::vector<BigRational> rem(p.coeffs().begin(), p.coeffs().end());
    const auto dc = d.coeffs();
    const std::size_t dd = dc.size() - 1;
    const BigRational lead = dc.back();
    std::vector<BigRational> quot(rem.size() - dd);
    for (std::size_t k = quot.size(); k-- > 0;) {
        const BigRational q = rem[k + dd] / lead;
        quot[k] = q;
        if (q.is_zero()) continue;
        for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= q * dc[j];
    }
    rem.resize(dd);
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial divide_exact(const Polynomial& p, const Polynomial& d) {
    auto [q, r] = divide_with_remainder(p, d);
    if (!r.is_zero()) {
        throw NotDivisible("(" + p.str() + ") is not divisible by (" + d.str() + "); remainder " + r.str());
    }
    return q;
}

Polynomial monic(const Polynomial& p) {
    if (p.is_zero()) return p;
    return p * (BigRational(1) / p.leading());
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial u = a;
    Polynomial v = b;
    while (!v.is_zero()) {
        Polynomial r = divide_with_remainder(u, v).second;
        u = std::move(v);
        v = primitive_part(r);
    }
    return monic(u);
}

Polynomial primitive_part(const Polynomial& p) {
    if (p.is_zero()) return p;
    BigInteger den(1);
    for (const auto& c : p.coeffs()) den = lcm(den, c.denominator());
    BigInteger content(0);
    for (const auto& c : p.coeffs()) content = gcd(content, (c * BigRational(den)).numerator());
    BigRational scale = BigRational(den) / BigRational(content);
    if (p.leading().sign() < 0) scale = -scale;
    return p * scale;
}

Polynomial square_free_part(const Polynomial& p) {
    if (p.degree() <= 0) return monic(p);
    return monic(divide_exact(p, gcd(p, differentiate(p))));
}

std::vector<Polynomial> square_free_decomposition(const Polynomial& p) {
    if (p.is_zero()) throw std::domain_error("square-free decomposition of zero");
    std::vector<Polynomial> out;
    if (p.degree() == 0) return out;
    const Polynomial f = monic(p);
    const Polynomial fp = differentiate(f);
    Polynomial a = gcd(f, fp);
    Polynomial b = divide_exact(f, a);
    Polynomial c = divide_exact(fp, a);
    Polynomial d = c - differentiate(b);
    while (b.degree() > 0) {
        Polynomial g = gcd(b, d);
        out.push_back(g);
        b = divide_exact(b, g);
        c = divide_exact(d, g);
        d = c - differentiate(b);
    }
    while (!out.empty() && out.back().degree() == 0) out.pop_back();
    return out;
}

bool is_even(const Polynomial& p) {
    const auto c = p.coeffs();
    for (std::size_t i = 1; i < c.size(); i += 2) {
        if (!c[i].is_zero()) return false;
    }
    return true;
}

bool is_odd(const Polynomial& p) {
    const auto c = p.coeffs();
    for (std::size_t i = 0; i < c.size(); i += 2) {
        if (!c[i].is_zero()) return false;
    }
    return true;
}

}  // namespace polar
