#include "polar/composed.hpp"

#include "polar/errors.hpp"
#include "polar/families.hpp"

#include <string>

namespace polar {
namespace {

std::vector<Real> to_real_coeffs(const Polynomial& p) {
    std::vector<Real> out;
    for (const auto& c : p.coeffs()) out.push_back(to_real(c));
    return out;
}

Real horner(const std::vector<Real>& c, const Real& x) {
    Real acc = 0;
    for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
    return acc;
}

// Product of the square-free factors of odd multiplicity.
Polynomial odd_multiplicity_part(const Polynomial& g) {
    const auto factors = square_free_decomposition(g);
    Polynomial out = Polynomial::constant(1);
    for (std::size_t i = 0; i < factors.size(); i += 2) out *= factors[i];
    return out;
}

}  // namespace

BijectionCertificate certify_monotone_bijection(const RationalMap& f, const Interval& target) {
    BijectionCertificate cert;
    const Interval& dom = f.domain();
    cert.value_at_lo = f(dom.lo);
    cert.value_at_hi = f(dom.hi);
    cert.endpoints_ok = cert.value_at_lo == target.lo && cert.value_at_hi == target.hi;

    // sign(f') = sign(N'D - ND') since D^2 > 0 on the domain.
    const Polynomial g = differentiate(f.numerator()) * f.denominator() - f.numerator() * differentiate(f.denominator());
    if (g.is_zero()) return cert;

    const Polynomial odd = odd_multiplicity_part(g);
    std::size_t inner = odd.degree() > 0 ? sturm_root_count(odd, dom) : 0;
    if (inner != 0 && evaluate(odd, dom.hi).is_zero()) --inner;

    if (inner != 0) {
        const auto isolated = isolate_roots(odd, dom, dom.width() / BigRational(1024));
        cert.sign_change = isolated.front();
        for (const auto& iv : isolated) {
            for (const BigRational& pt : {iv.lo, iv.hi, (iv.lo + iv.hi) / BigRational(2)}) {
                if (pt > dom.lo && pt < dom.hi && evaluate(g, pt).sign() < 0) {
                    cert.counterexample = pt;
                    return cert;
                }
            }
        }
        return cert;
    }
    // No odd-multiplicity root inside: one nonzero sample decides the sign.
    for (int j = 1; j < 64; ++j) {
        const BigRational pt = dom.lo + dom.width() * BigRational(j, 64);
        const int s = evaluate(g, pt).sign();
        if (s == 0) continue;
        cert.monotone = s > 0;
        if (s < 0) cert.counterexample = pt;
        break;
    }
    return cert;
}

std::string_view to_string(Orientation o) {
    return o == Orientation::AsOrthogonality ? "as-orthogonality" : "as-printed";
}

Orientation parse_orientation(std::string_view name) {
    if (name == "as-orthogonality") return Orientation::AsOrthogonality;
    if (name == "as-printed") return Orientation::AsPrinted;
    throw std::invalid_argument("unknown orientation '" + std::string(name) + "'");
}

PushforwardWeight pushforward_weight(const RationalMap& f, Orientation orientation) {
    const auto cert = certify_monotone_bijection(f, Interval(-1, 1));
    if (!cert.ok()) {
        throw std::domain_error("map " + f.function().str() + " is not a certified increasing bijection onto [-1, 1]");
    }
    const Polynomial& n = f.numerator();
    const Polynomial& d = f.denominator();
    // (1 - f)/(1 + f) = (D - N)/(D + N)
    const RationalFunction ratio = orientation == Orientation::AsOrthogonality ? RationalFunction(d - n, d + n)
                                                                               : RationalFunction(d + n, d - n);
    return PushforwardWeight{f, orientation, derivative(f.function()) * ratio};
}

Real ComposedGram::max_error_estimate() const {
    Real m = 0;
    for (const auto& row : error_estimates) {
        for (const auto& e : row) m = std::max(m, e);
    }
    return m;
}

ComposedGram composed_gram_estimate(const RationalMap& f, Orientation orientation, int max_n,
                                    const QuadratureRule& rule) {
    if (max_n < 1) throw DomainError("composed_gram needs max_n >= 1");
    const PushforwardWeight phi = pushforward_weight(f, orientation);
    const auto fn = to_real_coeffs(f.numerator());
    const auto fd = to_real_coeffs(f.denominator());
    const auto wn = to_real_coeffs(phi.weight.num);
    const auto wd = to_real_coeffs(phi.weight.den);
    std::vector<std::vector<Real>> family_coeffs;
    for (int n = 1; n <= max_n; ++n) family_coeffs.push_back(to_real_coeffs(polar(n)));

    // Rule domain is (-1, 1); map it affinely onto the map's domain.
    const Real lo = to_real(f.domain().lo);
    const Real hi = to_real(f.domain().hi);
    const Real half = (hi - lo) / 2;
    const Real mid = (hi + lo) / 2;

    const auto m = static_cast<std::size_t>(max_n);
    const std::size_t width = m * (m + 1) / 2;
    std::vector<Real> vals(m);
    const auto results = integrate_many(
        [&](const Real& s, std::vector<Real>& out) {
            const Real x = mid + half * s;
            const Real t = horner(fn, x) / horner(fd, x);
            const Real w = half * horner(wn, x) / horner(wd, x);
            for (std::size_t i = 0; i < m; ++i) vals[i] = horner(family_coeffs[i], t);
            std::size_t e = 0;
            for (std::size_t i = 0; i < m; ++i) {
                for (std::size_t j = i; j < m; ++j) out[e++] = vals[i] * vals[j] * w;
            }
        },
        width, rule);

    ComposedGram g;
    g.values.assign(m, std::vector<Real>(m));
    g.error_estimates.assign(m, std::vector<Real>(m));
    std::size_t e = 0;
    for (std::size_t i = 0; i < m; ++i) {
        g.indices.push_back(static_cast<int>(i) + 1);
        for (std::size_t j = i; j < m; ++j, ++e) {
            g.values[i][j] = g.values[j][i] = results[e].value;
            g.error_estimates[i][j] = g.error_estimates[j][i] = results[e].error_estimate;
        }
    }
    return g;
}

ComposedGram composed_gram(const RationalMap& f, Orientation orientation, int max_n, const QuadratureRule& rule,
                           double tolerance) {
    ComposedGram g = composed_gram_estimate(f, orientation, max_n, rule);
    const Real worst = g.max_error_estimate();
    if (worst > tolerance) {
        throw QuadratureError("composed Gram did not converge: error estimate " + worst.str(6) + " exceeds " +
                                  Real(tolerance).str(3),
                              static_cast<double>(worst));
    }
    return g;
}

}  // namespace polar
