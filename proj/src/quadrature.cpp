#include "polar/quadrature.hpp"

#include "polar/errors.hpp"
#include "polar/families.hpp"

#include <boost/math/constants/constants.hpp>

#include <sstream>

namespace polar {
namespace {

// L_n(x) and L_n'(x) by the three-term recurrence.
std::pair<Real, Real> legendre_with_derivative(int n, const Real& x) {
    Real prev = 1;
    Real cur = x;
    if (n == 0) return {Real(1), Real(0)};
    for (int k = 1; k < n; ++k) {
        Real next = ((2 * k + 1) * x * cur - k * prev) / (k + 1);
        prev = cur;
        cur = next;
    }
    const Real deriv = n * (x * cur - prev) / (x * x - 1);
    return {cur, deriv};
}

Real polish_root(int n, Real lo, Real hi) {
    Real x = (lo + hi) / 2;
    const Real tiny = Real("1e-49");
    for (int iter = 0; iter < 200; ++iter) {
        auto [f, df] = legendre_with_derivative(n, x);
        if (f == 0) return x;
        // Keep the bracket: L_n changes sign once inside (lo, hi].
        const Real flo = legendre_with_derivative(n, lo).first;
        if ((f < 0) == (flo < 0)) {
            lo = x;
        } else {
            hi = x;
        }
        Real step = f / df;
        Real candidate = x - step;
        if (!(candidate > lo && candidate <= hi)) {
            candidate = (lo + hi) / 2;
            step = x - candidate;
        }
        x = candidate;
        if (abs(step) < tiny * (1 + abs(x)) || hi - lo < tiny) break;
    }
    return x;
}

void build_gauss(int order, std::vector<Real>& nodes, std::vector<Real>& weights) {
    nodes.clear();
    weights.clear();
    const Polynomial l = legendre(order);
    const auto brackets = isolate_roots(l, Interval(-1, 1), BigRational(1, 1 << 12));
    for (const auto& iv : brackets) {
        const Real x = polish_root(order, to_real(iv.lo), to_real(iv.hi));
        const Real d = legendre_with_derivative(order, x).second;
        nodes.push_back(x);
        weights.push_back(2 / ((1 - x * x) * d * d));
    }
}

void build_tanh_sinh(int level, std::vector<Real>& nodes, std::vector<Real>& weights) {
    nodes.clear();
    weights.clear();
    const Real half_pi = boost::math::constants::half_pi<Real>();
    const Real h = ldexp(Real(1), -level);
    const Real min_gap = Real("1e-35");
    std::vector<Real> pos_nodes;
    std::vector<Real> pos_weights;
    for (long k = 1;; ++k) {
        const Real t = h * k;
        const Real u = half_pi * sinh(t);
        const Real gap = 2 / (exp(2 * u) + 1);  // 1 - tanh(u)
        if (gap < min_gap) break;
        const Real c = cosh(u);
        pos_nodes.push_back(1 - gap);
        pos_weights.push_back(h * half_pi * cosh(t) / (c * c));
    }
    for (std::size_t i = pos_nodes.size(); i-- > 0;) {
        nodes.push_back(-pos_nodes[i]);
        weights.push_back(pos_weights[i]);
    }
    nodes.push_back(0);
    weights.push_back(h * half_pi);
    for (std::size_t i = 0; i < pos_nodes.size(); ++i) {
        nodes.push_back(pos_nodes[i]);
        weights.push_back(pos_weights[i]);
    }
}

std::string node_text(const Real& x) {
    std::ostringstream os;
    os.precision(20);
    os << x;
    return os.str();
}

}  // namespace

Real to_real(const BigRational& q) { return Real(q.numerator().str()) / Real(q.denominator().str()); }

Real evaluate_real(const Polynomial& p, const Real& x) {
    Real acc = 0;
    const auto c = p.coeffs();
    for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + to_real(c[k]);
    return acc;
}

QuadratureRule gauss_legendre_rule(int order) {
    if (order < 1) throw DomainError("Gauss-Legendre order must be >= 1");
    QuadratureRule rule{RuleKind::GaussLegendre, order, {}, {}, {}, {}};
    build_gauss(order, rule.nodes, rule.weights);
    if (order > 1) {
        build_gauss(order - 1, rule.companion_nodes, rule.companion_weights);
    } else {
        // Order 0 has no nodes; the midpoint rule is the same as order 1.
        rule.companion_nodes = rule.nodes;
        rule.companion_weights = rule.weights;
    }
    return rule;
}

QuadratureRule tanh_sinh_rule(int level) {
    if (level < 1) throw DomainError("tanh-sinh level must be >= 1");
    QuadratureRule rule{RuleKind::TanhSinh, level, {}, {}, {}, {}};
    build_tanh_sinh(level, rule.nodes, rule.weights);
    build_tanh_sinh(level - 1, rule.companion_nodes, rule.companion_weights);
    return rule;
}

QuadratureResult integrate(const Integrand& fn, const QuadratureRule& rule) {
    auto results = integrate_many([&](const Real& x, std::vector<Real>& out) { out[0] = fn(x); }, 1, rule);
    return results.front();
}

std::vector<QuadratureResult> integrate_many(const std::function<void(const Real&, std::vector<Real>&)>& fn,
                                             std::size_t width, const QuadratureRule& rule) {
    auto sum = [&](const std::vector<Real>& nodes, const std::vector<Real>& weights) {
        std::vector<Real> acc(width, Real(0));
        std::vector<Real> vals(width);
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            fn(nodes[i], vals);
            for (std::size_t c = 0; c < width; ++c) {
                if (!boost::multiprecision::isfinite(vals[c])) {
                    throw QuadratureError("integrand is not finite at node " + node_text(nodes[i]),
                                          static_cast<double>(acc[c]));
                }
                acc[c] += weights[i] * vals[c];
            }
        }
        return acc;
    };
    const auto fine = sum(rule.nodes, rule.weights);
    const auto coarse = sum(rule.companion_nodes, rule.companion_weights);
    std::vector<QuadratureResult> out;
    out.reserve(width);
    for (std::size_t c = 0; c < width; ++c) out.push_back({fine[c], abs(fine[c] - coarse[c])});
    return out;
}

}  // namespace polar
