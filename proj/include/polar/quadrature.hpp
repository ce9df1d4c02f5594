#ifndef POLAR_QUADRATURE_HPP
#define POLAR_QUADRATURE_HPP

#include "polar/polynomial.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <functional>
#include <vector>

namespace polar {

/// Working precision for quadrature: 50 significant decimal digits.
using Real = boost::multiprecision::cpp_bin_float_50;

Real to_real(const BigRational& q);
Real evaluate_real(const Polynomial& p, const Real& x);

enum class RuleKind { GaussLegendre, TanhSinh };

/// Nodes in (-1, 1), strictly increasing, with positive weights. The companion
/// rule is a coarser rule used only for the error estimate: Gauss order m - 1,
/// or the tanh-sinh rule one level down.
struct QuadratureRule {
    RuleKind kind;
    int order_or_level;
    std::vector<Real> nodes;
    std::vector<Real> weights;
    std::vector<Real> companion_nodes;
    std::vector<Real> companion_weights;
};

/// Nodes are the roots of L_order: isolated by Sturm bisection in exact
/// arithmetic, then polished by bracketed Newton. w_i = 2 / ((1 - x_i^2) L'(x_i)^2).
QuadratureRule gauss_legendre_rule(int order);

/// Double-exponential rule with step 2^-level, x = tanh(pi/2 sinh t). Nodes
/// closer than 1e-35 to an endpoint are dropped.
QuadratureRule tanh_sinh_rule(int level);

struct QuadratureResult {
    Real value;
    Real error_estimate;
};

using Integrand = std::function<Real(const Real&)>;

/// Weighted sum over the rule; the error estimate is the difference from the
/// companion rule. Throws QuadratureError naming the node if fn is not finite there.
QuadratureResult integrate(const Integrand& fn, const QuadratureRule& rule);

/// Vector-valued variant: fn fills `out` (fixed length `width`) at one node.
/// Each component gets its own value and estimate.
std::vector<QuadratureResult> integrate_many(const std::function<void(const Real&, std::vector<Real>&)>& fn,
                                             std::size_t width, const QuadratureRule& rule);

}  // namespace polar

#endif  // POLAR_QUADRATURE_HPP
