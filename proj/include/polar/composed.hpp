#ifndef POLAR_COMPOSED_HPP
#define POLAR_COMPOSED_HPP

#include "polar/quadrature.hpp"
#include "polar/rational_map.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace polar {

struct BijectionCertificate {
    BigRational value_at_lo;
    BigRational value_at_hi;
    bool endpoints_ok = false;
    /// f' >= 0 on the open domain (zeros of even multiplicity allowed).
    bool monotone = false;
    /// Isolating interval of a sign change of f', when one exists.
    std::optional<Interval> sign_change;
    /// A rational point of the domain where f' < 0.
    std::optional<BigRational> counterexample;

    bool ok() const { return endpoints_ok && monotone; }
};

/// Checks f(lo) = target.lo, f(hi) = target.hi exactly and that the numerator
/// of f' has no root of odd multiplicity in (lo, hi) and is positive elsewhere.
BijectionCertificate certify_monotone_bijection(const RationalMap& f, const Interval& target);

/// AsOrthogonality: phi = f' (1 - f) / (1 + f), the weight the substitution
/// t = f(x) maps onto (1 - t)/(1 + t). AsPrinted: phi = f' (1 + f) / (1 - f).
enum class Orientation { AsOrthogonality, AsPrinted };

std::string_view to_string(Orientation o);
Orientation parse_orientation(std::string_view name);

struct PushforwardWeight {
    RationalMap map;
    Orientation orientation;
    RationalFunction weight;
};

/// Throws std::domain_error if f does not certify onto [-1, 1].
PushforwardWeight pushforward_weight(const RationalMap& f, Orientation orientation);

struct ComposedGram {
    std::vector<int> indices;
    std::vector<std::vector<Real>> values;
    std::vector<std::vector<Real>> error_estimates;

    Real max_error_estimate() const;
};

/// Numeric Gram matrix of x -> P_n(f(x)), n = 1..max_n, under phi, without a
/// convergence check.
ComposedGram composed_gram_estimate(const RationalMap& f, Orientation orientation, int max_n,
                                    const QuadratureRule& rule);

/// As above, but throws QuadratureError (carrying the achieved estimate) when
/// any entry's error estimate exceeds `tolerance`.
ComposedGram composed_gram(const RationalMap& f, Orientation orientation, int max_n, const QuadratureRule& rule,
                           double tolerance = 1e-10);

}  // namespace polar

#endif  // POLAR_COMPOSED_HPP
