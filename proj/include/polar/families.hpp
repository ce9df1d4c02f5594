#ifndef POLAR_FAMILIES_HPP
#define POLAR_FAMILIES_HPP

#include "polar/polynomial.hpp"

#include <string_view>
#include <utility>

namespace polar {

/// Legendre L_n (n >= 0), PIPCIR Q_n (n >= 2), polar Legendre P_n (n >= 0).
enum class FamilyKind { Legendre, Pipcir, Polar };

std::string_view to_string(FamilyKind kind);
FamilyKind parse_family(std::string_view name);
int min_index(FamilyKind kind);

// Canonical constructors. Results are memoized per family; every other route
// below is checked against these.

/// Three-term recurrence (n+1) L_{n+1} = (2n+1) x L_n - n L_{n-1}.
Polynomial legendre(int n);
/// Q_n = -int_x^1 L_{n-1}(t) dt, i.e. the antiderivative of L_{n-1} vanishing at 1.
Polynomial pipcir(int n);
/// P_n from (n+1) Q_{n+1} = (x - 1) P_n; P_0 = 1.
Polynomial polar(int n);
Polynomial family(FamilyKind kind, int n);

/// q_{n-2} in Q_n = (x^2 - 1) q_{n-2}.
Polynomial pipcir_cofactor(int n);

// Alternate routes.

/// Double-factorial sum over 0 <= 2k <= n of
/// (-1)^k (2n-2k-3)!! / ((2k)!! (n-2k)!) x^(n-2k).
Polynomial pipcir_explicit(int n);
/// (x^2-1) / (2^(n-1) n! (n-1)) * d^n/dx^n (x^2-1)^(n-1)
Polynomial pipcir_rodrigues(int n);
/// (x+1) / (2^n n! n) * d^(n+1)/dx^(n+1) (x^2-1)^n, n >= 1
Polynomial polar_rodrigues(int n);
/// 2^-n sum_k C(n,k)^2 (x-1)^(n-k) (x+1)^k
Polynomial shifted_binomial_legendre(int n);
/// 1 / (2^n n!) * d^n/dx^n (x^2-1)^n
Polynomial legendre_rodrigues(int n);

/// Values read off the constructed polynomial; never closed forms.
struct SpecialValues {
    BigRational value_at_plus1;
    BigRational value_at_minus1;
    BigRational value_at_0;
    BigRational deriv_at_plus1;
    BigRational deriv_at_0;
    BigRational second_deriv_at_plus1;
};

SpecialValues special_values(FamilyKind kind, int n);

/// Left-hand side of the family's second-order ODE; zero when it holds.
///   Legendre: ((1-x^2) L')' + n(n+1) L
///   Pipcir:   (1-x^2) Q'' + n(n-1) Q
///   Polar:    (x^2-1) P'' + 2(x+1) P' - n(n+1) P
Polynomial ode_residual(FamilyKind kind, int n);

/// (1-x^2) Q''' - 2x Q'' + n(n-1) Q', the differentiated Pipcir ODE.
Polynomial pipcir_third_order_residual(int n);

/// (n+1) L_n - ((x-1) P_n' + P_n)
Polynomial polar_derivative_residual(int n);

/// (x^2-1) D^n[(x^2-1)^(n-1)] - n(n-1) D^(n-2)[(x^2-1)^(n-1)], n >= 2
Polynomial rodrigues_pair_residual(int n);

/// First: Q_n' - (Q_{n+1}'' - Q_{n-1}'') / (2n-1).
/// Second: int Q_n - (Q_{n+1} - Q_{n-1}) / (2n-1), with the antiderivative of
/// Q_n taken to vanish at x = 1 where Q_{n+1} - Q_{n-1} does. Requires n >= 3.
std::pair<Polynomial, Polynomial> recurrence_residual_pipcir(int n);

}  // namespace polar

#endif  // POLAR_FAMILIES_HPP
