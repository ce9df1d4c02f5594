#ifndef POLAR_EXTREMAL_HPP
#define POLAR_EXTREMAL_HPP

#include "polar/kernels.hpp"

#include <map>

namespace polar {

/// Minimizer of int f^2 (1-x)/(1+x) dx over f in span{P_k : k in K} with f(1) = 1.
struct ExtremalSolution {
    std::vector<int> indices;
    std::map<int, BigRational> coefficients;
    BigRational minimum;
    Polynomial minimizer;

    friend bool operator==(const ExtremalSolution&, const ExtremalSolution&) = default;
};

/// Closed form: a_k = (P_k(1)/||P_k||^2) / S and M = 1/S with
/// S = sum_j P_j(1)^2 / ||P_j||^2.
ExtremalSolution solve_extremal(const KernelSpec& spec);

/// Lagrange stationarity system solved exactly: for each k in K
///   2 sum_j <P_k, P_j> a_j + beta P_k(1) = 0,  and  sum_j a_j P_j(1) = 1.
/// The full Gram matrix is used, orthogonality is not assumed.
ExtremalSolution oracle_minimize(const KernelSpec& spec);

/// The published closed form for n >= 2:
///   M = 2 / sum_{j=2}^n j(j-1)(2j-1),
///   F = M * sum_{k=2}^n k(k-1)(2k-1) / (2(k+1)) P_k.
struct PublishedExtremal {
    Polynomial f;
    BigRational minimum;
};
PublishedExtremal published_Fn(int n);

/// Objective value int f^2 (1-x)/(1+x) dx.
BigRational extremal_objective(const Polynomial& f);

}  // namespace polar

#endif  // POLAR_EXTREMAL_HPP
