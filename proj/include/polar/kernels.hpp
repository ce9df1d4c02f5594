#ifndef POLAR_KERNELS_HPP
#define POLAR_KERNELS_HPP

#include "polar/weighted_ip.hpp"

#include <vector>

namespace polar {

/// Index set of a polar-family reproducing kernel. Every index must have a
/// finite norm under the P-weight, which rules out P_0.
class KernelSpec {
public:
    /// {1..n}
    static KernelSpec contiguous(int n);
    /// {first..last}; empty when last < first.
    static KernelSpec range(int first, int last);
    /// Sorted and deduplicated; throws NotReducible if an index has divergent norm.
    explicit KernelSpec(std::vector<int> indices);

    const std::vector<int>& indices() const { return indices_; }
    bool empty() const { return indices_.empty(); }
    /// True when the set is {1..n} for some n >= 1.
    bool is_one_based_contiguous() const;

private:
    std::vector<int> indices_;
};

/// P-weight norm of P_k, memoized.
BigRational polar_norm_squared(int k);

/// sum_{k in K} P_k(y) P_k(x) / ||P_k||^2 as a polynomial in x.
Polynomial kernel_in_x(const KernelSpec& spec, const BigRational& y);
BigRational kernel_value(const KernelSpec& spec, const BigRational& x, const BigRational& y);

/// Closed form of K_n for K = {1..n} with the leading-coefficient ratio
/// k_n / k_{n+1}. For x == y the confluent form with exact derivatives is used.
BigRational christoffel_darboux(int n, const BigRational& x, const BigRational& y);

/// Same formula without the k_n / k_{n+1} factor, exactly as it is usually
/// misquoted. Kept as an audit target only.
BigRational christoffel_darboux_without_ratio(int n, const BigRational& x, const BigRational& y);

/// Coefficients c with f = sum c_k P_k over spec; throws SpanError carrying
/// the residual when f is outside the span.
std::vector<BigRational> expand_in_polar_basis(const Polynomial& f, const KernelSpec& spec);

/// int_{-1}^{1} K(x,t) f(t) (1-t)/(1+t) dt, each kernel term integrated exactly.
/// Throws SpanError when f is not in span{P_k : k in K}.
Polynomial reproduce(const Polynomial& f, const KernelSpec& spec);

/// Gram matrix of K_n(x, 0) with K = {1..n}, n = 1..max_n, under KernelZeroWeight.
GramMatrix kernel_zero_gram(int max_n);

}  // namespace polar

#endif  // POLAR_KERNELS_HPP
