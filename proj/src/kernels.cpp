#include "polar/kernels.hpp"

#include "polar/errors.hpp"
#include "polar/linear_solve.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>

namespace polar {

KernelSpec KernelSpec::contiguous(int n) { return range(1, n); }

KernelSpec KernelSpec::range(int first, int last) {
    std::vector<int> idx;
    for (int k = first; k <= last; ++k) idx.push_back(k);
    return KernelSpec(std::move(idx));
}

KernelSpec::KernelSpec(std::vector<int> indices) : indices_(std::move(indices)) {
    std::sort(indices_.begin(), indices_.end());
    indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
    if (!indices_.empty() && indices_.front() < 1) {
        throw NotReducible("kernel index " + std::to_string(indices_.front()) +
                           " has divergent norm under the p-weight");
    }
}

bool KernelSpec::is_one_based_contiguous() const {
    for (std::size_t i = 0; i < indices_.size(); ++i) {
        if (indices_[i] != static_cast<int>(i) + 1) return false;
    }
    return !indices_.empty();
}

BigRational polar_norm_squared(int k) {
    static std::mutex mutex;
    static std::map<int, BigRational> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(k); it != cache.end()) return it->second;
    }
    BigRational v = norm_squared(FamilyKind::Polar, k);
    std::lock_guard lock(mutex);
    cache.emplace(k, v);
    return v;
}

Polynomial kernel_in_x(const KernelSpec& spec, const BigRational& y) {
    Polynomial sum;
    for (int k : spec.indices()) {
        const Polynomial p = polar(k);
        sum += p * (evaluate(p, y) / polar_norm_squared(k));
    }
    return sum;
}

BigRational kernel_value(const KernelSpec& spec, const BigRational& x, const BigRational& y) {
    return evaluate(kernel_in_x(spec, y), x);
}

namespace {

BigRational cd_numerator_ratio(int n, const BigRational& x, const BigRational& y) {
    const Polynomial pn = polar(n);
    const Polynomial pn1 = polar(n + 1);
    if (x == y) {
        return evaluate(differentiate(pn1), x) * evaluate(pn, x) - evaluate(pn1, x) * evaluate(differentiate(pn), x);
    }
    return (evaluate(pn1, x) * evaluate(pn, y) - evaluate(pn1, y) * evaluate(pn, x)) / (x - y);
}

}  // namespace

BigRational christoffel_darboux(int n, const BigRational& x, const BigRational& y) {
    if (n < 1) throw DomainError("christoffel_darboux needs n >= 1");
    const BigRational ratio = polar(n).leading() / polar(n + 1).leading();
    return ratio * cd_numerator_ratio(n, x, y) / polar_norm_squared(n);
}

BigRational christoffel_darboux_without_ratio(int n, const BigRational& x, const BigRational& y) {
    if (n < 1) throw DomainError("christoffel_darboux needs n >= 1");
    return cd_numerator_ratio(n, x, y) / polar_norm_squared(n);
}

std::vector<BigRational> expand_in_polar_basis(const Polynomial& f, const KernelSpec& spec) {
    const auto& idx = spec.indices();
    const std::size_t m = idx.size();
    std::vector<Polynomial> basis;
    for (int k : idx) basis.push_back(polar(k));

    std::vector<BigRational> coeffs;
    if (m != 0) {
        RationalMatrix g(m, std::vector<BigRational>(m));
        std::vector<BigRational> rhs(m);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i; j < m; ++j) {
                g[i][j] = inner_product(basis[i], basis[j], WeightKind::PWeight);
                g[j][i] = g[i][j];
            }
            rhs[i] = inner_product(basis[i], f, WeightKind::PWeight);
        }
        coeffs = solve_exact(g, rhs);
    }
    Polynomial residual = f;
    for (std::size_t i = 0; i < m; ++i) residual -= basis[i] * coeffs[i];
    if (!residual.is_zero()) {
        throw SpanError("function lies outside the kernel span; residual " + residual.str());
    }
    return coeffs;
}

Polynomial reproduce(const Polynomial& f, const KernelSpec& spec) {
    expand_in_polar_basis(f, spec);
    // K(x,t) f(t) w(t) integrated over t one kernel term at a time.
    Polynomial out;
    for (int k : spec.indices()) {
        const Polynomial p = polar(k);
        out += p * (inner_product(p, f, WeightKind::PWeight) / polar_norm_squared(k));
    }
    return out;
}

GramMatrix kernel_zero_gram(int max_n) {
    if (max_n < 2) throw DomainError("kernel_zero_gram needs max_n >= 2");
    std::vector<Polynomial> basis;
    std::vector<int> labels;
    for (int n = 1; n <= max_n; ++n) {
        basis.push_back(kernel_in_x(KernelSpec::contiguous(n), 0));
        labels.push_back(n);
    }
    return gram_matrix(basis, labels, WeightKind::KernelZeroWeight);
}

}  // namespace polar
