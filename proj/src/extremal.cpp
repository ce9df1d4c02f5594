#include "polar/extremal.hpp"

#include "polar/errors.hpp"
#include "polar/linear_solve.hpp"

namespace polar {
namespace {

void require_nonempty(const KernelSpec& spec) {
    if (spec.empty()) throw DomainError("extremal problem needs a nonempty index set");
}

}  // namespace

BigRational extremal_objective(const Polynomial& f) { return inner_product(f, f, WeightKind::PWeight); }

ExtremalSolution solve_extremal(const KernelSpec& spec) {
    require_nonempty(spec);
    BigRational s(0);
    for (int k : spec.indices()) {
        const BigRational at1 = evaluate(polar(k), 1);
        s += at1 * at1 / polar_norm_squared(k);
    }
    ExtremalSolution sol;
    sol.indices = spec.indices();
    sol.minimum = BigRational(1) / s;
    for (int k : spec.indices()) {
        const Polynomial p = polar(k);
        const BigRational a = evaluate(p, 1) / polar_norm_squared(k) * sol.minimum;
        sol.coefficients.emplace(k, a);
        sol.minimizer += p * a;
    }
    return sol;
}

ExtremalSolution oracle_minimize(const KernelSpec& spec) {
    require_nonempty(spec);
    const auto& idx = spec.indices();
    const std::size_t m = idx.size();
    std::vector<Polynomial> basis;
    for (int k : idx) basis.push_back(polar(k));

    // Unknowns a_0..a_{m-1}, beta.
    RationalMatrix a(m + 1, std::vector<BigRational>(m + 1));
    std::vector<BigRational> rhs(m + 1);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            a[i][j] = BigRational(2) * inner_product(basis[i], basis[j], WeightKind::PWeight);
        }
        const BigRational at1 = evaluate(basis[i], 1);
        a[i][m] = at1;
        a[m][i] = at1;
    }
    rhs[m] = 1;
    const auto x = solve_exact(a, rhs);

    ExtremalSolution sol;
    sol.indices = idx;
    for (std::size_t i = 0; i < m; ++i) {
        sol.coefficients.emplace(idx[i], x[i]);
        sol.minimizer += basis[i] * x[i];
    }
    sol.minimum = extremal_objective(sol.minimizer);
    return sol;
}

PublishedExtremal published_Fn(int n) {
    if (n < 2) throw DomainError("published extremal form needs n >= 2");
    BigRational denom(0);
    for (int j = 2; j <= n; ++j) denom += BigRational(j * (j - 1) * (2 * j - 1));
    PublishedExtremal out;
    out.minimum = BigRational(2) / denom;
    for (int k = 2; k <= n; ++k) {
        out.f += polar(k) * (BigRational(k * (k - 1) * (2 * k - 1), 2 * (k + 1)) * out.minimum);
    }
    return out;
}

}  // namespace polar
