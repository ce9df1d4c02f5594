#include "polar/families.hpp"

#include "polar/errors.hpp"

#include <functional>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

namespace polar {
namespace {

void require_index(FamilyKind kind, int n) {
    if (n < min_index(kind)) {
        throw DomainError(std::string(to_string(kind)) + " index " + std::to_string(n) + " is below " +
                          std::to_string(min_index(kind)));
    }
}

// Grow-only table. Readers take a shared lock; extension happens under the
// exclusive lock, so a reader never sees a partially built entry.
class MemoTable {
public:
    using Extend = std::function<Polynomial(const std::vector<Polynomial>&, int)>;

    explicit MemoTable(Extend extend) : extend_(std::move(extend)) {}

    Polynomial get(int n) {
        const auto idx = static_cast<std::size_t>(n);
        {
            std::shared_lock lock(mutex_);
            if (idx < table_.size()) return table_[idx];
        }
        std::unique_lock lock(mutex_);
        while (table_.size() <= idx) table_.push_back(extend_(table_, static_cast<int>(table_.size())));
        return table_[idx];
    }

private:
    Extend extend_;
    std::shared_mutex mutex_;
    std::vector<Polynomial> table_;
};

MemoTable& legendre_table() {
    static MemoTable table([](const std::vector<Polynomial>& t, int m) {
        if (m == 0) return Polynomial::constant(1);
        if (m == 1) return Polynomial::x();
        // m L_m = (2m-1) x L_{m-1} - (m-1) L_{m-2}
        const int k = m - 1;
        Polynomial next = Polynomial::x() * t[k] * BigRational(2 * k + 1) - t[k - 1] * BigRational(k);
        return next * BigRational(1, m);
    });
    return table;
}

// Index i holds Q_i; slots 0 and 1 are placeholders.
MemoTable& pipcir_table() {
    static MemoTable table([](const std::vector<Polynomial>&, int m) {
        if (m < 2) return Polynomial{};
        return antiderivative_vanishing_at(legendre(m - 1), 1);
    });
    return table;
}

MemoTable& polar_table() {
    static MemoTable table([](const std::vector<Polynomial>&, int m) {
        if (m == 0) return Polynomial::constant(1);
        return divide_exact(pipcir(m + 1) * BigRational(m + 1), Polynomial::linear_factor(1));
    });
    return table;
}

Polynomial x2_minus_1() { return Polynomial({-1, 0, 1}); }

BigRational pow2(int e) { return pow(BigRational(2), static_cast<unsigned>(e)); }

}  // namespace

std::string_view to_string(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::Legendre: return "legendre";
        case FamilyKind::Pipcir: return "pipcir";
        case FamilyKind::Polar: return "polar";
    }
    return "?";
}

FamilyKind parse_family(std::string_view name) {
    if (name == "legendre") return FamilyKind::Legendre;
    if (name == "pipcir") return FamilyKind::Pipcir;
    if (name == "polar") return FamilyKind::Polar;
    throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

int min_index(FamilyKind kind) { return kind == FamilyKind::Pipcir ? 2 : 0; }

Polynomial legendre(int n) {
    require_index(FamilyKind::Legendre, n);
    return legendre_table().get(n);
}

Polynomial pipcir(int n) {
    require_index(FamilyKind::Pipcir, n);
    return pipcir_table().get(n);
}

Polynomial polar(int n) {
    require_index(FamilyKind::Polar, n);
    return polar_table().get(n);
}

Polynomial family(FamilyKind kind, int n) {
    switch (kind) {
        case FamilyKind::Legendre: return legendre(n);
        case FamilyKind::Pipcir: return pipcir(n);
        case FamilyKind::Polar: return polar(n);
    }
    throw std::logic_error("bad family kind");
}

Polynomial pipcir_cofactor(int n) { return divide_exact(pipcir(n), x2_minus_1()); }

Polynomial pipcir_explicit(int n) {
    require_index(FamilyKind::Pipcir, n);
    std::vector<BigRational> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; 2 * k <= n; ++k) {
        BigRational term(double_factorial(2 * n - 2 * k - 3),
                         double_factorial(2 * k) * factorial(n - 2 * k));
        if (k % 2 == 1) term = -term;
        c[static_cast<std::size_t>(n - 2 * k)] = term;
    }
    return Polynomial(std::move(c));
}

Polynomial pipcir_rodrigues(int n) {
    require_index(FamilyKind::Pipcir, n);
    const BigRational scale =
        BigRational(1) / (pow2(n - 1) * BigRational(factorial(n)) * BigRational(n - 1));
    const Polynomial d = differentiate(pow(x2_minus_1(), static_cast<unsigned>(n - 1)), static_cast<unsigned>(n));
    return x2_minus_1() * d * scale;
}

Polynomial polar_rodrigues(int n) {
    if (n < 1) throw DomainError("polar Rodrigues formula needs n >= 1");
    const BigRational scale = BigRational(1) / (pow2(n) * BigRational(factorial(n)) * BigRational(n));
    const Polynomial d = differentiate(pow(x2_minus_1(), static_cast<unsigned>(n)), static_cast<unsigned>(n + 1));
    return Polynomial({1, 1}) * d * scale;
}

Polynomial shifted_binomial_legendre(int n) {
    require_index(FamilyKind::Legendre, n);
    Polynomial sum;
    const Polynomial xm1({-1, 1});
    const Polynomial xp1({1, 1});
    for (int k = 0; k <= n; ++k) {
        const BigInteger c = binomial(n, k);
        sum += pow(xm1, static_cast<unsigned>(n - k)) * pow(xp1, static_cast<unsigned>(k)) * BigRational(c * c);
    }
    return sum * (BigRational(1) / pow2(n));
}

Polynomial legendre_rodrigues(int n) {
    require_index(FamilyKind::Legendre, n);
    const BigRational scale = BigRational(1) / (pow2(n) * BigRational(factorial(n)));
    return differentiate(pow(x2_minus_1(), static_cast<unsigned>(n)), static_cast<unsigned>(n)) * scale;
}

SpecialValues special_values(FamilyKind kind, int n) {
    const Polynomial p = family(kind, n);
    const Polynomial d1 = differentiate(p);
    const Polynomial d2 = differentiate(d1);
    return SpecialValues{
        .value_at_plus1 = evaluate(p, 1),
        .value_at_minus1 = evaluate(p, -1),
        .value_at_0 = evaluate(p, 0),
        .deriv_at_plus1 = evaluate(d1, 1),
        .deriv_at_0 = evaluate(d1, 0),
        .second_deriv_at_plus1 = evaluate(d2, 1),
    };
}

Polynomial ode_residual(FamilyKind kind, int n) {
    const Polynomial p = family(kind, n);
    const Polynomial d1 = differentiate(p);
    const Polynomial d2 = differentiate(d1);
    const Polynomial one_minus_x2({1, 0, -1});
    switch (kind) {
        case FamilyKind::Legendre:
            return differentiate(one_minus_x2 * d1) + p * BigRational(n * (n + 1));
        case FamilyKind::Pipcir:
            return one_minus_x2 * d2 + p * BigRational(n * (n - 1));
        case FamilyKind::Polar:
            return x2_minus_1() * d2 + Polynomial({2, 2}) * d1 - p * BigRational(n * (n + 1));
    }
    throw std::logic_error("bad family kind");
}

Polynomial pipcir_third_order_residual(int n) {
    const Polynomial q = pipcir(n);
    const Polynomial d1 = differentiate(q);
    const Polynomial d2 = differentiate(d1);
    const Polynomial d3 = differentiate(d2);
    return Polynomial({1, 0, -1}) * d3 - Polynomial({0, 2}) * d2 + d1 * BigRational(n * (n - 1));
}

Polynomial polar_derivative_residual(int n) {
    const Polynomial p = polar(n);
    return legendre(n) * BigRational(n + 1) - (Polynomial({-1, 1}) * differentiate(p) + p);
}

Polynomial rodrigues_pair_residual(int n) {
    if (n < 2) throw DomainError("rodrigues_pair_residual needs n >= 2");
    const Polynomial u = pow(x2_minus_1(), static_cast<unsigned>(n - 1));
    return x2_minus_1() * differentiate(u, static_cast<unsigned>(n)) -
           differentiate(u, static_cast<unsigned>(n - 2)) * BigRational(n * (n - 1));
}

std::pair<Polynomial, Polynomial> recurrence_residual_pipcir(int n) {
    if (n < 3) throw DomainError("PIPCIR recurrence needs n >= 3");
    const Polynomial qn = pipcir(n);
    const Polynomial up = pipcir(n + 1);
    const Polynomial down = pipcir(n - 1);
    const BigRational inv(1, 2 * n - 1);
    const Polynomial first = differentiate(qn) - (differentiate(up, 2) - differentiate(down, 2)) * inv;
    const Polynomial second = antiderivative_vanishing_at(qn, 1) - (up - down) * inv;
    return {first, second};
}

}  // namespace polar
