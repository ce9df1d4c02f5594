#include "polar/weighted_ip.hpp"

#include "polar/errors.hpp"
#include "polar/parallel.hpp"

#include <string>

namespace polar {
namespace {

const Interval& unit_interval() {
    static const Interval iv(-1, 1);
    return iv;
}

Polynomial divide_or_flag(const Polynomial& p, const Polynomial& d, WeightKind w) {
    auto [q, r] = divide_with_remainder(p, d);
    if (!r.is_zero()) {
        throw NotReducible("integrand under " + std::string(to_string(w)) + " is not a polynomial: (" + p.str() +
                           ") mod (" + d.str() + ") = " + r.str());
    }
    return q;
}

}  // namespace

std::string_view to_string(WeightKind w) {
    switch (w) {
        case WeightKind::QWeight: return "q-weight";
        case WeightKind::PWeight: return "p-weight";
        case WeightKind::KernelZeroWeight: return "kernel-zero-weight";
    }
    return "?";
}

WeightKind parse_weight(std::string_view name) {
    if (name == "q-weight" || name == "q") return WeightKind::QWeight;
    if (name == "p-weight" || name == "p") return WeightKind::PWeight;
    if (name == "kernel-zero-weight" || name == "kernel-zero") return WeightKind::KernelZeroWeight;
    throw std::invalid_argument("unknown weight '" + std::string(name) + "'");
}

WeightKind natural_weight(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::Pipcir: return WeightKind::QWeight;
        case FamilyKind::Polar: return WeightKind::PWeight;
        case FamilyKind::Legendre: break;
    }
    throw DomainError("the Legendre family has no singular weight");
}

Polynomial reduce_weighted(const Polynomial& product, WeightKind w) {
    switch (w) {
        case WeightKind::QWeight:
            // p / (1 - x^2) = -p / (x^2 - 1)
            return -divide_or_flag(product, Polynomial({-1, 0, 1}), w);
        case WeightKind::PWeight:
            return divide_or_flag(product, Polynomial({1, 1}), w) * Polynomial({1, -1});
        case WeightKind::KernelZeroWeight:
            return divide_or_flag(product, Polynomial({1, 1}), w) * Polynomial({0, 1, -1});
    }
    throw std::logic_error("bad weight kind");
}

BigRational inner_product(const Polynomial& a, const Polynomial& b, WeightKind w) {
    return definite_integral(reduce_weighted(a * b, w), unit_interval());
}

BigRational norm_squared(FamilyKind kind, int n) {
    const Polynomial p = family(kind, n);
    return inner_product(p, p, natural_weight(kind));
}

bool GramMatrix::is_diagonal() const {
    for (std::size_t i = 0; i < entries.size(); ++i) {
        for (std::size_t j = 0; j < entries[i].size(); ++j) {
            if (i != j && entries[i][j] && !entries[i][j]->is_zero()) return false;
        }
    }
    return true;
}

GramMatrix gram_matrix(const std::vector<Polynomial>& basis, const std::vector<int>& labels, WeightKind w) {
    if (basis.size() != labels.size()) throw std::invalid_argument("gram_matrix: label count mismatch");
    const std::size_t n = basis.size();
    GramMatrix g;
    g.indices = labels;
    g.entries.assign(n, std::vector<std::optional<BigRational>>(n));

    std::vector<std::pair<std::size_t, std::size_t>> upper;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) upper.emplace_back(i, j);
    }
    detail::parallel_for(upper.size(), [&](std::size_t e) {
        const auto [i, j] = upper[e];
        try {
            g.entries[i][j] = inner_product(basis[i], basis[j], w);
        } catch (const NotReducible&) {
            // left empty; flagged below
        }
    });
    for (const auto& [i, j] : upper) {
        g.entries[j][i] = g.entries[i][j];
        if (!g.entries[i][j]) g.flagged.emplace_back(labels[i], labels[j]);
    }
    return g;
}

GramMatrix gram_matrix(FamilyKind kind, WeightKind w, const std::vector<int>& indices) {
    std::vector<Polynomial> basis;
    basis.reserve(indices.size());
    for (int k : indices) basis.push_back(family(kind, k));
    return gram_matrix(basis, indices, w);
}

}  // namespace polar
