#ifndef POLAR_WEIGHTED_IP_HPP
#define POLAR_WEIGHTED_IP_HPP

#include "polar/families.hpp"

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace polar {

/// QWeight = 1/(1-x^2), PWeight = (1-x)/(1+x), KernelZeroWeight = x(1-x)/(1+x).
enum class WeightKind { QWeight, PWeight, KernelZeroWeight };

std::string_view to_string(WeightKind w);
WeightKind parse_weight(std::string_view name);
/// QWeight for Pipcir, PWeight for Polar; Legendre has no singular weight here.
WeightKind natural_weight(FamilyKind kind);

/// Polynomial r with r = product * w exactly. Throws NotReducible when the
/// singular denominator of w does not divide the product.
Polynomial reduce_weighted(const Polynomial& product, WeightKind w);

/// Exact value of int_{-1}^{1} a b w dx via reduce_weighted.
BigRational inner_product(const Polynomial& a, const Polynomial& b, WeightKind w);

/// Inner product of the n-th member with itself under its natural weight.
BigRational norm_squared(FamilyKind kind, int n);

struct GramMatrix {
    std::vector<int> indices;
    /// entries[i][j] is empty when the pair was not reducible.
    std::vector<std::vector<std::optional<BigRational>>> entries;
    /// Index pairs (indices[i], indices[j]) whose integrand did not reduce.
    std::vector<std::pair<int, int>> flagged;

    /// True when every finite off-diagonal entry is exactly zero.
    bool is_diagonal() const;
};

/// Gram matrix of an arbitrary list of polynomials; labels tag rows/columns.
GramMatrix gram_matrix(const std::vector<Polynomial>& basis, const std::vector<int>& labels, WeightKind w);
GramMatrix gram_matrix(FamilyKind kind, WeightKind w, const std::vector<int>& indices);

}  // namespace polar

#endif  // POLAR_WEIGHTED_IP_HPP
