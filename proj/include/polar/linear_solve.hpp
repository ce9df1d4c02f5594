#ifndef POLAR_LINEAR_SOLVE_HPP
#define POLAR_LINEAR_SOLVE_HPP

#include "polar/numeric.hpp"

#include <vector>

namespace polar {

using RationalMatrix = std::vector<std::vector<BigRational>>;

/// Solves A x = b exactly. Rows are cleared to integers and reduced with
/// fraction-free (Bareiss) elimination; only the back substitution divides.
/// Throws SpanError if A is singular.
std::vector<BigRational> solve_exact(const RationalMatrix& a, const std::vector<BigRational>& b);

}  // namespace polar

#endif  // POLAR_LINEAR_SOLVE_HPP
