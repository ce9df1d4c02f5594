#include "polar/linear_solve.hpp"

#include "polar/errors.hpp"

#include <utility>

namespace polar {

std::vector<BigRational> solve_exact(const RationalMatrix& a, const std::vector<BigRational>& b) {
    const std::size_t n = a.size();
    if (b.size() != n) throw std::invalid_argument("solve_exact: dimension mismatch");
    for (const auto& row : a) {
        if (row.size() != n) throw std::invalid_argument("solve_exact: matrix is not square");
    }
    if (n == 0) return {};

    // Augmented integer matrix, each row scaled by the lcm of its denominators.
    std::vector<std::vector<BigInteger>> m(n, std::vector<BigInteger>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        BigInteger scale(1);
        for (std::size_t j = 0; j < n; ++j) scale = lcm(scale, a[i][j].denominator());
        scale = lcm(scale, b[i].denominator());
        const BigRational s(scale);
        for (std::size_t j = 0; j < n; ++j) m[i][j] = (a[i][j] * s).numerator();
        m[i][n] = (b[i] * s).numerator();
    }

    BigInteger prev(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m[pivot][k].is_zero()) ++pivot;
        if (pivot == n) throw SpanError("solve_exact: singular system");
        if (pivot != k) std::swap(m[pivot], m[k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j <= n; ++j) {
                m[i][j] = exact_quotient(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            }
            m[i][k] = BigInteger(0);
        }
        prev = m[k][k];
    }

    std::vector<BigRational> x(n);
    for (std::size_t ii = n; ii-- > 0;) {
        BigRational acc(m[ii][n]);
        for (std::size_t j = ii + 1; j < n; ++j) acc -= BigRational(m[ii][j]) * x[j];
        x[ii] = acc / BigRational(m[ii][ii]);
    }
    return x;
}

}  // namespace polar
