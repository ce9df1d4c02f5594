#include "polar/errors.hpp"
#include "polar/families.hpp"
#include "polar/parallel.hpp"

#include <gtest/gtest.h>

#include <atomic>

namespace polar {

namespace {

Polynomial scaled(std::initializer_list<BigRational> c, long den) { return Polynomial(c) * BigRational(1, den); }

// Coefficient listing for Q_2..Q_6.
const std::vector<std::pair<int, Polynomial>>& listing() {
    static const std::vector<std::pair<int, Polynomial>> l = {
        {2, scaled({-1, 0, 1}, 2)},
        {3, scaled({0, -1, 0, 1}, 2)},
        {4, scaled({1, 0, -6, 0, 5}, 8)},
        {5, scaled({0, 3, 0, -10, 0, 7}, 8)},
        {6, scaled({-1, 0, 15, 0, -35, 0, 21}, 16)},
    };
    return l;
}

}  // namespace

TEST(Legendre, Examples) {
    EXPECT_EQ(legendre(0), Polynomial::constant(1));
    EXPECT_EQ(legendre(1), Polynomial::x());
    EXPECT_EQ(legendre(2), scaled({-1, 0, 3}, 2));
    BigRational sum(0);
    for (int k = 0; k <= 2; ++k) {
        const BigInteger c = binomial(2, k);
        sum += BigRational(c * c) * BigRational(k % 2 == 0 ? 1 : -1);
    }
    EXPECT_EQ(evaluate(legendre(2), 0), sum * BigRational(1, 4));
    EXPECT_EQ(evaluate(legendre(2), 0), BigRational(-1, 2));
}

TEST(Legendre, NegativeIndexThrows) { EXPECT_THROW(legendre(-1), DomainError); }

TEST(Pipcir, MatchesListing) {
    for (const auto& [n, q] : listing()) EXPECT_EQ(pipcir(n), q) << n;
    EXPECT_EQ(evaluate(pipcir(4), 0), BigRational(1, 8));
}

TEST(Pipcir, BelowRangeThrows) {
    EXPECT_THROW(pipcir(1), DomainError);
    EXPECT_THROW(pipcir(0), DomainError);
}

TEST(PipcirExplicit, Examples) {
    EXPECT_EQ(pipcir_explicit(2), scaled({-1, 0, 1}, 2));
    EXPECT_EQ(pipcir_explicit(3), scaled({0, -1, 0, 1}, 2));
    EXPECT_EQ(pipcir_explicit(5), scaled({0, 3, 0, -10, 0, 7}, 8));
}

TEST(PipcirRodrigues, Examples) {
    EXPECT_EQ(pipcir_rodrigues(2), scaled({-1, 0, 1}, 2));
    EXPECT_EQ(pipcir_rodrigues(3), scaled({0, -1, 0, 1}, 2));
    EXPECT_EQ(pipcir_rodrigues(4), scaled({1, 0, -6, 0, 5}, 8));
}

TEST(Polar, Examples) {
    EXPECT_EQ(polar(0), Polynomial::constant(1));
    EXPECT_EQ(polar(1), Polynomial({1, 1}));
    EXPECT_EQ(polar(2), scaled({0, 3, 3}, 2));
    EXPECT_EQ(polar(3), scaled({-1, -1, 5, 5}, 2));
}

TEST(PolarRodrigues, Examples) {
    EXPECT_EQ(polar_rodrigues(1), Polynomial({1, 1}));
    EXPECT_EQ(polar_rodrigues(2), scaled({0, 3, 3}, 2));
    EXPECT_EQ(polar_rodrigues(3), Polynomial({1, 1}) * scaled({-1, 0, 5}, 2));
    EXPECT_THROW(polar_rodrigues(0), DomainError);
}

TEST(ShiftedBinomial, Examples) {
    EXPECT_EQ(shifted_binomial_legendre(0), Polynomial::constant(1));
    EXPECT_EQ(shifted_binomial_legendre(1), Polynomial::x());
    EXPECT_EQ(shifted_binomial_legendre(2), scaled({-1, 0, 3}, 2));
}

TEST(SpecialValues, Examples) {
    const SpecialValues p2 = special_values(FamilyKind::Polar, 2);
    EXPECT_EQ(p2.value_at_plus1, BigRational(3));
    EXPECT_EQ(p2.deriv_at_plus1, BigRational(9, 2));
    for (int n = 2; n <= 20; ++n) {
        EXPECT_TRUE(special_values(FamilyKind::Pipcir, n).value_at_plus1.is_zero()) << n;
        EXPECT_TRUE(special_values(FamilyKind::Pipcir, n).value_at_minus1.is_zero()) << n;
    }
}

TEST(OdeResidual, Examples) {
    EXPECT_TRUE(ode_residual(FamilyKind::Pipcir, 4).is_zero());
    EXPECT_TRUE(ode_residual(FamilyKind::Polar, 2).is_zero());
    EXPECT_TRUE(ode_residual(FamilyKind::Legendre, 3).is_zero());
}

TEST(RecurrenceResidual, Examples) {
    for (int n : {3, 4, 10}) {
        const auto [a, b] = recurrence_residual_pipcir(n);
        EXPECT_TRUE(a.is_zero()) << n;
        EXPECT_TRUE(b.is_zero()) << n;
    }
    EXPECT_THROW(recurrence_residual_pipcir(2), DomainError);
}

TEST(RouteEquivalence, UpTo25) {
    for (int n = 0; n <= 25; ++n) {
        EXPECT_EQ(legendre(n), shifted_binomial_legendre(n)) << n;
        EXPECT_EQ(legendre(n), legendre_rodrigues(n)) << n;
        if (n >= 1) EXPECT_EQ(polar(n), polar_rodrigues(n)) << n;
        if (n >= 2) {
            EXPECT_EQ(pipcir(n), pipcir_rodrigues(n)) << n;
            EXPECT_EQ(pipcir(n), pipcir_explicit(n)) << n;
        }
    }
}

TEST(Identities, UpTo40) {
    const Polynomial xm1({-1, 1});
    for (int n = 0; n <= 40; ++n) {
        const Polynomial p = polar(n);
        const Polynomial dp = differentiate(p);
        EXPECT_EQ(legendre(n) * BigRational(n + 1), xm1 * dp + p) << n;
        EXPECT_TRUE(polar_derivative_residual(n).is_zero()) << n;
        EXPECT_EQ(evaluate(p, 1), BigRational(n + 1)) << n;
        EXPECT_EQ(evaluate(dp, 0), evaluate(p, 0) - BigRational(n + 1) * evaluate(legendre(n), 0)) << n;
        EXPECT_EQ(p.leading(), legendre(n).leading()) << n;
        EXPECT_EQ(legendre(n).leading(),
                  BigRational(factorial(2 * n), pow(BigRational(2), static_cast<unsigned>(n)).numerator() *
                                                    factorial(n) * factorial(n)))
            << n;
        EXPECT_TRUE(ode_residual(FamilyKind::Polar, n).is_zero()) << n;
        EXPECT_TRUE(ode_residual(FamilyKind::Legendre, n).is_zero()) << n;
        if (n >= 2) {
            const Polynomial q = pipcir(n);
            EXPECT_EQ(differentiate(q), legendre(n - 1)) << n;
            EXPECT_EQ(evaluate(differentiate(q), 1), BigRational(1)) << n;
            EXPECT_TRUE(ode_residual(FamilyKind::Pipcir, n).is_zero()) << n;
            EXPECT_TRUE(pipcir_third_order_residual(n).is_zero()) << n;
            EXPECT_EQ(n % 2 == 0 ? is_even(q) : is_odd(q), true) << n;
            EXPECT_EQ(q, Polynomial({-1, 0, 1}) * pipcir_cofactor(n)) << n;
        }
        if (n >= 3) {
            const auto [a, b] = recurrence_residual_pipcir(n);
            EXPECT_TRUE(a.is_zero() && b.is_zero()) << n;
        }
        if (n >= 2 && n % 2 == 0) EXPECT_TRUE(evaluate(p, 0).is_zero()) << n;
    }
}

TEST(Identities, RodriguesPairUpTo20) {
    for (int n = 2; n <= 20; ++n) EXPECT_TRUE(rodrigues_pair_residual(n).is_zero()) << n;
}

// The exact quotient Q_n'' / q_{n-2} is the constant n(n-1).
TEST(Identities, InflectionQuotient) {
    for (int n = 2; n <= 40; ++n) {
        const Polynomial quotient = divide_exact(differentiate(pipcir(n), 2), pipcir_cofactor(n));
        EXPECT_EQ(quotient, Polynomial::constant(BigRational(n * (n - 1)))) << n;
    }
}

TEST(FamilyKind, Names) {
    for (FamilyKind k : {FamilyKind::Legendre, FamilyKind::Pipcir, FamilyKind::Polar}) {
        EXPECT_EQ(parse_family(to_string(k)), k);
    }
    EXPECT_THROW(parse_family("hermite"), std::invalid_argument);
}

TEST(Memo, ConcurrentReadersAgree) {
    std::vector<Polynomial> got(64);
    detail::parallel_for(got.size(), [&](std::size_t i) { got[i] = polar(30 + static_cast<int>(i % 8)); });
    for (std::size_t i = 0; i < got.size(); ++i) EXPECT_EQ(got[i], polar(30 + static_cast<int>(i % 8)));
}

}  // namespace polar
