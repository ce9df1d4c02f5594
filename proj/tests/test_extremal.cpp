#include "generators.hpp"
#include "polar/errors.hpp"
#include "polar/extremal.hpp"

#include <gtest/gtest.h>

namespace polar {

TEST(SolveExtremal, Examples) {
    const ExtremalSolution two = solve_extremal(KernelSpec({2}));
    EXPECT_EQ(two.minimum, BigRational(1, 15));
    EXPECT_EQ(two.minimizer, Polynomial({0, 1, 1}) * BigRational(1, 2));
    EXPECT_EQ(two.coefficients.at(2), BigRational(1, 3));

    const ExtremalSolution one = solve_extremal(KernelSpec({1}));
    EXPECT_EQ(one.minimum, BigRational(1, 3));
    EXPECT_EQ(one.minimizer, Polynomial({1, 1}) * BigRational(1, 2));

    EXPECT_EQ(solve_extremal(KernelSpec({1, 2})).minimum, BigRational(1, 18));
    EXPECT_EQ(solve_extremal(KernelSpec({1, 2, 3})).minimum, BigRational(1, 60));
}

TEST(SolveExtremal, EmptySetThrows) {
    EXPECT_ANY_THROW(solve_extremal(KernelSpec(std::vector<int>{})));
}

TEST(OracleMinimize, Examples) {
    EXPECT_EQ(oracle_minimize(KernelSpec({2})), solve_extremal(KernelSpec({2})));
    EXPECT_EQ(oracle_minimize(KernelSpec({1, 2, 3})), solve_extremal(KernelSpec({1, 2, 3})));
    const ExtremalSolution five = oracle_minimize(KernelSpec({5}));
    EXPECT_EQ(five.minimizer, polar(5) * BigRational(1, 6));
    EXPECT_EQ(five.minimum, polar_norm_squared(5) / BigRational(36));
    EXPECT_EQ(five.minimum, BigRational(1, 165));
}

TEST(OracleMinimize, AgreesWithClosedForm) {
    for (int a = 1; a <= 12; ++a) {
        for (int b = a; b <= 12; ++b) {
            const KernelSpec spec = KernelSpec::range(a, b);
            EXPECT_EQ(oracle_minimize(spec), solve_extremal(spec)) << a << ".." << b;
        }
    }
    prop::Gen g(51);
    for (int i = 0; i < 50; ++i) {
        const KernelSpec spec(g.subset(1, 12));
        EXPECT_EQ(oracle_minimize(spec), solve_extremal(spec));
    }
}

TEST(Extremal, PerturbationsDoNotImprove) {
    prop::Gen g(52);
    int nonzero = 0;
    for (int i = 0; i < 20; ++i) {
        std::vector<int> idx = g.subset(1, 10);
        if (idx.size() < 2) idx = {1, 4};
        const KernelSpec spec(idx);
        const ExtremalSolution sol = solve_extremal(spec);
        // delta in the span with delta(1) = 0: pair the first index against the others.
        Polynomial delta;
        const int k0 = spec.indices().front();
        for (std::size_t j = 1; j < spec.indices().size(); ++j) {
            const int k = spec.indices()[j];
            const BigRational c = g.rational();
            delta += (polar(k) * BigRational(k0 + 1) - polar(k0) * BigRational(k + 1)) * c;
        }
        ASSERT_TRUE(evaluate(delta, 1).is_zero());
        const BigRational value = extremal_objective(sol.minimizer + delta);
        if (delta.is_zero()) {
            EXPECT_EQ(value, sol.minimum);
        } else {
            ++nonzero;
            EXPECT_GT(value, sol.minimum);
        }
    }
    EXPECT_GT(nonzero, 10);
}

TEST(Extremal, MinimumDecreasesWithN) {
    BigRational prev = solve_extremal(KernelSpec::contiguous(1)).minimum;
    for (int n = 2; n <= 15; ++n) {
        const BigRational cur = solve_extremal(KernelSpec::contiguous(n)).minimum;
        EXPECT_LT(cur, prev) << n;
        prev = cur;
    }
}

TEST(Extremal, MinimizerSatisfiesConstraint) {
    prop::Gen g(53);
    for (int i = 0; i < 30; ++i) {
        const ExtremalSolution sol = solve_extremal(KernelSpec(g.subset(1, 12)));
        EXPECT_EQ(evaluate(sol.minimizer, 1), BigRational(1));
        EXPECT_EQ(extremal_objective(sol.minimizer), sol.minimum);
    }
}

TEST(Extremal, KernelNormalizedAtOne) {
    for (int n = 1; n <= 12; ++n) {
        const KernelSpec spec = KernelSpec::contiguous(n);
        const BigRational k11 = kernel_value(spec, 1, 1);
        const ExtremalSolution sol = solve_extremal(spec);
        EXPECT_EQ(sol.minimum, BigRational(1) / k11);
        EXPECT_EQ(sol.minimizer, kernel_in_x(spec, 1) * (BigRational(1) / k11));
    }
}

TEST(PublishedFn, Examples) {
    EXPECT_EQ(published_Fn(2).minimum, BigRational(1, 3));
    EXPECT_NE(published_Fn(2).minimum, solve_extremal(KernelSpec({2})).minimum);
    EXPECT_EQ(published_Fn(3).minimum, BigRational(1, 18));
    EXPECT_EQ(published_Fn(2).f, polar(2) * BigRational(1, 3));
    EXPECT_THROW(published_Fn(1), DomainError);
}

}  // namespace polar
