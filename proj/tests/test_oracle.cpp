#include <gtest/gtest.h>

#include <symfund/oracle.hpp>

#include "support.hpp"

using namespace symfund;
using namespace symfund::oracle;
using symfund::testing::S;

TEST(MonomialPoly, FromExponentsChecksSymmetry)
{
    const auto e2 = MonomialPoly::from_exponents(3, {{{1, 1, 0}, 1}, {{1, 0, 1}, 1}, {{0, 1, 1}, 1}});
    EXPECT_EQ(e2.coefficient(Partition{1, 1}), 1);
    EXPECT_EQ(monomial_to_schur(e2, 2), schur({1, 1}));
    EXPECT_THROW(MonomialPoly::from_exponents(2, {{{1, 0}, 1}}), std::invalid_argument);
    EXPECT_THROW(MonomialPoly::from_exponents(2, {{{1, 0, 0}, 1}}), std::invalid_argument);
    EXPECT_THROW(MonomialPoly(0), std::invalid_argument);
}

TEST(MonomialPoly, OrbitSizesAndEvaluation)
{
    const MonomialPoly P(4);
    EXPECT_EQ(P.orbit_size({2, 1}), 12);
    EXPECT_EQ(P.orbit_size({1, 1}), 6);
    EXPECT_EQ(P.orbit_size({}), 1);
    EXPECT_EQ(power_poly(3, 4).evaluate_at_ones(), 4);
}

TEST(SchurPoly, Examples)
{
    const auto h2 = schur_poly({2}, 2);
    EXPECT_EQ(h2, MonomialPoly::from_exponents(2, {{{2, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}}));
    EXPECT_EQ(schur_poly({1, 1}, 2), MonomialPoly::from_exponents(2, {{{1, 1}, 1}}));
    const auto s21 = schur_poly({2, 1}, 3);
    EXPECT_EQ(s21.evaluate_at_ones(), 8);
    EXPECT_EQ(s21.coefficient(std::vector<int>{1, 1, 1}), 2);
    EXPECT_TRUE(schur_poly({1, 1, 1}, 2).is_zero());
}

TEST(Kostka, Values)
{
    EXPECT_EQ(kostka({2, 1}, {1, 1, 1}), 2);
    EXPECT_EQ(kostka({3, 2}, {2, 2, 1}), 2);
    EXPECT_EQ(kostka({2, 2}, {3, 1}), 0);
    EXPECT_EQ(kostka({3, 1}, {3, 1}), 1);
}

TEST(PowerPoly, SubstituteIntoSingleBox)
{
    EXPECT_EQ(substitute_power(2, expand(schur({1}), 3)), power_poly(2, 3));
    EXPECT_EQ(plethysm_oracle(power({2}), schur({1}), 3),
              MonomialPoly::from_exponents(3, {{{2, 0, 0}, 1}, {{0, 2, 0}, 1}, {{0, 0, 2}, 1}}));
}

TEST(ProductOracle, Examples)
{
    EXPECT_EQ(product_oracle(schur({2}), schur({1}), 3), expand(S({{{3}, 1}, {{2, 1}, 1}}), 3));
    EXPECT_THROW(product_oracle(schur({2}), schur({1}), 2), std::invalid_argument);
}

TEST(PlethysmOracle, Examples)
{
    const Rational half(1, 2);
    const PowerVector h2{{Partition{1, 1}, half}, {Partition{2}, half}};
    EXPECT_EQ(plethysm_oracle(h2, schur({2}), 4), expand(S({{{4}, 1}, {{2, 2}, 1}}), 4));
    EXPECT_EQ(plethysm_schur({1, 1}, {1, 1}), schur({2, 1, 1}));
    EXPECT_THROW(plethysm_oracle(h2, schur({2}), 3), std::invalid_argument);
}

TEST(MonomialToSchur, Examples)
{
    EXPECT_EQ(monomial_to_schur(schur_poly({3, 1}, 4), 4), schur({3, 1}));
    EXPECT_THROW(monomial_to_schur(schur_poly({3, 1}, 3), 4), std::invalid_argument);
    EXPECT_THROW(monomial_to_schur(schur_poly({3, 1}, 5), 3), std::invalid_argument);
}

TEST(SchurInPowerSums, IndependentTableMatchesMainPath)
{
    for (int d = 0; d <= 7; ++d)
        for (const auto& a : partitions_of(d))
            ASSERT_EQ(schur_in_power_sums(a), schur_to_power(schur(a))) << a;
}

TEST(Oracle, IndependentOfExtraVariables)
{
    EXPECT_EQ(plethysm_schur({2}, {2}, 4), plethysm_schur({2}, {2}, 6));
    EXPECT_EQ(product_schur({2, 1}, {1}, 4), product_schur({2, 1}, {1}, 7));
}

TEST(Oracle, MatchesSchurRankAtOnes)
{
    for (int d = 1; d <= 6; ++d)
        for (const auto& a : partitions_of(d))
            ASSERT_EQ(schur_poly(a, 6).evaluate_at_ones(), Rational(schur_rank(a, 6)));
}

TEST(Oracle, AgreesWithRecursivePlethysm)
{
    for (const auto& [a, b] : symfund::testing::plethysm_pairs(9))
        ASSERT_EQ(plethysm(a, b), plethysm_schur(a, b)) << a << " [ " << b << " ]";
}

TEST(Oracle, AgreesWithProduct)
{
    for (int m = 1; m <= 7; ++m)
        for (int n = 1; m + n <= 8; ++n)
            for (const auto& a : partitions_of(m))
                for (const auto& b : partitions_of(n))
                    ASSERT_EQ(product_schur(a, b), lr_product_recursive(a, b)) << a << " * " << b;
}
