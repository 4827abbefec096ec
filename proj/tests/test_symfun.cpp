#include <random>

#include <gtest/gtest.h>

#include <symfund/oracle.hpp>

#include "support.hpp"

using namespace symfund;
using symfund::testing::ones;
using symfund::testing::S;

namespace {

SchurVector hook_sum(int n)
{
    SchurVector out;
    for (int k = 0; k < n; ++k) {
        std::vector<int> parts{n - k};
        parts.insert(parts.end(), static_cast<std::size_t>(k), 1);
        out.add_term(Partition(parts), k % 2 == 0 ? 1 : -1);
    }
    return out;
}

}  // namespace

TEST(LinearCombination, Basics)
{
    const SchurVector f = S({{{2}, 1}, {{1, 1}, 1}, {{3}, 1}});
    EXPECT_EQ(f + SchurVector{}, f);
    EXPECT_TRUE(scale(f, 0).is_zero());
    EXPECT_EQ(degree_component(f, 2), S({{{2}, 1}, {{1, 1}, 1}}));
    EXPECT_TRUE((f - f).is_zero());
    EXPECT_EQ(homogeneous_degree(f), std::nullopt);
    EXPECT_EQ(homogeneous_degree(schur({2, 1})), 3);
}

TEST(ZLambda, Examples)
{
    EXPECT_EQ(z_lambda(Multiplicity{{3}}), 6);
    EXPECT_EQ(z_lambda(Multiplicity{{0, 0, 1}}), 3);
    EXPECT_EQ(z_lambda(Multiplicity{}), 1);
    EXPECT_EQ(z_lambda(Partition{2, 2, 1}), 8);
}

TEST(HallPower, Examples)
{
    EXPECT_EQ(hall_power(power({3}), power({3})), 3);
    EXPECT_EQ(hall_power(power({1, 1, 1}), power({3})), 0);
    EXPECT_EQ(hall_power(power({1, 1, 1}), power({1, 1, 1})), 6);
}

TEST(HallSchur, Examples)
{
    EXPECT_EQ(hall_schur(schur({2, 1}), schur({2, 1})), 1);
    EXPECT_EQ(hall_schur(schur({3}), schur({2, 1})), 0);
    EXPECT_EQ(hall_schur(S({{{2}, 2}, {{1, 1}, -1}}), schur({1, 1})), -1);
}

TEST(MultPn, Examples)
{
    for (int n = 1; n <= 8; ++n)
        EXPECT_EQ(mult_pn(one(), n), hook_sum(n)) << n;
    EXPECT_EQ(mult_pn(schur({1}), 1), S({{{2}, 1}, {{1, 1}, 1}}));
    const SchurVector p2 = S({{{2}, 1}, {{1, 1}, -1}});
    EXPECT_EQ(mult_pn(schur({2, 2}), 2), oracle::monomial_to_schur(oracle::product_oracle(schur({2, 2}), p2, 6), 6));
    EXPECT_THROW(mult_pn(one(), 0), std::invalid_argument);
}

TEST(PowerToSchur, Examples)
{
    EXPECT_EQ(power_to_schur(power({4})), S({{{4}, 1}, {{3, 1}, -1}, {{2, 1, 1}, 1}, {{1, 1, 1, 1}, -1}}));
    EXPECT_EQ(power_to_schur(power({1, 1})), S({{{2}, 1}, {{1, 1}, 1}}));
    EXPECT_EQ(power_to_schur(power({2, 1})),
              oracle::monomial_to_schur(oracle::power_poly(2, 3) * oracle::power_poly(1, 3), 3));
    EXPECT_EQ(power_to_schur(power({})), one());
}

TEST(SchurToPower, Examples)
{
    const Rational half(1, 2);
    EXPECT_EQ(schur_to_power(schur({2})), (PowerVector{{Partition{1, 1}, half}, {Partition{2}, half}}));
    EXPECT_EQ(schur_to_power(schur({1, 1})), (PowerVector{{Partition{1, 1}, half}, {Partition{2}, -half}}));
    EXPECT_EQ(schur_to_power(schur({1})), power({1}));
}

TEST(SchurToPower, RoundTripOnRandomVectors)
{
    std::mt19937 rng(7);
    for (int i = 0; i < 500; ++i) {
        const SchurVector f = symfund::testing::random_vector(rng, 10, 9);
        ASSERT_EQ(power_to_schur(schur_to_power(f)), f);
    }
}

TEST(Hall, SchurAndPowerImplementationsAgree)
{
    std::mt19937 rng(11);
    for (int i = 0; i < 200; ++i) {
        const SchurVector f = symfund::testing::random_vector(rng, 10);
        const SchurVector g = symfund::testing::random_vector(rng, 10);
        ASSERT_EQ(hall_schur(f, g), hall_power(schur_to_power(f), schur_to_power(g)));
    }
}

TEST(Character, Examples)
{
    EXPECT_EQ(character({2, 1}, Multiplicity{{3}}), 2);
    EXPECT_EQ(character({2, 1}, Partition{1, 1, 1}), 2);
    for (int d = 1; d <= 8; ++d)
        for (const auto& l : partitions_of(d))
            EXPECT_EQ(character(Partition{d}, l), 1);
    EXPECT_EQ(character({1, 1}, Multiplicity{{0, 1}}), -1);
    EXPECT_THROW(character({2, 1}, Partition{2}), std::invalid_argument);
}

TEST(Character, SignCharacterOfColumn)
{
    for (int d = 1; d <= 8; ++d)
        for (const auto& l : partitions_of(d))
            EXPECT_EQ(character(ones(d), l), (d - l.length()) % 2 == 0 ? 1 : -1);
}

TEST(Character, ColumnOrthogonality)
{
    for (int d = 1; d <= 8; ++d) {
        const auto shapes = partitions_of(d);
        for (const auto& l : shapes)
            for (const auto& m : shapes) {
                Integer sum = 0;
                for (const auto& a : shapes)
                    sum += character(a, l) * character(a, m);
                ASSERT_EQ(sum, l == m ? z_lambda(l) : Integer(0)) << l << ' ' << m;
            }
    }
}

TEST(Character, AgreesWithOracleTable)
{
    for (int d = 1; d <= 7; ++d)
        for (const auto& a : partitions_of(d)) {
            const PowerVector expansion = oracle::schur_in_power_sums(a);
            for (const auto& l : partitions_of(d))
                ASSERT_EQ(Rational(character(a, l)), expansion.coefficient(l) * Rational(z_lambda(l)));
        }
}

TEST(Product, Examples)
{
    EXPECT_EQ(product(schur({2}), schur({1})), S({{{3}, 1}, {{2, 1}, 1}}));
    EXPECT_EQ(product(schur({1}), schur({1})), S({{{2}, 1}, {{1, 1}, 1}}));
    EXPECT_EQ(product(schur({2, 1}), schur({2, 1})), oracle::product_schur({2, 1}, {2, 1}, 6));
    EXPECT_EQ(product(schur({2, 1}), SchurVector{}), SchurVector{});
}

TEST(Product, CommutativeAssociativeWithUnit)
{
    std::mt19937 rng(3);
    for (int i = 0; i < 30; ++i) {
        const SchurVector f = symfund::testing::random_vector(rng, 2, 3);
        const SchurVector g = symfund::testing::random_vector(rng, 2, 3);
        const SchurVector h = symfund::testing::random_vector(rng, 2, 3);
        ASSERT_EQ(product(f, g), product(g, f));
        ASSERT_EQ(product(product(f, g), h), product(f, product(g, h)));
        ASSERT_EQ(product(f, one()), f);
    }
}

TEST(Product, LittlewoodRichardsonPositivity)
{
    for (int m = 0; m <= 10; ++m)
        for (int n = 0; m + n <= 10; ++n)
            for (const auto& a : partitions_of(m))
                for (const auto& b : partitions_of(n))
                    for (const auto& [g, c] : product(schur(a), schur(b)))
                        ASSERT_TRUE(c > 0 && is_integer(c)) << a << " * " << b << " at " << g;
}

TEST(Product, AgreesWithOracle)
{
    for (int m = 1; m <= 6; ++m)
        for (int n = 1; m + n <= 8; ++n)
            for (const auto& a : partitions_of(m))
                for (const auto& b : partitions_of(n))
                    ASSERT_EQ(product(schur(a), schur(b)), oracle::product_schur(a, b)) << a << " * " << b;
}

TEST(Multiply, PowerMonomialsMerge)
{
    EXPECT_EQ(multiply(power({2}), power({3, 1})), power({3, 2, 1}));
    EXPECT_EQ(multiply(power({}), power({2})), power({2}));
}
