#include <gtest/gtest.h>

#include "necklace/euler.hpp"
#include "test_helpers.hpp"

namespace necklace {
namespace {

TEST(ChiIrr, Examples) {
    EXPECT_EQ(chi_irr({1, 1}, BaseField::Real), -1);
    EXPECT_EQ(chi_irr({16, 13}, BaseField::Real), 1);
    EXPECT_EQ(chi_irr({2, 5}, BaseField::Complex), 0);
    EXPECT_EQ(chi_irr({1, 5}, BaseField::Complex), 5);
}

TEST(ChiIrrRealClosed, Examples) {
    EXPECT_EQ(chi_irr_real_closed({4, 13}), -1);
    EXPECT_EQ(chi_irr_real_closed({3, 13}), 0);
    EXPECT_EQ(chi_irr_real_closed({2, 2}), -1);
    EXPECT_EQ(chi_irr_real_closed({4, 2}), 1);
    EXPECT_EQ(chi_irr_real_closed({16, 13}), 1);
}

TEST(ChiIrrRealClosed, AgreesWithSpecializationAtScale) {
    for (std::uint64_t n = 1; n <= 64; ++n) {
        const auto table = necklace_table_at(n, 64, -1);
        for (std::uint64_t d = 1; d <= 64; ++d) {
            ASSERT_EQ(table.at(d), chi_irr_real_closed({d, n})) << "d=" << d << " n=" << n;
        }
    }
}

TEST(ChiIrr, ComplexVanishesAboveDegreeOne) {
    for (std::uint64_t n = 1; n <= 16; ++n) {
        const auto table = euler_table(n, 32, BaseField::Complex);
        for (const auto& row : table.rows) {
            ASSERT_EQ(row.chi, row.d == 1 ? BigInteger(static_cast<unsigned long>(n)) : BigInteger(0)) << "n=" << n << " d=" << row.d;
            ASSERT_FALSE(row.closed);
        }
    }
}

TEST(ChiIrr, RealSupportIsBalancedBinary) {
    for (std::uint64_t n = 1; n <= 64; ++n) {
        const auto expansion = balanced_expansion(static_cast<unsigned long>(n), 2);
        ASSERT_TRUE(expansion);
        std::map<std::uint64_t, int> expected;
        for (const auto& t : expansion->terms()) expected[std::uint64_t{1} << t.exponent] = t.sign;
        const auto table = euler_table(n, 128, BaseField::Real);
        std::map<std::uint64_t, int> nonzero;
        for (const auto& row : table.rows) {
            if (row.chi != 0) nonzero[row.d] = static_cast<int>(row.chi.get_si());
        }
        ASSERT_EQ(nonzero, expected) << n;
    }
}

TEST(ChiPoly, Examples) {
    EXPECT_EQ(chi_poly({2, 2}, BaseField::Complex), 3);
    EXPECT_EQ(chi_poly({2, 2}, BaseField::Real), -1);
    for (std::uint64_t n = 1; n <= 4; ++n) {
        EXPECT_EQ(chi_poly({0, n}, BaseField::Real), 1);
        EXPECT_EQ(chi_poly({0, n}, BaseField::Complex), 1);
    }
}

TEST(ChiPoly, MatchesPolynomialEvaluation) {
    for (std::uint64_t n = 1; n <= 4; ++n) {
        for (std::uint64_t d = 0; d <= 6; ++d) {
            const RatPoly f = poly_count_polynomial({d, n});
            ASSERT_EQ(Rational(chi_poly({d, n}, BaseField::Real)), ratpoly_eval(f, Rational(-1)));
            ASSERT_EQ(Rational(chi_poly({d, n}, BaseField::Complex)), ratpoly_eval(f, Rational(1)));
        }
    }
}

TEST(ChiPoly, PartitionSumOfIrreducibleCharacteristics) {
    // chi_c(Poly_d) = sum over lambda |- d of prod_j multichoose(chi_c(Irr_j), m_j)
    for (auto field : {BaseField::Real, BaseField::Complex}) {
        for (std::uint64_t n = 1; n <= 3; ++n) {
            EulerExponents<Rational> chi;
            for (std::uint64_t j = 1; j <= 4; ++j) chi.emplace(j, Rational(chi_irr({j, n}, field)));
            for (std::uint64_t d = 1; d <= 4; ++d) {
                Rational sum = 0;
                for (const auto& lambda : enumerate_partitions(d)) sum += partition_weight(chi, lambda, Rational(0));
                ASSERT_EQ(sum, Rational(chi_poly({d, n}, field))) << to_string(field) << " n=" << n << " d=" << d;
            }
        }
    }
}

TEST(EulerTable, Examples) {
    const auto t13 = euler_table(13, 20, BaseField::Real);
    ASSERT_EQ(t13.rows.size(), 20u);
    for (const auto& row : t13.rows) {
        int expected = 0;
        if (row.d == 1 || row.d == 4) expected = -1;
        if (row.d == 2 || row.d == 16) expected = 1;
        EXPECT_EQ(row.chi, expected) << row.d;
        EXPECT_EQ(*row.closed, row.chi);
    }

    const auto t1 = euler_table(1, 10, BaseField::Real);
    for (const auto& row : t1.rows) EXPECT_EQ(row.chi, row.d == 1 ? -1 : (row.d == 2 ? 1 : 0)) << row.d;

    const auto t5 = euler_table(5, 6, BaseField::Complex);
    for (const auto& row : t5.rows) EXPECT_EQ(row.chi, row.d == 1 ? 5 : 0) << row.d;
    EXPECT_EQ(t5.method(), "specialized");
    EXPECT_EQ(t13.method(), "specialized+closed-form");
}

TEST(EulerTable, EmptyAndErrors) {
    EXPECT_TRUE(euler_table(3, 0, BaseField::Real).rows.empty());
    EXPECT_THROW(euler_table(0, 3, BaseField::Real), InputError);
    EXPECT_THROW(parse_base_field("quaternion"), InputError);
    EXPECT_EQ(chi_c_of(BaseField::Real), -1);
    EXPECT_EQ(chi_c_of(BaseField::Complex), 1);
}

}  // namespace
}  // namespace necklace
