#include <gtest/gtest.h>

#include <set>

#include "necklace/fq_oracle.hpp"
#include "test_helpers.hpp"

namespace necklace {
namespace {

Monomial mono(std::initializer_list<std::uint32_t> e) { return Monomial{std::vector<std::uint32_t>(e)}; }

TEST(PrimeField, AxiomsExhaustive) {
    for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
        const PrimeField f(q);
        for (std::uint32_t a = 0; a < q; ++a) {
            ASSERT_EQ(f.add(a, 0), a);
            ASSERT_EQ(f.mul(a, 1), a);
            ASSERT_EQ(f.add(a, f.neg(a)), 0u);
            if (a != 0) {
            ASSERT_EQ(f.mul(a, f.inv(a)), 1u);
        }
            for (std::uint32_t b = 0; b < q; ++b) {
                ASSERT_EQ(f.add(a, b), f.add(b, a));
                ASSERT_EQ(f.mul(a, b), f.mul(b, a));
                ASSERT_EQ(f.sub(f.add(a, b), b), a);
                for (std::uint32_t c = 0; c < q; ++c) {
                    ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    ASSERT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    ASSERT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                }
            }
        }
        EXPECT_THROW(f.inv(0), InputError);
    }
    EXPECT_THROW(PrimeField(4), InputError);
    EXPECT_THROW(PrimeField(11), InputError);
}

TEST(Monomials, GradedLexOrder) {
    const auto ms = monomials_up_to(2, 2);
    std::vector<std::vector<std::uint32_t>> got;
    for (const auto& m : ms) got.push_back(m.exponents);
    const std::vector<std::vector<std::uint32_t>> expected{{2, 0}, {1, 1}, {0, 2}, {1, 0}, {0, 1}, {0, 0}};
    EXPECT_EQ(got, expected);
    for (std::size_t i = 1; i < ms.size(); ++i) EXPECT_TRUE(grlex_greater(ms[i - 1], ms[i]));
    EXPECT_EQ(monomials_up_to(4, 3).size(), binomial(7, 3).get_ui());
}

TEST(Monomials, OrderIsMultiplicative) {
    const auto ms = monomials_up_to(3, 3);
    for (const auto& a : ms) {
        for (const auto& b : ms) {
            for (const auto& c : ms) {
                if (grlex_greater(a, b)) {
                    ASSERT_TRUE(grlex_greater(a * c, b * c));
                }
            }
        }
    }
}

TEST(FqMPoly, CanonicalFormAndSerialization) {
    const PrimeField f2(2);
    const FqMPoly g(2, f2, {{mono({0, 0}), 1}, {mono({1, 0}), 1}, {mono({0, 1}), 1}, {mono({1, 0}), 1}});
    // x1 + x1 cancel in characteristic 2
    EXPECT_EQ(g.serialize(), "1*x1^0x2^1+1*x1^0x2^0");
    EXPECT_TRUE(g.is_monic());
    EXPECT_EQ(g.total_degree(), 1u);
    EXPECT_EQ(FqMPoly::one(3, f2).serialize(), "1*x1^0x2^0x3^0");
    const FqMPoly h(1, PrimeField(3), {{mono({2}), 2}, {mono({0}), 1}});
    EXPECT_FALSE(h.is_monic());
    EXPECT_EQ(h.serialize(), "2*x1^2+1*x1^0");
}

TEST(MpolyMul, Examples) {
    const PrimeField f2(2);
    const FqMPoly x_plus_1(1, f2, {{mono({1}), 1}, {mono({0}), 1}});
    EXPECT_EQ(mpoly_mul(x_plus_1, x_plus_1), FqMPoly(1, f2, {{mono({2}), 1}, {mono({0}), 1}}));

    const FqMPoly f(2, f2, {{mono({1, 0}), 1}, {mono({0, 1}), 1}});
    EXPECT_EQ(mpoly_mul(f, FqMPoly::one(2, f2)), f);

    const FqMPoly g(2, f2, {{mono({1, 0}), 1}, {mono({0, 0}), 1}});
    const FqMPoly expected(2, f2, {{mono({2, 0}), 1}, {mono({1, 1}), 1}, {mono({1, 0}), 1}, {mono({0, 1}), 1}});
    EXPECT_EQ(mpoly_mul(f, g), expected);
}

TEST(MpolyMul, ContextMismatch) {
    const FqMPoly a = FqMPoly::one(2, PrimeField(2));
    EXPECT_THROW(mpoly_mul(a, FqMPoly::one(3, PrimeField(2))), InputError);
    EXPECT_THROW(mpoly_mul(a, FqMPoly::one(2, PrimeField(3))), InputError);
}

TEST(MpolyMul, MonicClosureAndDegreeAdditivity) {
    for (std::uint32_t q : {2u, 3u, 5u}) {
        const PrimeField field(q);
        for (std::uint32_t n = 1; n <= 3; ++n) {
            std::vector<std::vector<FqMPoly>> by_degree;
            for (std::uint32_t d = 0; d <= 2; ++d) by_degree.push_back(list_monic(d, n, field));
            for (int trial = 0; trial < 200; ++trial) {
                const auto da = static_cast<std::size_t>(testing::uniform(0, 2));
                const auto db = static_cast<std::size_t>(testing::uniform(0, 2));
                const auto& fa = by_degree[da][static_cast<std::size_t>(testing::uniform(0, static_cast<std::int64_t>(by_degree[da].size()) - 1))];
                const auto& fb = by_degree[db][static_cast<std::size_t>(testing::uniform(0, static_cast<std::int64_t>(by_degree[db].size()) - 1))];
                const FqMPoly prod = mpoly_mul(fa, fb);
                ASSERT_TRUE(prod.is_monic()) << fa.serialize() << " * " << fb.serialize();
                ASSERT_EQ(prod.total_degree(), da + db);
                ASSERT_EQ(prod.terms().front().first, fa.terms().front().first * fb.terms().front().first);
            }
        }
    }
}

TEST(EnumerateMonic, Examples) {
    const PrimeField f2(2);
    EXPECT_EQ(enumerate_monic(1, 2, f2, nullptr), 6u);
    EXPECT_EQ(enumerate_monic(2, 2, f2, nullptr), 56u);
    for (std::uint32_t n = 1; n <= 3; ++n) {
        const auto constants = list_monic(0, n, PrimeField(3));
        ASSERT_EQ(constants.size(), 1u);
        EXPECT_EQ(constants[0], FqMPoly::one(n, PrimeField(3)));
    }
}

TEST(EnumerateMonic, TotalsMatchPolyCount) {
    for (std::uint32_t q : {2u, 3u}) {
        for (std::uint32_t n = 1; n <= 3; ++n) {
            for (std::uint32_t d = 0; d <= 4; ++d) {
                const BigInteger predicted = poly_count_value({d, n}, q);
                if (predicted > 100000) continue;
                ASSERT_EQ(BigInteger(static_cast<unsigned long>(count_monic(d, n, PrimeField(q)))), predicted)
                    << "q=" << q << " n=" << n << " d=" << d;
            }
        }
    }
}

TEST(EnumerateMonic, EveryPolynomialMonicOfExactDegreeAndDistinct) {
    for (std::uint32_t q : {2u, 3u}) {
        for (std::uint32_t n = 1; n <= 2; ++n) {
            for (std::uint32_t d = 0; d <= 3; ++d) {
                std::set<std::string> seen;
                std::uint64_t count = enumerate_monic(d, n, PrimeField(q), [&](const FqMPoly& f) {
                    ASSERT_TRUE(f.is_monic());
                    ASSERT_EQ(f.total_degree(), d);
                    seen.insert(f.serialize());
                });
                ASSERT_EQ(seen.size(), count) << "q=" << q << " n=" << n << " d=" << d;
            }
        }
    }
}

TEST(EnumerateMonic, Deterministic) {
    EXPECT_EQ(list_monic(2, 2, PrimeField(3)), list_monic(2, 2, PrimeField(3)));
}

TEST(EnumerateMonic, Guardrail) {
    Guardrails g;
    g.work_cap = 55;
    EXPECT_THROW(count_monic(2, 2, PrimeField(2), g), ResourceError);
    g.work_cap = 56;
    EXPECT_EQ(count_monic(2, 2, PrimeField(2), g), 56u);
    try {
        Guardrails tiny;
        tiny.work_cap = 1;
        count_monic(2, 2, PrimeField(2), tiny);
        FAIL() << "expected a ResourceError";
    } catch (const ResourceError& e) {
        EXPECT_NE(std::string(e.what()).find("56"), std::string::npos);
    }
}

TEST(CountIrreducible, Examples) {
    EXPECT_EQ(count_irreducible(2, 1, PrimeField(2)), 1u);
    for (std::uint32_t n = 1; n <= 3; ++n) {
        EXPECT_EQ(count_irreducible(1, n, PrimeField(3)), poly_count_value({1, n}, 3).get_ui());
    }
    EXPECT_EQ(count_irreducible(2, 2, PrimeField(2)), 35u);
    EXPECT_EQ(count_irreducible(3, 1, PrimeField(2)), 2u);
}

TEST(CountIrreducible, MicroCaseByListing) {
    // Over F_2 in one variable the degree 2 products of linear monics are
    // x*x, x*(x+1), (x+1)*(x+1): three distinct polynomials.
    const PrimeField f2(2);
    const auto linear = list_monic(1, 1, f2);
    ASSERT_EQ(linear.size(), 2u);
    std::set<std::string> products;
    for (const auto& a : linear) {
        for (const auto& b : linear) products.insert(mpoly_mul(a, b).serialize());
    }
    EXPECT_EQ(products, (std::set<std::string>{"1*x1^2", "1*x1^2+1*x1^1", "1*x1^2+1*x1^0"}));
    const auto all = list_monic(2, 1, f2);
    ASSERT_EQ(all.size(), 4u);
    std::vector<std::string> irreducible;
    for (const auto& f : all) {
        if (!products.count(f.serialize())) irreducible.push_back(f.serialize());
    }
    EXPECT_EQ(irreducible, std::vector<std::string>{"1*x1^2+1*x1^1+1*x1^0"});
    EXPECT_EQ(count_irreducible(2, 1, f2), 1u);
}

TEST(CountIrreducible, SieveAgreesWithSparseProducts) {
    // Dense sieve vs. products built with mpoly_mul on the public type.
    for (std::uint32_t q : {2u, 3u}) {
        for (std::uint32_t n = 1; n <= 2; ++n) {
            for (std::uint32_t d = 2; d <= 3; ++d) {
                const PrimeField field(q);
                std::set<std::string> reducible;
                for (std::uint32_t i = 1; i <= d / 2; ++i) {
                    const auto left = list_monic(i, n, field);
                    const auto right = list_monic(d - i, n, field);
                    for (const auto& a : left) {
                        for (const auto& b : right) reducible.insert(mpoly_mul(a, b).serialize());
                    }
                }
                const auto total = count_monic(d, n, field);
                ASSERT_EQ(count_irreducible(d, n, field), total - reducible.size()) << "q=" << q << " n=" << n << " d=" << d;
            }
        }
    }
}

TEST(CountIrreducible, IndependentOfWorkerCount) {
    const PrimeField f2(2);
    const auto serial = count_irreducible(4, 2, f2, {}, 1);
    for (unsigned w : {2u, 3u, 8u}) EXPECT_EQ(count_irreducible(4, 2, f2, {}, w), serial);
}

TEST(CountIrreducible, Guardrail) {
    Guardrails g;
    g.work_cap = 1000;
    EXPECT_THROW(count_irreducible(4, 2, PrimeField(2), g), ResourceError);
}

TEST(VerifyGrid, Examples) {
    const auto reports = verify_grid({{2, 2, 2}, {3, 1, 2}, {1, 3, 3}});
    ASSERT_EQ(reports.size(), 3u);
    for (const auto& r : reports) EXPECT_TRUE(r.pass());
    EXPECT_EQ(reports[0].enumerated, 56u);
    EXPECT_EQ(reports[0].irreducible, 35u);
    EXPECT_EQ(reports[1].irreducible, 2u);
    EXPECT_EQ(reports[2].irreducible, 39u);
    EXPECT_EQ(reports[2].necklace, 39);
}

}  // namespace
}  // namespace necklace
