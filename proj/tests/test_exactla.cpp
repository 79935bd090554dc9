#include "dpinv/exactla.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace dpinv;

namespace {

std::vector<std::vector<Integer>> random_rows(std::mt19937_64& rng, std::size_t r, std::size_t c, int span) {
    std::vector<std::vector<Integer>> rows(r, std::vector<Integer>(c));
    for (auto& row : rows)
        for (auto& v : row)
            v = static_cast<int>(rng() % static_cast<unsigned>(2 * span + 1)) - span;
    return rows;
}

} // namespace

TEST(ExactLA, SmithOfDiagonal) {
    const auto m = ExactMatrix::from_integer_rows({{4, 0}, {0, 2}});
    EXPECT_EQ(smith_normal_form(m), (std::vector<Integer>{2, 4}));
    const auto g = ExactMatrix::from_integer_rows({{2, 0}, {0, 3}});
    EXPECT_EQ(smith_normal_form(g), (std::vector<Integer>{1, 6}));
}

TEST(ExactLA, SmithProductIsDeterminant) {
    std::mt19937_64 rng(19);
    for (std::size_t n = 1; n <= 4; ++n)
        for (int trial = 0; trial < 20; ++trial) {
            const auto rows = random_rows(rng, n, n, 6);
            const Integer det = oracle::int_det(rows);
            const auto m = ExactMatrix::from_integer_rows(rows);
            const auto d = smith_normal_form(m);
            EXPECT_EQ(determinant(m), Rational(det));
            if (det == 0) {
                EXPECT_LT(d.size(), n);
                continue;
            }
            ASSERT_EQ(d.size(), n);
            Integer prod = 1;
            for (std::size_t k = 0; k < n; ++k) {
                prod *= d[k];
                if (k > 0) {
                    EXPECT_TRUE(mpz_divisible_p(d[k].get_mpz_t(), d[k - 1].get_mpz_t()));
                }
            }
            EXPECT_EQ(prod, abs(det));
        }
}

TEST(ExactLA, RankUnderRowOperations) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        auto rows = random_rows(rng, 3, 5, 3);
        // append dependent combinations
        std::vector<Integer> extra(5);
        for (std::size_t c = 0; c < 5; ++c)
            extra[c] = 2 * rows[0][c] - 3 * rows[2][c];
        const std::size_t base = rank(ExactMatrix::from_integer_rows(rows));
        rows.push_back(extra);
        EXPECT_EQ(rank(ExactMatrix::from_integer_rows(rows)), base);
        EchelonBasis e(5);
        for (const auto& r : rows)
            e.add(r);
        EXPECT_EQ(e.rank(), base);
        EXPECT_TRUE(e.contains(extra));
    }
}

TEST(ExactLA, InSpan) {
    const std::vector<std::vector<Rational>> vs{{1, 0, 1}, {0, 2, 2}};
    auto c = in_span(vs, {2, 1, 3});
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ((*c)[0], 2);
    EXPECT_EQ((*c)[1], Rational(1, 2));
    EXPECT_FALSE(in_span(vs, {0, 0, 1}).has_value());
    EXPECT_TRUE(in_span({}, {0, 0}).has_value());
    EXPECT_THROW(in_span(vs, {1, 2}), std::invalid_argument);
}

TEST(ExactLA, Errors) {
    EXPECT_THROW(ExactMatrix::from_rows({{1, 2}, {3}}), std::invalid_argument);
    ExactMatrix m(1, 1);
    m(0, 0) = Rational(1, 2);
    EXPECT_THROW(smith_normal_form(m), std::invalid_argument);
}
