#include "dpinv/invariants.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace dpinv;

namespace {

const Alphabet ab = Alphabet::standard(2);

IntMatrix random_matrix(std::mt19937_64& rng, unsigned n, int lo, int hi) {
    IntMatrix m(n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            m(i, j) = lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
    return m;
}

/// Evaluates a polynomial at integer matrices given per letter.
Integer at(const CommPoly& p, const std::vector<IntMatrix>& values) {
    return p.evaluate([&](Variable v) { return values.at(v.letter())(v.row(), v.col()); });
}

} // namespace

TEST(CharCoeffs, BerkowitzAgreesWithCofactorExpansion) {
    std::mt19937_64 rng(7);
    for (unsigned n = 1; n <= 4; ++n)
        for (int trial = 0; trial < 30; ++trial) {
            const IntMatrix b = random_matrix(rng, n, -5, 5);
            ASSERT_EQ(characteristic_coefficients(b), oracle::char_coeffs(b));
        }
}

TEST(CharCoeffs, GenericMatrixSpecializes) {
    std::mt19937_64 rng(11);
    for (unsigned n = 1; n <= 3; ++n) {
        const auto coeffs = charpoly_coeffs(generic_matrix(Letter{0}, n));
        for (int trial = 0; trial < 5; ++trial) {
            const IntMatrix b = random_matrix(rng, n, -4, 4);
            const auto expected = oracle::char_coeffs(b);
            for (unsigned i = 0; i <= n; ++i)
                ASSERT_EQ(at(coeffs[i], {b}), expected[i]);
        }
    }
}

TEST(CharCoeffs, Identity) {
    for (unsigned n = 1; n <= 5; ++n) {
        const auto e = characteristic_coefficients(IntMatrix::identity(n));
        for (unsigned i = 0; i <= n; ++i)
            EXPECT_EQ(e[i], binomial(n, i));
    }
}

TEST(Jn, CommutatorIsTraceless) {
    const MatrixPoly c = jn_eval(FreePoly::parse("x*y - y*x", ab), 2);
    EXPECT_FALSE(c.is_zero());
    EXPECT_TRUE(c.trace().is_zero());
    EXPECT_EQ(c(0, 1), generic_matrix(Letter{0}, 2)(0, 0) * generic_matrix(Letter{1}, 2)(0, 1) +
                           generic_matrix(Letter{0}, 2)(0, 1) * generic_matrix(Letter{1}, 2)(1, 1) -
                           generic_matrix(Letter{1}, 2)(0, 0) * generic_matrix(Letter{0}, 2)(0, 1) -
                           generic_matrix(Letter{1}, 2)(0, 1) * generic_matrix(Letter{0}, 2)(1, 1));
    EXPECT_THROW(generic_matrix('q', ab, 2), std::invalid_argument);
}

TEST(Multidet, MixedCoefficientBruteForce) {
    // det(t0 I + t1 A + t2 B) for 2x2: the t1 t2 coefficient is
    // a11 b22 + a22 b11 - a12 b21 - a21 b12.
    std::mt19937_64 rng(3);
    const std::vector<MatrixPoly> gens{generic_matrix(Letter{0}, 2), generic_matrix(Letter{1}, 2)};
    const unsigned ex[] = {1, 1};
    const CommPoly mixed = multidet_coeff(gens, ex, 2);
    for (int trial = 0; trial < 10; ++trial) {
        const IntMatrix a = random_matrix(rng, 2, -6, 6), b = random_matrix(rng, 2, -6, 6);
        const Integer expected = a(0, 0) * b(1, 1) + a(1, 1) * b(0, 0) - a(0, 1) * b(1, 0) - a(1, 0) * b(0, 1);
        ASSERT_EQ(at(mixed, {a, b}), expected);
    }
    const unsigned over[] = {2, 1};
    EXPECT_TRUE(multidet_coeff(gens, over, 2).is_zero());
}

TEST(Pi, KnownImages) {
    const GammaElement g = GammaElement::parse("[x^(1)|n=2]", ab);
    EXPECT_EQ(pi_n_eval(g, 2).to_string(ab), "x[x][1][1] + x[x][2][2]");
    // pi_2(x tau_2 x) = tr(X)^2 = tr(X^2) + 2 e_2(X)
    const MatrixPoly x = generic_matrix(Letter{0}, 2);
    const auto e = charpoly_coeffs(x);
    const CommPoly lhs = pi_n_eval(tau(g, g), 2);
    EXPECT_EQ(lhs, e[1] * e[1]);
    EXPECT_EQ(lhs, (x * x).trace() + e[2] * CommPoly(2));
    EXPECT_THROW(pi_n_eval(GammaElement::parse("[x^(1)|lim]", ab), 2), ContextMismatch);
}

TEST(Pi, WordPowersGiveCharCoefficients) {
    PiEvaluator ev(3);
    const Word xy = Word::parse("xy", ab);
    for (unsigned i = 1; i <= 3; ++i)
        EXPECT_EQ(ev.evaluate(DPMonomial::power(xy, i)), charpoly_coeffs(jn_eval(FreePoly::monomial(xy), 3))[i]);
}

TEST(Invariants, RankAtDegreeTwoInOneLetter) {
    // tr(X)^2 and tr(X^2) span the degree-2 invariants of a 2x2 matrix.
    const auto span = invariant_span(2, {2});
    EXPECT_EQ(rank(coefficient_matrix(span)), 2u);
}

TEST(Invariants, CyclicInvarianceAndHomogeneity) {
    PiEvaluator ev(3);
    const Word xxy = Word::parse("xxy", ab), yxx = Word::parse("yxx", ab);
    for (unsigned i = 1; i <= 3; ++i) {
        EXPECT_EQ(ev.char_coeff(xxy, i), ev.char_coeff(yxx, i));
        EXPECT_EQ(ev.char_coeff(xxy, i).letter_multidegree(2), (Multidegree{2 * i, i}));
    }
}

TEST(Invariants, SurviveConjugation) {
    std::mt19937_64 rng(5);
    const auto span = invariant_span(2, {2, 1});
    ASSERT_FALSE(span.empty());
    // Conjugate by an explicit unimodular matrix and its inverse.
    IntMatrix g(2), gi(2);
    g(0, 0) = 2, g(0, 1) = 1, g(1, 0) = 1, g(1, 1) = 1;
    gi(0, 0) = 1, gi(0, 1) = -1, gi(1, 0) = -1, gi(1, 1) = 2;
    ASSERT_TRUE((g * gi) == IntMatrix::identity(2));
    for (int trial = 0; trial < 5; ++trial) {
        const IntMatrix a = random_matrix(rng, 2, -5, 5), b = random_matrix(rng, 2, -5, 5);
        const std::vector<IntMatrix> before{a, b}, after{g * a * gi, g * b * gi};
        for (const auto& p : span)
            ASSERT_EQ(at(p, before), at(p, after));
    }
}

TEST(Invariants, CovariantsIncludeWords) {
    const auto cov = covariant_span(2, {1, 0});
    // X itself and tr(X) I
    EXPECT_EQ(rank(coefficient_matrix(cov)), 2u);
}
