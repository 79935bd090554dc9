#include "dpinv/symfunc.hpp"
#include "dpinv/theorems.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace dpinv;

namespace {

const Alphabet ab = Alphabet::standard(2);

oracle::Explicit expand(const SymPoly& f) {
    oracle::Explicit out;
    for (const auto& [p, c] : f.terms()) {
        oracle::Explicit term = oracle::explicit_one(f.nvars());
        if (f.basis() == SymBasis::elementary)
            for (unsigned part : p.parts())
                term = oracle::explicit_mul(term, oracle::explicit_e(part, f.nvars()));
        else
            term = oracle::explicit_m(p.parts(), f.nvars());
        oracle::explicit_add(out, term, c);
    }
    return out;
}

} // namespace

TEST(Partition, Basics) {
    const Partition p({1, 3, 0, 1});
    EXPECT_EQ(p.to_string(), "[3,1,1]");
    EXPECT_EQ(p.weight(), 5u);
    EXPECT_EQ(p.conjugate().to_string(), "[3,1,1]");
    EXPECT_EQ(Partition({4, 2}).conjugate().to_string(), "[2,2,1,1]");
    EXPECT_EQ(partitions_of(6, 6, 6).size(), 11u);
    EXPECT_EQ(partitions_of(6, 2, 6).size(), 4u);
}

TEST(SymPoly, MonomialToElementaryMatchesExplicitPolynomials) {
    for (unsigned nvars = 1; nvars <= 6; ++nvars)
        for (unsigned w = 0; w <= 6; ++w)
            for (const auto& lambda : partitions_of(w, nvars, w)) {
                const SymPoly e = m_to_e(lambda, nvars);
                ASSERT_EQ(e.basis(), SymBasis::elementary);
                ASSERT_EQ(expand(e), oracle::explicit_m(lambda.parts(), nvars))
                    << lambda.to_string() << " in " << nvars << " variables";
            }
}

TEST(SymPoly, RoundTrip) {
    for (unsigned nvars = 1; nvars <= 5; ++nvars)
        for (unsigned w = 1; w <= 5; ++w)
            for (const auto& lambda : partitions_of(w, nvars, w)) {
                SymPoly e(SymBasis::elementary, nvars);
                e.add_term(lambda.conjugate(), 1);
                const SymPoly m = to_monomial(e);
                ASSERT_EQ(expand(m), expand(e));
                ASSERT_EQ(to_elementary(m), e);
            }
}

TEST(SymPoly, ParseAndPrint) {
    EXPECT_EQ(to_elementary(SymPoly::parse("m[2]")).to_string(), "-2*e[2] + e[1,1]");
    const SymPoly p = SymPoly::parse("m[3,1,1]@5");
    EXPECT_EQ(p.nvars(), 5u);
    EXPECT_THROW(SymPoly::parse("m[3,"), ParseError);
    EXPECT_THROW(m_to_e(Partition({1, 1, 1}), 2), std::invalid_argument);
}

TEST(SymPoly, VanishingTermsDropped) {
    SymPoly e(SymBasis::elementary, 2);
    e.add_term(Partition({3}), 1);
    EXPECT_TRUE(e.is_zero());
}

TEST(Plethysm, MatchesExplicitSubstitution) {
    for (unsigned n = 1; n <= 3; ++n)
        for (unsigned i = 1; i * n <= 6; ++i) {
            const unsigned nvars = std::max(n * i, 3u);
            // e_i(x_1^n, ..., x_N^n): subsets of size i with exponent n
            oracle::Explicit expected;
            for (const auto& [mask, c] : oracle::explicit_e(i, nvars)) {
                auto e = mask;
                for (auto& v : e)
                    v *= n;
                expected[e] += c;
            }
            ASSERT_EQ(expand(plethysm_e_p(i, n, nvars)), expected) << "i=" << i << " n=" << n;
        }
    EXPECT_THROW(plethysm_e_p(2, 2, 3), std::invalid_argument);
}

TEST(Plethysm, StableInNumberOfVariables) {
    // Beyond n*i variables the e-basis expression stops changing.
    EXPECT_EQ(plethysm_e_p(2, 2, 4).terms(), plethysm_e_p(2, 2, 6).terms());
    // e_2(x^2) = e_2^2 - 2 e_1 e_3 + 2 e_4
    EXPECT_EQ(plethysm_e_p(2, 2, 4).to_string(), "2*e[4] - 2*e[3,1] + e[2,2]");
}

TEST(Plethysm, CAlpha) {
    EXPECT_EQ(c_alpha(Partition({2}), 2), -2);
    EXPECT_EQ(c_alpha(Partition({1, 1}), 2), 1);
    EXPECT_EQ(c_alpha(Partition({3}), 2), 0);
    EXPECT_EQ(c_alpha(Partition({1, 1, 1}), 2), 0);
}

TEST(Plethysm, HeadIdentity) {
    for (const char* a : {"x", "y", "xy", "x + y", "x*y - y*x"})
        for (unsigned n = 1; n <= 3; ++n)
            for (unsigned i = 1; i <= 2; ++i) {
                const FreePoly f = FreePoly::parse(a, ab);
                const GammaElement lhs = dp_expand(f.power(n), i);
                ASSERT_EQ(lhs, rho_a_substitute(plethysm_e_p(i, n, n * i), f)) << a << " n=" << n << " i=" << i;
                ASSERT_EQ(lhs, plethysm_closed_form(f, n, i)) << a << " n=" << n << " i=" << i;
            }
}

TEST(Plethysm, RhoSubstitution) {
    const FreePoly x = FreePoly::parse("x", ab);
    SymPoly e(SymBasis::elementary, 2);
    e.add_term(Partition({1, 1}), 1);
    // e_1^2 -> x^(1) tau x^(1)
    EXPECT_EQ(rho_a_substitute(e, x).to_string(ab), "[xx^(1)|lim] + 2*[x^(2)|lim]");
    EXPECT_THROW(rho_a_substitute(SymPoly::parse("m[2]"), x), std::invalid_argument);
}
