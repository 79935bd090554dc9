#include "dpinv/gamma.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace dpinv;

namespace {

const Alphabet ab = Alphabet::standard(2);

Word w(const char* s) { return Word::parse(s, ab); }

std::vector<DPMonomial> basis_up_to(unsigned total) {
    std::vector<DPMonomial> out;
    for (const auto& d : multidegrees_of_total_at_most(2, total))
        for (const auto& m : dp_monomials_of_multidegree(d))
            out.push_back(m);
    return out;
}

} // namespace

TEST(Gamma, KnownTauProduct) {
    const auto x = DPMonomial::power(w("x"), 1);
    EXPECT_EQ(tau(x, x).to_string(ab), "[xx^(1)|lim] + 2*[x^(2)|lim]");
}

TEST(Gamma, TauNMatchesSymmetricTensors) {
    // For n >= total weight the truncation agrees with the limit, so n = 4
    // also covers the limit ring on these operands.
    const auto basis = basis_up_to(4);
    for (unsigned n = 1; n <= 4; ++n)
        for (const auto& u : basis)
            for (const auto& v : basis) {
                if (u.weight() > n || v.weight() > n)
                    continue;
                if (total_degree(u.multidegree(2)) + total_degree(v.multidegree(2)) > 4)
                    continue;
                ASSERT_EQ(tau_n(u, v, n), oracle::tau_n(u, v, n))
                    << "n=" << n << " u=" << u.to_string(ab) << " v=" << v.to_string(ab);
            }
}

TEST(Gamma, SigmaOfLimitProductIsTruncatedProduct) {
    const auto basis = basis_up_to(3);
    for (const auto& u : basis)
        for (const auto& v : basis)
            for (unsigned n = 1; n <= 3; ++n) {
                if (u.weight() > n || v.weight() > n)
                    continue;
                ASSERT_EQ(sigma_n(tau(u, v), n), tau_n(u, v, n));
            }
}

TEST(Gamma, DividedPowerProduct) {
    const auto x1 = DPMonomial::power(w("x"), 1);
    const auto x2 = DPMonomial::power(w("x"), 2);
    const GammaElement p = dp_product(x1, x2);
    EXPECT_EQ(p.coefficient(DPMonomial::power(w("x"), 3)), 3);
    EXPECT_TRUE(dp_product(x1, x2, Level::truncated(2)).is_zero());
}

TEST(Gamma, DpExpandCoefficients) {
    // (x + y)^(k) = sum_{a+b=k} x^(a) y^(b)
    const FreePoly f = FreePoly::parse("x + y", ab);
    const GammaElement e = dp_expand(f, 3);
    EXPECT_EQ(e.terms().size(), 4u);
    for (const auto& [m, c] : e.terms())
        EXPECT_EQ(c, 1);
    // (2x)^(2) = 4 x^(2)
    const GammaElement s = dp_expand(FreePoly::parse("2*x", ab), 2);
    EXPECT_EQ(s.coefficient(DPMonomial::power(w("x"), 2)), 4);
    // (x - y)^(2) = x^(2) - x^(1) y^(1) + y^(2)
    const GammaElement d = dp_expand(FreePoly::parse("x - y", ab), 2);
    EXPECT_EQ(d.coefficient(DPMonomial({{w("x"), 1}, {w("y"), 1}})), -1);
    EXPECT_THROW(dp_expand(FreePoly::parse("x + 1", ab), 2), std::invalid_argument);
}

TEST(Gamma, RhoDropsTopWeight) {
    GammaElement g(Level::truncated(2));
    g.add_term(DPMonomial::power(w("x"), 2), 1);
    g.add_term(DPMonomial::power(w("x"), 1), 5);
    const GammaElement r = rho_n(g);
    EXPECT_EQ(r.level(), Level::truncated(1));
    EXPECT_EQ(r.terms().size(), 1u);
}

TEST(Gamma, LevelChecks) {
    GammaElement g(Level::truncated(1));
    EXPECT_THROW(g.add_term(DPMonomial::power(w("x"), 2), 1), std::invalid_argument);
    GammaElement a(Level::truncated(2)), b(Level::limit());
    EXPECT_THROW(a += b, ContextMismatch);
}

TEST(Gamma, TextRoundTrip) {
    const GammaElement g = GammaElement::parse("3*[x^(2) xy^(1) | n=4] - [y^(1) | n=4]", ab);
    EXPECT_EQ(GammaElement::parse(g.to_string(ab), ab), g);
    EXPECT_THROW(GammaElement::parse("[x^(2)|n=1]", ab), ParseError);
    EXPECT_THROW(GammaElement::parse("[x^(1)", ab), ParseError);
}

TEST(Gamma, MonomialsOfMultidegree) {
    // x^(2), xx^(1)
    EXPECT_EQ(dp_monomials_of_multidegree({2, 0}).size(), 2u);
    EXPECT_EQ(dp_monomials_of_multidegree({2, 0}, Level::truncated(1)).size(), 1u);
    const auto id = dp_monomials_of_multidegree({0, 0});
    ASSERT_EQ(id.size(), 1u);
    EXPECT_TRUE(id[0].is_identity());
}

TEST(Gamma, ChiFormal) {
    const NormedTensor t = chi_formal(FreePoly::parse("x", ab), 2);
    // x^2 - x^(1) (x) x + x^(2) (x) 1
    EXPECT_EQ(t.terms().size(), 3u);
    EXPECT_THROW(chi_formal(FreePoly::parse("x + 1", ab), 2), std::invalid_argument);
    EXPECT_THROW(chi_formal(FreePoly{}, 2), std::invalid_argument);
}
