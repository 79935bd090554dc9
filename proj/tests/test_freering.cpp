#include "dpinv/freering.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace dpinv;

namespace {

Word brute_least_rotation(const Word& w) {
    Word best = w;
    for (std::size_t s = 1; s < w.length(); ++s)
        best = std::min(best, w.rotated(s));
    return best;
}

unsigned euler_phi(unsigned m) {
    unsigned r = 0;
    for (unsigned k = 1; k <= m; ++k)
        if (std::gcd(k, m) == 1)
            ++r;
    return r;
}

// Number of binary necklaces of length l: (1/l) sum_{d | l} phi(d) 2^(l/d).
unsigned binary_necklaces(unsigned l) {
    unsigned s = 0;
    for (unsigned d = 1; d <= l; ++d)
        if (l % d == 0)
            s += euler_phi(d) * (1u << (l / d));
    return s / l;
}

} // namespace

TEST(Word, ParseAndPrint) {
    const auto ab = Alphabet::standard(2);
    const Word w = Word::parse("xyx", ab);
    EXPECT_EQ(w.length(), 3u);
    EXPECT_EQ(w.to_string(ab), "xyx");
    EXPECT_EQ(w.multidegree(2), (Multidegree{2, 1}));
}

TEST(Word, GradedLexOrder) {
    const auto ab = Alphabet::standard(2);
    EXPECT_LT(Word::parse("y", ab), Word::parse("xx", ab));
    EXPECT_LT(Word::parse("xy", ab), Word::parse("yx", ab));
}

TEST(Word, CyclicNormalFormMatchesBruteForce) {
    for (const auto& w : enumerate_words(3, 6))
        ASSERT_EQ(cyclic_normal_form(w), brute_least_rotation(w));
}

TEST(Word, CyclicNormalFormOfProductIsSymmetric) {
    const auto words = enumerate_words(2, 3);
    for (const auto& u : words)
        for (const auto& v : words)
            ASSERT_EQ(cyclic_normal_form(u * v), cyclic_normal_form(v * u));
}

TEST(Word, EmptyWordHasNoNormalForm) {
    EXPECT_THROW(cyclic_normal_form(Word{}), std::invalid_argument);
    EXPECT_THROW(primitive_decompose(Word{}), std::invalid_argument);
}

TEST(Word, PrimitiveDecomposition) {
    const auto ab = Alphabet::standard(2);
    auto d = primitive_decompose(Word::parse("xyxyxy", ab));
    EXPECT_EQ(d.root, Word::parse("xy", ab));
    EXPECT_EQ(d.exponent, 3u);
    d = primitive_decompose(Word::parse("xxy", ab));
    EXPECT_EQ(d.exponent, 1u);
    for (const auto& w : enumerate_words(2, 8)) {
        const auto p = primitive_decompose(w);
        ASSERT_EQ(p.root.power(p.exponent), w);
    }
}

TEST(Necklace, CountMatchesFormula) {
    const auto necklaces = enumerate_necklaces(2, 8);
    for (unsigned l = 1; l <= 8; ++l) {
        const auto n = std::count_if(necklaces.begin(), necklaces.end(),
                                     [&](const Necklace& k) { return k.representative().length() == l; });
        EXPECT_EQ(static_cast<unsigned>(n), binary_necklaces(l)) << "length " << l;
    }
}

TEST(Necklace, BoundedEnumerationIsDistinct) {
    const auto necklaces = enumerate_necklaces(Multidegree{2, 2});
    std::set<Necklace> seen(necklaces.begin(), necklaces.end());
    EXPECT_EQ(seen.size(), necklaces.size());
    // x, y, xx, xy, yy, xxy, xyy, xxyy, xyxy
    EXPECT_EQ(necklaces.size(), 9u);
}

TEST(Words, OfMultidegree) {
    EXPECT_EQ(words_of_multidegree({2, 1}).size(), 3u);
    ASSERT_EQ(words_of_multidegree({0, 0}).size(), 1u);
    EXPECT_TRUE(words_of_multidegree({0, 0})[0].empty());
}

TEST(FreePoly, ParseArithmetic) {
    const auto ab = Alphabet::standard(2);
    const FreePoly f = FreePoly::parse("2*x*y^2 - y*x", ab);
    EXPECT_EQ(f.coefficient(Word::parse("xyy", ab)), 2);
    EXPECT_EQ(f.coefficient(Word::parse("yx", ab)), -1);
    const FreePoly g = FreePoly::parse("x + y", ab);
    EXPECT_EQ((g * g).to_string(ab), FreePoly::parse("x*x + x*y + y*x + y*y", ab).to_string(ab));
    EXPECT_EQ(g.power(3).terms().size(), 8u);
    EXPECT_TRUE((f - f).is_zero());
}

TEST(FreePoly, ParseErrorsCarryPosition) {
    const auto ab = Alphabet::standard(2);
    try {
        FreePoly::parse("x + q", ab);
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 4u);
    }
    EXPECT_THROW(FreePoly::parse("x +", ab), ParseError);
    EXPECT_THROW(FreePoly::parse("x**y", ab), ParseError);
}
