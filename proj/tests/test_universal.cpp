#include "dpinv/universal.hpp"

#include <gtest/gtest.h>

using namespace dpinv;

TEST(Universal, SquareZeroAtLevelOne) {
    const auto p = Presentation::parse_json(R"({"generators": ["x"], "relations": ["x^2"]})");
    const UniversalRing ring = build_An(p, 1);
    ASSERT_EQ(ring.ideal.size(), 1u);
    EXPECT_EQ(ring.ideal[0].to_string(p.generators), "x[x][1][1]^2");
    const CommPoly x11 = CommPoly::variable(Variable::entry(Letter{0}, 0, 0));
    const auto cert = ideal_membership(ring.ideal, x11.pow(3), 1, 1, 3);
    ASSERT_TRUE(cert.has_value());
    EXPECT_TRUE(check_certificate(*cert, ring.ideal, x11.pow(3)));
    EXPECT_FALSE(ideal_membership(ring.ideal, x11, 1, 1, 3).has_value());
}

TEST(Universal, EntriesOfTheRelation) {
    const auto p = Presentation::parse_json(R"({"generators": ["x"], "relations": ["x^2 - 1"]})");
    const UniversalRing ring = build_An(p, 2);
    EXPECT_EQ(ring.ideal.size(), 4u);
    EXPECT_EQ(ring.images.size(), 1u);
    EXPECT_EQ(ring.images[0].order(), 2u);
}

TEST(Universal, RedundantRelationsDoNotChangeTheIdeal) {
    const auto one = Presentation::parse_json(R"({"generators": ["x", "y"], "relations": ["x*y - y*x"]})");
    const auto two =
        Presentation::parse_json(R"({"generators": ["x", "y"], "relations": ["x*y - y*x", "y*x - x*y"]})");
    const auto a = build_An(one, 2), b = build_An(two, 2);
    for (unsigned d = 1; d <= 4; ++d)
        EXPECT_EQ(ideal_piece_rank(a.ideal, 2, 2, d), ideal_piece_rank(b.ideal, 2, 2, d));
}

TEST(Universal, ImagesCheckLetters) {
    const auto p = Presentation::parse_json(R"({"generators": ["x"]})");
    EXPECT_THROW(jnr_image(p, 2, FreePoly::parse("y", Alphabet::standard(2))), std::invalid_argument);
    EXPECT_EQ(jnr_image(p, 2, FreePoly::parse("x", p.generators)), generic_matrix(Letter{0}, 2));
}

TEST(Universal, MalformedInput) {
    EXPECT_THROW(Presentation::parse_json("{\"generators\": [\"x\""), std::invalid_argument);
    EXPECT_THROW(Presentation::parse_json(R"({"relations": []})"), std::invalid_argument);
    EXPECT_THROW(Presentation::parse_json(R"({"generators": ["x"], "relations": ["x*z"]})"), std::invalid_argument);
}

TEST(Universal, BadCertificateRejected) {
    const auto p = Presentation::parse_json(R"({"generators": ["x"], "relations": ["x^2"]})");
    const UniversalRing ring = build_An(p, 1);
    const CommPoly x11 = CommPoly::variable(Variable::entry(Letter{0}, 0, 0));
    MembershipCertificate cert{{Rational(2), Monomial::variable(Variable::entry(Letter{0}, 0, 0)), 0}};
    EXPECT_FALSE(check_certificate(cert, ring.ideal, x11.pow(3)));
}
