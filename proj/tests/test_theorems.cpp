#include "dpinv/theorems.hpp"

#include <gtest/gtest.h>

using namespace dpinv;

namespace {

const Alphabet ab = Alphabet::standard(2);

Word w(const char* s) { return Word::parse(s, ab); }

} // namespace

TEST(Abelianization, LevelOnePieces) {
    // Gamma_1(F) = F, whose abelianization has one monomial per multidegree.
    for (const auto& d : multidegrees_of_total_at_most(2, 4)) {
        if (total_degree(d) == 0)
            continue;
        const auto piece = abelianized_piece(1, d);
        EXPECT_EQ(piece.basis.size() - rank(piece.relations), 1u);
    }
    const auto piece = abelianized_piece(1, {1, 1});
    EXPECT_EQ(piece.basis.size(), 2u);
}

TEST(Abelianization, RelationsVanishUnderPi) {
    PiEvaluator ev(2);
    const Multidegree d{2, 1};
    const auto piece = abelianized_piece(2, d);
    for (std::size_t r = 0; r < piece.relations.rows(); ++r) {
        CommPoly image;
        for (std::size_t c = 0; c < piece.basis.size(); ++c) {
            const Rational& q = piece.relations(r, c);
            if (q == 0)
                continue;
            ASSERT_EQ(q.get_den(), 1);
            CommPoly term = ev.evaluate(piece.basis[c]);
            term *= q.get_num();
            image += term;
        }
        ASSERT_TRUE(image.is_zero()) << "relation row " << r;
    }
}

TEST(GradedIsomorphism, SmallPieces) {
    const RunOptions opts;
    for (const auto& d : std::vector<Multidegree>{{1, 0}, {2, 0}, {1, 1}, {2, 1}, {2, 2}}) {
        const Report r = verify_thm_2_2_2_piece(2, d, opts);
        EXPECT_TRUE(r.pass);
        EXPECT_EQ(r.lhs_rank, r.rhs_rank);
    }
    // tr(XY), tr X tr Y at n = 2
    EXPECT_EQ(verify_thm_2_2_2_piece(2, {1, 1}, opts).rhs_rank, 2u);
}

TEST(GradedIsomorphism, IntegralCheck) {
    RunOptions opts;
    opts.strict_z = true;
    const Report r = verify_thm_2_2_2_piece(2, {2, 1}, opts);
    EXPECT_TRUE(r.torsion_checked);
    EXPECT_TRUE(r.pass);
}

TEST(GradedIsomorphism, EmptyRange) { EXPECT_TRUE(verify_thm_2_2_2(2, 2, 0, RunOptions{}).empty()); }

TEST(Reduction, Examples) {
    const DPMonomial xy({{w("x"), 1}, {w("y"), 1}});
    EXPECT_EQ(tau_polynomial_to_string(reduce_to_single_generators(xy), ab), "x^(1) tau y^(1) - xy^(1)");
    const DPMonomial x2 = DPMonomial::power(w("x"), 2);
    EXPECT_EQ(tau_polynomial_to_string(reduce_to_single_generators(x2), ab), "x^(2)");
}

TEST(Reduction, RoundTripOverBasis) {
    for (const auto& d : multidegrees_of_total_at_most(2, 4))
        for (const auto& m : dp_monomials_of_multidegree(d)) {
            const auto p = reduce_to_single_generators(m);
            for (const auto& [word, c] : p)
                for (const auto& [mu, k] : word)
                    ASSERT_GT(k, 0u);
            ASSERT_EQ(evaluate_tau_polynomial(p), GammaElement::basis(m)) << m.to_string(ab);
        }
}

TEST(CayleyHamilton, VanishesOnSamples) {
    for (const char* f : {"x", "x*y", "x + y", "x + x*y"})
        for (unsigned n = 1; n <= 3; ++n) {
            const FreePoly p = FreePoly::parse(f, ab);
            EXPECT_TRUE(evaluate_chi(p, n).is_zero()) << f << " n=" << n;
            EXPECT_TRUE(verify_cayley_hamilton(p, n, ab).pass);
        }
}

TEST(CayleyHamilton, WrongLevelDoesNotVanish) {
    // chi_1 of a 2x2 matrix is X - tr(X), which is not zero.
    const MatrixPoly x = jn_eval(FreePoly::parse("x", ab), 2);
    const auto chi1 = chi_formal(FreePoly::parse("x", ab), 1);
    EXPECT_EQ(chi1.terms().size(), 2u);
    EXPECT_FALSE((x - MatrixPoly::identity(2).scale(x.trace())).is_zero());
}

TEST(Zubkov, OneLetter) {
    for (unsigned n = 1; n <= 2; ++n)
        for (unsigned d = 1; d <= 5; ++d) {
            const Report r = verify_zubkov_kernel(n, {d});
            EXPECT_TRUE(r.pass) << "n=" << n << " d=" << d;
            EXPECT_EQ(r.lhs_rank, r.rhs_rank);
            EXPECT_EQ(r.kernel_rank, 0u);
        }
}

TEST(TauAxioms, SmallRange) {
    const auto reports = verify_tau_axioms(2, 2, 2, RunOptions{});
    EXPECT_FALSE(reports.empty());
    EXPECT_TRUE(all_pass(reports));
}

TEST(PiMultiplicativity, LevelTwo) { EXPECT_TRUE(all_pass(verify_pi_multiplicativity(2, 2, 3, RunOptions{}))); }

TEST(Conjugation, DetectsNonInvariants) {
    const MatrixPoly x = generic_matrix(Letter{0}, 2);
    EXPECT_TRUE(conjugation_invariant({x.trace()}, 2, 1, 42));
    EXPECT_FALSE(conjugation_invariant({x(0, 0)}, 2, 1, 42));
}
