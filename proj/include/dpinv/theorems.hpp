#pragma once

// Degree-bounded verification of the structure theorems relating the
// divided-power algebra of the free ring to matrix invariants.

#include "dpinv/exactla.hpp"
#include "dpinv/freering.hpp"
#include "dpinv/gamma.hpp"
#include "dpinv/invariants.hpp"
#include "dpinv/report.hpp"

#include <map>
#include <string>
#include <vector>

namespace dpinv {

/// Multidegree-d piece of Gamma_n(F_S): standard basis and the commutator
/// relations a tau_n (u tau_n v - v tau_n u), one row per relation.
struct AbelianizedPiece {
    std::vector<DPMonomial> basis;
    ExactMatrix relations;
};

AbelianizedPiece abelianized_piece(unsigned n, const Multidegree& d);

/// Compares the abelianized piece of Gamma_n(F_S) with the invariant piece
/// C_S(n)_d: lhs = rank of the quotient, rhs = rank of the invariants,
/// kernel = rank of ker pi_n on the piece. Also checks that the commutator
/// relations map to zero and that the image lies in the invariant span,
/// plus a seeded random conjugation of the invariants.
Report verify_thm_2_2_2_piece(unsigned n, const Multidegree& d, const RunOptions& options);
/// All pieces with 1 <= |d| <= max_total_degree over `letters` letters.
std::vector<Report> verify_thm_2_2_2(unsigned n, std::size_t letters, unsigned max_total_degree,
                                     const RunOptions& options);

/// Ordered tau-products of single-word divided powers, e.g. x^(1) tau y^(1).
using TauWord = std::vector<std::pair<Word, unsigned>>;
using TauPolynomial = std::map<TauWord, Integer>;

/// Rewrites a monomial of P_S as a tau-polynomial in the generators mu^(i).
TauPolynomial reduce_to_single_generators(const DPMonomial& g);
/// Multiplies a tau-polynomial out in P_S.
GammaElement evaluate_tau_polynomial(const TauPolynomial& p);
std::string tau_polynomial_to_string(const TauPolynomial& p, const Alphabet& alphabet);

/// sum_{alpha in P_{ni,n}} c_alpha a^(alpha_1) tau ... tau a^(alpha_h).
GammaElement plethysm_closed_form(const FreePoly& a, unsigned n, unsigned i);

/// dp_expand(a^n, i) against rho_a(e_i o p_n) and against the closed form.
/// lhs/rhs count terms of the two sides, kernel counts terms of the differences.
Report verify_plethysm_case(const FreePoly& a, unsigned n, unsigned i, const Alphabet& alphabet);
std::vector<Report> verify_plethysm(const std::vector<FreePoly>& as, const std::vector<unsigned>& ns,
                                    const std::vector<unsigned>& is, const Alphabet& alphabet,
                                    const RunOptions& options);

/// chi_n(f) under pi_n (x) j_n; returns the resulting matrix.
MatrixPoly evaluate_chi(const FreePoly& f, unsigned n);
/// lhs = tensor terms of chi_n(f), rhs = 0, kernel = nonzero entries of the
/// evaluated matrix; passes iff that matrix is zero.
Report verify_cayley_hamilton(const FreePoly& f, unsigned n, const Alphabet& alphabet);

/// In the multidegree-d piece of P_S^ab: lhs = rank of ker sigma_n^ab,
/// rhs = rank of the ideal generated by f^(k), k > n; kernel counts ideal
/// directions outside ker sigma_n^ab (expected 0).
Report verify_zubkov_kernel(unsigned n, const Multidegree& d);
std::vector<Report> verify_zubkov(unsigned n, std::size_t letters, unsigned max_total_degree,
                                  const RunOptions& options);

/// Associativity and identity of tau in P_S (n = 0 in the report) and the
/// homomorphism property of sigma_n for n = 1..max_n, per multidegree
/// 1 <= |D| <= max_total_degree. lhs = cases, rhs = passes, kernel = failures.
std::vector<Report> verify_tau_axioms(std::size_t letters, unsigned max_total_degree, unsigned max_n,
                                      const RunOptions& options);

/// pi_n(u tau_n v) = pi_n(u) pi_n(v) over all basis pairs with
/// deg u + deg v = D, 1 <= |D| <= max_total_degree.
std::vector<Report> verify_pi_multiplicativity(unsigned n, std::size_t letters, unsigned max_total_degree,
                                               const RunOptions& options);

/// Random simultaneous conjugation by a seeded unimodular matrix; returns
/// true if every polynomial takes equal values before and after.
bool conjugation_invariant(const std::vector<CommPoly>& invariants, unsigned n, std::size_t letters,
                           std::uint64_t seed);

} // namespace dpinv
