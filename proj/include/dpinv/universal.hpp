#pragma once

// The universal commutative ring A_n(R) = A_S(n)/I of a finitely presented
// ring R, kept as the ambient polynomial ring plus generators of I.

#include "dpinv/commpoly.hpp"
#include "dpinv/freering.hpp"
#include "dpinv/invariants.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dpinv {

struct Presentation {
    Alphabet generators;
    std::vector<FreePoly> relations;

    /// {"generators": ["x","y"], "relations": ["x*y - y*x - 1"]}. Throws
    /// std::invalid_argument on malformed JSON or an undeclared generator.
    static Presentation parse_json(std::string_view text);
};

struct UniversalRing {
    unsigned n = 0;
    /// Generators of I: the nonzero entries of j_n(r), one relation after another.
    std::vector<CommPoly> ideal;
    /// j_n^R of each generator, understood modulo I.
    std::vector<MatrixPoly> images;
};

UniversalRing build_An(const Presentation& p, unsigned n);

/// j_n(f) as a representative modulo I; f must use the presentation's generators.
MatrixPoly jnr_image(const Presentation& p, unsigned n, const FreePoly& f);

/// target = sum coefficient * monomial * ideal[generator], over Q.
struct MembershipTerm {
    Rational coefficient;
    Monomial monomial;
    std::size_t generator;
};
using MembershipCertificate = std::vector<MembershipTerm>;

/// Searches the span of monomial * generator products of total degree at most
/// `max_degree` in the entry variables of `letters` generic n x n matrices.
std::optional<MembershipCertificate> ideal_membership(const std::vector<CommPoly>& ideal, const CommPoly& target,
                                                      unsigned n, std::size_t letters, unsigned max_degree);

/// Recomputes the combination (after clearing denominators) and compares with the target.
bool check_certificate(const MembershipCertificate& cert, const std::vector<CommPoly>& ideal, const CommPoly& target);

/// Rank of the span of monomial * generator products of total degree <= degree.
std::size_t ideal_piece_rank(const std::vector<CommPoly>& ideal, unsigned n, std::size_t letters, unsigned degree);

} // namespace dpinv
