#pragma once

// Divided powers of the free ring: the limit ring P_S = (Gamma(F_S^+), tau)
// and its truncations Gamma_n(F_S).
//
// A standard basis element 1^(n-|a|) prod mu^(a_mu) is stored as the
// exponent map {mu -> a_mu} only; the 1-slot is implied by the ambient
// Level, so the same DPMonomial is valid in P_S and in every Gamma_n with
// n >= |a|.

#include "dpinv/freering.hpp"
#include "dpinv/integer.hpp"

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dpinv {

/// Ambient ring of a GammaElement: the limit ring or the truncation Gamma_n.
class Level {
public:
    static Level limit() { return Level(); }
    static Level truncated(unsigned n) {
        Level l;
        l.n_ = n;
        return l;
    }

    bool is_limit() const noexcept { return !n_.has_value(); }
    unsigned n() const;
    /// Whether a monomial of this weight is a basis element here.
    bool admits(unsigned weight) const noexcept { return !n_ || weight <= *n_; }
    std::string to_string() const;

    bool operator==(const Level&) const = default;

private:
    std::optional<unsigned> n_;
};

class DPMonomial {
public:
    using Factor = std::pair<Word, unsigned>;

    DPMonomial() = default;
    /// Words must be distinct and nonempty; zero exponents are dropped.
    explicit DPMonomial(std::vector<Factor> factors);
    /// w^(k); the identity when k == 0.
    static DPMonomial power(const Word& w, unsigned k);

    std::span<const Factor> factors() const noexcept { return factors_; }
    bool is_identity() const noexcept { return factors_.empty(); }
    /// |a| = sum of exponents.
    unsigned weight() const noexcept { return weight_; }
    unsigned exponent(const Word& w) const;
    Multidegree multidegree(std::size_t alphabet_size) const;

    /// "x^(2) xy^(1)"; empty string for the identity.
    std::string to_string(const Alphabet& alphabet) const;

    bool operator==(const DPMonomial& rhs) const { return factors_ == rhs.factors_; }
    /// Weight first, then the factor lists lexicographically.
    std::strong_ordering operator<=>(const DPMonomial& rhs) const;

private:
    std::vector<Factor> factors_;
    unsigned weight_ = 0;
};

struct DPMonomialHash {
    std::size_t operator()(const DPMonomial& m) const noexcept;
};

/// Integer combination of standard basis monomials in a fixed Level.
class GammaElement {
public:
    using TermMap = std::map<DPMonomial, Integer>;

    explicit GammaElement(Level level = Level::limit()) : level_(level) {}
    static GammaElement basis(const DPMonomial& m, Level level = Level::limit());
    static GammaElement identity(Level level = Level::limit());

    Level level() const noexcept { return level_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Integer coefficient(const DPMonomial& m) const;

    /// Throws std::invalid_argument if the monomial is not a basis element at this level.
    void add_term(const DPMonomial& m, const Integer& c);

    GammaElement& operator+=(const GammaElement& rhs);
    GammaElement& operator-=(const GammaElement& rhs);
    GammaElement& operator*=(const Integer& c);
    friend GammaElement operator+(GammaElement a, const GammaElement& b) { return a += b; }
    friend GammaElement operator-(GammaElement a, const GammaElement& b) { return a -= b; }
    friend GammaElement operator*(GammaElement a, const Integer& c) { return a *= c; }

    bool operator==(const GammaElement&) const = default;

    /// Canonical text form, e.g. "[xx^(1)|lim] + 2*[x^(2)|lim]".
    std::string to_string(const Alphabet& alphabet) const;
    /// Inverse of to_string; also accepts spaces, e.g. "3*[x^(2) xy^(1) | n=4] - [y^(1) | n=4]".
    static GammaElement parse(std::string_view text, const Alphabet& alphabet);

private:
    void check_level(const GammaElement& rhs) const;

    Level level_;
    TermMap terms_;
};

/// Standard basis monomials of multidegree d admitted by the level, sorted.
/// d = 0 gives the identity alone.
std::vector<DPMonomial> dp_monomials_of_multidegree(const Multidegree& d, Level level = Level::limit());

/// Product in the commutative divided-power algebra: shared words merge as
/// mu^(i) mu^(j) = C(i+j, i) mu^(i+j). In a truncated level, terms of weight
/// above n are dropped.
GammaElement dp_product(const DPMonomial& u, const DPMonomial& v, Level level = Level::limit());
GammaElement dp_product(const GammaElement& f, const GammaElement& g);

/// The tau product of P_S, summed over margin matrices.
GammaElement tau(const DPMonomial& u, const DPMonomial& v);
/// sigma_n(tau(u, v)). Both operands must have weight <= n.
GammaElement tau_n(const DPMonomial& u, const DPMonomial& v, unsigned n);
/// Bilinear extension; uses tau in the limit and tau_n at level n.
GammaElement tau(const GammaElement& f, const GammaElement& g);

/// Projection P_S -> Gamma_n: drops every term of weight > n.
GammaElement sigma_n(const GammaElement& g, unsigned n);
/// Gamma_n -> Gamma_{n-1}: drops the weight-n terms.
GammaElement rho_n(const GammaElement& g);

/// f^(k) expanded over the words of f, as an element of P_S.
/// Throws std::invalid_argument if f has a nonzero constant term.
GammaElement dp_expand(const FreePoly& f, unsigned k);

/// Canonical representative used for left tensor factors modulo commutators:
/// a single-word monomial mu^(i) is replaced by its least rotation.
DPMonomial abelianized_representative(const DPMonomial& m);

/// Elements of Gamma_n(F_S)^ab (x) F_S, keyed by (left monomial, right word).
class NormedTensor {
public:
    using Key = std::pair<DPMonomial, Word>;

    explicit NormedTensor(unsigned n) : n_(n) {}
    unsigned level() const noexcept { return n_; }
    const std::map<Key, Integer>& terms() const noexcept { return terms_; }
    /// Left factor is replaced by abelianized_representative.
    void add_term(const DPMonomial& left, const Word& right, const Integer& c);

    /// Terms such as "-[x^(1)|n=2]*x"; the word part is omitted when it is 1.
    std::string to_string(const Alphabet& alphabet) const;

private:
    unsigned n_;
    std::map<Key, Integer> terms_;
};

/// f^n + sum_{i=1..n} (-1)^i f^(i) (x) f^(n-i).
/// Throws std::invalid_argument if f has a constant term or is zero.
NormedTensor chi_formal(const FreePoly& f, unsigned n);

} // namespace dpinv
