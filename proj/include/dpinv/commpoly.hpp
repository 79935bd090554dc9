#pragma once

// Sparse commutative polynomials over Z in the matrix-entry variables
// x[s][i][j] and auxiliary parameters t_k.

#include "dpinv/freering.hpp"
#include "dpinv/integer.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dpinv {

/// Packed variable id. Auxiliary parameters sort before matrix entries,
/// matrix entries sort by (letter, row, column).
class Variable {
public:
    static Variable aux(unsigned k);
    /// Entry (row, col) of the generic matrix of letter s; 0-based indices.
    static Variable entry(Letter s, unsigned row, unsigned col);
    static Variable from_code(std::uint32_t code) { return Variable(code); }

    std::uint32_t code() const noexcept { return code_; }
    bool is_aux() const noexcept { return code_ < kEntryBit; }
    unsigned aux_index() const noexcept { return code_; }
    Letter letter() const noexcept { return static_cast<Letter>((code_ >> 16) & 0xff); }
    unsigned row() const noexcept { return (code_ >> 8) & 0xff; }
    unsigned col() const noexcept { return code_ & 0xff; }

    /// "t0" or "x[x][1][2]" (1-based indices in text).
    std::string name(const Alphabet& alphabet) const;

    auto operator<=>(const Variable&) const = default;

private:
    static constexpr std::uint32_t kEntryBit = 1u << 24;
    explicit Variable(std::uint32_t code) : code_(code) {}
    std::uint32_t code_;
};

class Monomial {
public:
    using Power = std::pair<std::uint32_t, std::uint32_t>; // (variable code, exponent)

    Monomial() = default;
    static Monomial variable(Variable v, std::uint32_t exponent = 1);
    /// Powers must have strictly increasing codes and positive exponents.
    static Monomial from_powers(std::vector<Power> powers);

    std::span<const Power> powers() const noexcept { return powers_; }
    std::uint32_t degree() const noexcept { return degree_; }
    bool is_one() const noexcept { return powers_.empty(); }
    std::uint32_t exponent(Variable v) const;

    Monomial operator*(const Monomial& rhs) const;
    /// Splits into (auxiliary part, matrix-entry part).
    std::pair<Monomial, Monomial> split_aux() const;

    bool operator==(const Monomial& rhs) const { return powers_ == rhs.powers_; }
    /// Graded reverse lexicographic; earlier variables are larger.
    std::strong_ordering operator<=>(const Monomial& rhs) const;

    std::string to_string(const Alphabet& alphabet) const;

private:
    std::vector<Power> powers_;
    std::uint32_t degree_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept;
};

class CommPoly {
public:
    using Term = std::pair<Monomial, Integer>;

    CommPoly() = default;
    CommPoly(const Integer& c); // NOLINT: integers embed as constants
    CommPoly(int c) : CommPoly(Integer(c)) {} // NOLINT
    static CommPoly variable(Variable v);
    static CommPoly monomial(const Monomial& m, const Integer& c = 1);
    /// Terms may repeat monomials and carry zeros; they are normalized.
    static CommPoly from_terms(std::vector<Term> terms);

    /// Terms in decreasing monomial order, no zero coefficients.
    std::span<const Term> terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    Integer coefficient(const Monomial& m) const;
    std::uint32_t total_degree() const;

    CommPoly& operator+=(const CommPoly& rhs);
    CommPoly& operator-=(const CommPoly& rhs);
    CommPoly& operator*=(const CommPoly& rhs);
    CommPoly& operator*=(const Integer& c);
    friend CommPoly operator+(CommPoly a, const CommPoly& b) { return a += b; }
    friend CommPoly operator-(CommPoly a, const CommPoly& b) { return a -= b; }
    friend CommPoly operator-(CommPoly a) { return a *= Integer(-1); }
    friend CommPoly operator*(const CommPoly& a, const CommPoly& b);
    CommPoly pow(unsigned k) const;

    bool operator==(const CommPoly&) const = default;

    Integer evaluate(const std::function<Integer(Variable)>& value) const;
    /// Multidegree in the letters of the matrix-entry variables, or nothing
    /// if the terms disagree.
    std::optional<Multidegree> letter_multidegree(std::size_t alphabet_size) const;

    /// e.g. "x[x][1][1] + x[x][2][2]".
    std::string to_string(const Alphabet& alphabet) const;

private:
    std::vector<Term> terms_;
};

CommPoly operator*(const CommPoly& a, const CommPoly& b);

} // namespace dpinv
