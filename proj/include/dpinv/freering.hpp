#pragma once

// Words over a finite ordered alphabet, necklaces, and noncommutative
// polynomials with integer coefficients.

#include "dpinv/integer.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dpinv {

using Letter = std::uint8_t;

/// Ordered set of single-character letter symbols. The order of the
/// characters is the letter order used by every canonical form.
class Alphabet {
public:
    explicit Alphabet(std::string symbols);

    /// The first `size` letters of "xyzwvu".
    static Alphabet standard(std::size_t size);

    std::size_t size() const noexcept { return symbols_.size(); }
    const std::string& symbols() const noexcept { return symbols_; }
    char symbol(Letter l) const { return symbols_.at(l); }
    std::optional<Letter> find(char c) const;

private:
    std::string symbols_;
};

class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    /// Letters written as consecutive symbols, e.g. "xyx".
    static Word parse(std::string_view text, const Alphabet& alphabet);
    static Word letter(Letter l) { return Word({l}); }

    std::span<const Letter> letters() const noexcept { return letters_; }
    std::size_t length() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }

    Word operator*(const Word& rhs) const;
    Word power(unsigned k) const;
    Word rotated(std::size_t shift) const;

    Multidegree multidegree(std::size_t alphabet_size) const;
    std::string to_string(const Alphabet& alphabet) const;

    bool operator==(const Word&) const = default;
    /// Graded lexicographic: shorter words first, then letter order.
    std::strong_ordering operator<=>(const Word& rhs) const;

private:
    std::vector<Letter> letters_;
};

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept;
};

/// Least rotation in letter order. Throws std::invalid_argument on the empty word.
Word cyclic_normal_form(const Word& w);

struct PrimitiveDecomposition {
    Word root;
    unsigned exponent = 1;
};

/// w = root^exponent with root not a proper power. Throws on the empty word.
PrimitiveDecomposition primitive_decompose(const Word& w);

/// Cyclic class of a nonempty word, keyed by its least rotation.
class Necklace {
public:
    explicit Necklace(const Word& w) : representative_(cyclic_normal_form(w)) {}
    const Word& representative() const noexcept { return representative_; }
    auto operator<=>(const Necklace&) const = default;
    bool operator==(const Necklace&) const = default;

private:
    Word representative_;
};

/// All nonempty words of length <= max_total_degree, graded lex order.
std::vector<Word> enumerate_words(std::size_t alphabet_size, unsigned max_total_degree);
/// All nonempty words whose multidegree is componentwise <= bound.
std::vector<Word> enumerate_words(const Multidegree& bound);
/// All words of exactly this multidegree (the empty word when d = 0).
std::vector<Word> words_of_multidegree(const Multidegree& d);

std::vector<Necklace> enumerate_necklaces(std::size_t alphabet_size, unsigned max_total_degree);
std::vector<Necklace> enumerate_necklaces(const Multidegree& bound);

/// All multidegrees e with e <= bound componentwise, in graded order.
std::vector<Multidegree> multidegrees_up_to(const Multidegree& bound);
/// All multidegrees over `alphabet_size` letters with total degree <= max_total,
/// ordered by total degree then reverse-lex (x-heavy first).
std::vector<Multidegree> multidegrees_of_total_at_most(std::size_t alphabet_size, unsigned max_total);

/// Element of the free ring Z<x_s>. The empty word carries the constant term.
class FreePoly {
public:
    using TermMap = std::map<Word, Integer>;

    FreePoly() = default;
    static FreePoly constant(const Integer& c);
    static FreePoly monomial(const Word& w, const Integer& c = 1);

    /// Integer coefficients, `*` for products, `^` on single letters,
    /// e.g. "2*x*y^2 - y*x". Whitespace is ignored.
    static FreePoly parse(std::string_view text, const Alphabet& alphabet);

    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Integer coefficient(const Word& w) const;
    Integer constant_term() const { return coefficient(Word{}); }
    /// Largest word length among the terms (0 for constants and zero).
    std::size_t degree() const;
    bool is_homogeneous() const;

    FreePoly& operator+=(const FreePoly& rhs);
    FreePoly& operator-=(const FreePoly& rhs);
    FreePoly& operator*=(const Integer& c);
    friend FreePoly operator+(FreePoly a, const FreePoly& b) { return a += b; }
    friend FreePoly operator-(FreePoly a, const FreePoly& b) { return a -= b; }
    friend FreePoly operator*(FreePoly a, const Integer& c) { return a *= c; }
    friend FreePoly operator*(const FreePoly& a, const FreePoly& b) { return freepoly_mul(a, b); }
    friend FreePoly freepoly_mul(const FreePoly& f, const FreePoly& g);

    FreePoly power(unsigned k) const;

    bool operator==(const FreePoly&) const = default;

    std::string to_string(const Alphabet& alphabet) const;

private:
    void add_term(const Word& w, const Integer& c);
    TermMap terms_;
};

FreePoly freepoly_mul(const FreePoly& f, const FreePoly& g);

} // namespace dpinv
