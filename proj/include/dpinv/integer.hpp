#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dpinv {

using Integer = mpz_class;
using Rational = mpq_class;

/// Componentwise letter counts, indexed by alphabet position.
using Multidegree = std::vector<unsigned>;

inline Integer binomial(unsigned n, unsigned k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// (e_1 + ... + e_r)! / (e_1! ... e_r!)
inline Integer multinomial(const std::vector<unsigned>& parts) {
    Integer r = 1;
    unsigned total = 0;
    for (unsigned p : parts) {
        total += p;
        r *= binomial(total, p);
    }
    return r;
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline std::size_t hash_integer(const Integer& z) {
    // only the low limb and the sign; enough to spread small coefficients
    const auto* rep = z.get_mpz_t();
    std::size_t h = static_cast<std::size_t>(rep->_mp_size);
    if (rep->_mp_size != 0)
        h ^= static_cast<std::size_t>(rep->_mp_d[0]) * 0x9e3779b97f4a7c15ULL;
    return h;
}

inline unsigned total_degree(const Multidegree& d) {
    unsigned s = 0;
    for (unsigned c : d)
        s += c;
    return s;
}

/// Error in textual input; `position` is a 0-based offset into the input.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& what)
        : std::runtime_error(what), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Operands living in different ambient rings (limit vs. level n, or two levels).
class ContextMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace dpinv
