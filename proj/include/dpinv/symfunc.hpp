#pragma once

// Symmetric polynomials in finitely many variables, in the monomial (m) and
// elementary (e) bases.

#include "dpinv/freering.hpp"
#include "dpinv/gamma.hpp"
#include "dpinv/integer.hpp"

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace dpinv {

class Partition {
public:
    Partition() = default;
    /// Parts are sorted into weakly decreasing order; zeros are dropped.
    explicit Partition(std::vector<unsigned> parts);

    const std::vector<unsigned>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    unsigned weight() const noexcept { return weight_; }
    unsigned largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
    Partition conjugate() const;

    bool operator==(const Partition& rhs) const { return parts_ == rhs.parts_; }
    /// Weight first; within a weight, lexicographically larger partitions come first.
    std::strong_ordering operator<=>(const Partition& rhs) const;

    /// "[3,1,1]"; "[]" for the empty partition.
    std::string to_string() const;

private:
    std::vector<unsigned> parts_;
    unsigned weight_ = 0;
};

/// Partitions of `weight` with at most `max_length` parts and parts at most `max_part`.
std::vector<Partition> partitions_of(unsigned weight, unsigned max_length, unsigned max_part);

enum class SymBasis { monomial, elementary };

/// Element of Lambda_nvars written in one basis.
class SymPoly {
public:
    SymPoly(SymBasis basis, unsigned nvars) : basis_(basis), nvars_(nvars) {}

    SymBasis basis() const noexcept { return basis_; }
    unsigned nvars() const noexcept { return nvars_; }
    const std::map<Partition, Integer>& terms() const noexcept { return terms_; }
    Integer coefficient(const Partition& p) const;
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Terms that vanish in Lambda_nvars are dropped.
    void add_term(const Partition& p, const Integer& c);
    SymPoly& operator+=(const SymPoly& rhs);
    SymPoly& operator*=(const Integer& c);
    bool operator==(const SymPoly&) const = default;

    /// e.g. "e[1,1] - 2*e[2]".
    std::string to_string() const;
    /// Parses "e[2,1]" or "m[3,1,1]", optionally followed by "@nvars".
    /// Without "@", nvars defaults to the weight of the partition.
    static SymPoly parse(std::string_view text);

private:
    bool vanishes(const Partition& p) const;

    SymBasis basis_;
    unsigned nvars_;
    std::map<Partition, Integer> terms_;
};

/// m_alpha in the e-basis of Lambda_nvars. Throws std::invalid_argument if
/// alpha has more than nvars parts.
SymPoly m_to_e(const Partition& alpha, unsigned nvars);
/// Converts any SymPoly to the e-basis (identity on e-basis input).
SymPoly to_elementary(const SymPoly& f);
/// Converts any SymPoly to the m-basis.
SymPoly to_monomial(const SymPoly& f);

/// e_i(x_1^n, ..., x_nvars^n) in the e-basis. Throws std::invalid_argument if nvars < n i.
SymPoly plethysm_e_p(unsigned i, unsigned n, unsigned nvars);

/// Coefficient of e_n^(|alpha|/n) in m_alpha over n variables; 0 when n does
/// not divide |alpha| or alpha has more than n parts.
Integer c_alpha(const Partition& alpha, unsigned n);

/// e_{j_1} ... e_{j_r} -> a^(j_1) tau ... tau a^(j_r) in P_S, extended linearly.
/// Throws std::invalid_argument unless sym is in the e-basis.
GammaElement rho_a_substitute(const SymPoly& sym, const FreePoly& a);

} // namespace dpinv
