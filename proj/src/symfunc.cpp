#include "dpinv/symfunc.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>

namespace dpinv {

Partition::Partition(std::vector<unsigned> parts) {
    std::erase(parts, 0u);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    parts_ = std::move(parts);
    for (unsigned p : parts_)
        weight_ += p;
}

Partition Partition::conjugate() const {
    std::vector<unsigned> out(largest(), 0);
    for (unsigned p : parts_)
        for (unsigned k = 0; k < p; ++k)
            ++out[k];
    return Partition(std::move(out));
}

std::strong_ordering Partition::operator<=>(const Partition& rhs) const {
    if (auto c = weight_ <=> rhs.weight_; c != 0)
        return c;
    // larger partitions first
    return rhs.parts_ <=> parts_;
}

std::string Partition::to_string() const {
    std::string s = "[";
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (k)
            s += ',';
        s += std::to_string(parts_[k]);
    }
    return s + "]";
}

std::vector<Partition> partitions_of(unsigned weight, unsigned max_length, unsigned max_part) {
    std::vector<Partition> out;
    std::vector<unsigned> cur;
    std::function<void(unsigned, unsigned)> rec = [&](unsigned remaining, unsigned cap) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        if (cur.size() == max_length)
            return;
        for (unsigned p = std::min(remaining, cap); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(weight, max_part);
    return out;
}

// ---------------------------------------------------------------- SymPoly

Integer SymPoly::coefficient(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Integer(0) : it->second;
}

bool SymPoly::vanishes(const Partition& p) const {
    return basis_ == SymBasis::elementary ? p.largest() > nvars_ : p.length() > nvars_;
}

void SymPoly::add_term(const Partition& p, const Integer& c) {
    if (c == 0 || vanishes(p))
        return;
    auto [it, inserted] = terms_.try_emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

SymPoly& SymPoly::operator+=(const SymPoly& rhs) {
    if (rhs.basis_ != basis_ || rhs.nvars_ != nvars_)
        throw ContextMismatch("symmetric polynomials in different bases or variable counts");
    for (const auto& [p, c] : rhs.terms_)
        add_term(p, c);
    return *this;
}

SymPoly& SymPoly::operator*=(const Integer& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [p, v] : terms_)
        v *= c;
    return *this;
}

std::string SymPoly::to_string() const {
    if (terms_.empty())
        return "0";
    const char tag = basis_ == SymBasis::elementary ? 'e' : 'm';
    std::string s;
    bool first = true;
    for (const auto& [p, c] : terms_) {
        Integer mag = abs(c);
        if (first)
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        first = false;
        if (mag != 1)
            s += mag.get_str() + "*";
        s += tag + p.to_string();
    }
    return s;
}

SymPoly SymPoly::parse(std::string_view text) {
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    auto read_number = [&]() -> unsigned {
        skip();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (start == pos)
            throw ParseError(pos, "expected a number");
        if (pos - start > 6)
            throw ParseError(start, "number too large");
        return static_cast<unsigned>(std::stoul(std::string(text.substr(start, pos - start))));
    };
    skip();
    if (pos >= text.size() || (text[pos] != 'e' && text[pos] != 'm'))
        throw ParseError(pos, "expected 'e' or 'm'");
    SymBasis basis = text[pos] == 'e' ? SymBasis::elementary : SymBasis::monomial;
    ++pos;
    skip();
    if (pos >= text.size() || text[pos] != '[')
        throw ParseError(pos, "expected '['");
    ++pos;
    std::vector<unsigned> parts;
    skip();
    if (pos < text.size() && text[pos] == ']') {
        ++pos;
    } else {
        while (true) {
            std::size_t at = pos;
            unsigned p = read_number();
            if (p == 0)
                throw ParseError(at, "partition parts must be positive");
            parts.push_back(p);
            skip();
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            if (pos < text.size() && text[pos] == ']') {
                ++pos;
                break;
            }
            throw ParseError(pos, "expected ',' or ']'");
        }
    }
    Partition alpha(parts);
    unsigned nvars = std::max<unsigned>(alpha.weight(), 1);
    skip();
    if (pos < text.size() && text[pos] == '@') {
        ++pos;
        std::size_t at = pos;
        nvars = read_number();
        if (nvars == 0)
            throw ParseError(at, "variable count must be positive");
    }
    skip();
    if (pos != text.size())
        throw ParseError(pos, "unexpected trailing input");
    SymPoly out(basis, nvars);
    out.add_term(alpha, 1);
    return out;
}

// ---------------------------------------------------------------- conversions

namespace {

/// Number of 0/1 matrices with row sums `rows` and column sums `cols`,
/// i.e. the coefficient of x^cols in e_rows.
Integer count_01(const std::vector<unsigned>& rows, std::vector<unsigned> cols) {
    std::map<std::pair<std::size_t, std::vector<unsigned>>, Integer> memo;
    std::function<Integer(std::size_t, std::vector<unsigned>)> rec = [&](std::size_t r,
                                                                          std::vector<unsigned> caps) -> Integer {
        std::sort(caps.begin(), caps.end(), std::greater<>());
        while (!caps.empty() && caps.back() == 0)
            caps.pop_back();
        if (r == rows.size())
            return caps.empty() ? 1 : 0;
        auto key = std::make_pair(r, caps);
        if (auto it = memo.find(key); it != memo.end())
            return it->second;
        // choose rows[r] distinct columns among those with remaining capacity
        Integer total = 0;
        std::vector<unsigned> next = caps;
        std::function<void(std::size_t, unsigned)> pick = [&](std::size_t from, unsigned left) {
            if (left == 0) {
                total += rec(r + 1, next);
                return;
            }
            for (std::size_t c = from; c + left <= next.size(); ++c) {
                --next[c];
                pick(c + 1, left - 1);
                ++next[c];
            }
        };
        pick(0, rows[r]);
        memo.emplace(std::move(key), total);
        return total;
    };
    return rec(0, std::move(cols));
}

/// e_mu in the m-basis of Lambda_nvars.
SymPoly elementary_in_monomials(const Partition& mu, unsigned nvars) {
    SymPoly out(SymBasis::monomial, nvars);
    for (const auto& nu : partitions_of(mu.weight(), nvars, static_cast<unsigned>(mu.length())))
        out.add_term(nu, count_01(mu.parts(), nu.parts()));
    return out;
}

} // namespace

SymPoly to_monomial(const SymPoly& f) {
    if (f.basis() == SymBasis::monomial)
        return f;
    SymPoly out(SymBasis::monomial, f.nvars());
    for (const auto& [mu, c] : f.terms()) {
        SymPoly part = elementary_in_monomials(mu, f.nvars());
        part *= c;
        out += part;
    }
    return out;
}

SymPoly to_elementary(const SymPoly& f) {
    if (f.basis() == SymBasis::elementary)
        return f;
    SymPoly rest = f;
    SymPoly out(SymBasis::elementary, f.nvars());
    while (!rest.is_zero()) {
        // the lexicographically greatest lambda is the leading monomial of e_{lambda'}
        auto lead = std::max_element(rest.terms().begin(), rest.terms().end(), [](const auto& a, const auto& b) {
            return a.first.parts() < b.first.parts();
        });
        const Partition lambda = lead->first;
        const Integer c = lead->second;
        const Partition mu = lambda.conjugate();
        out.add_term(mu, c);
        SymPoly sub = elementary_in_monomials(mu, f.nvars());
        sub *= -c;
        rest += sub;
    }
    return out;
}

SymPoly m_to_e(const Partition& alpha, unsigned nvars) {
    if (alpha.length() > nvars)
        throw std::invalid_argument("m" + alpha.to_string() + " has more parts than the " + std::to_string(nvars) +
                                    " available variables");
    SymPoly m(SymBasis::monomial, nvars);
    m.add_term(alpha, 1);
    return to_elementary(m);
}

SymPoly plethysm_e_p(unsigned i, unsigned n, unsigned nvars) {
    if (nvars < n * i)
        throw std::invalid_argument("plethysm e_" + std::to_string(i) + " o p_" + std::to_string(n) + " needs at least " +
                                    std::to_string(n * i) + " variables");
    // e_i is the sum of x_S over i-subsets S; substituting x_j -> x_j^n and
    // reading the coefficients of sorted exponent vectors gives the m-basis form
    SymPoly m(SymBasis::monomial, nvars);
    std::vector<unsigned> exps(nvars, 0);
    std::function<void(unsigned, unsigned)> subsets = [&](unsigned from, unsigned left) {
        if (left == 0) {
            if (std::is_sorted(exps.begin(), exps.end(), std::greater<>()))
                m.add_term(Partition(exps), 1);
            return;
        }
        for (unsigned j = from; j + left <= nvars; ++j) {
            exps[j] = n;
            subsets(j + 1, left - 1);
            exps[j] = 0;
        }
    };
    subsets(0, i);
    return to_elementary(m);
}

Integer c_alpha(const Partition& alpha, unsigned n) {
    if (n == 0 || alpha.weight() % n != 0 || alpha.length() > n)
        return 0;
    std::vector<unsigned> target(alpha.weight() / n, n);
    return m_to_e(alpha, n).coefficient(Partition(target));
}

GammaElement rho_a_substitute(const SymPoly& sym, const FreePoly& a) {
    if (sym.basis() != SymBasis::elementary)
        throw std::invalid_argument("rho_a needs a symmetric polynomial in the e-basis");
    std::map<unsigned, GammaElement> powers;
    auto power = [&](unsigned j) -> const GammaElement& {
        auto it = powers.find(j);
        if (it == powers.end())
            it = powers.emplace(j, dp_expand(a, j)).first;
        return it->second;
    };
    GammaElement out;
    for (const auto& [mu, c] : sym.terms()) {
        GammaElement term = GammaElement::identity();
        for (unsigned j : mu.parts())
            term = tau(term, power(j));
        out += term * c;
    }
    return out;
}

} // namespace dpinv
