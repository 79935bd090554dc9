#include "dpinv/commpoly.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace dpinv {

Variable Variable::aux(unsigned k) {
    if (k >= kEntryBit)
        throw std::out_of_range("auxiliary parameter index too large");
    return Variable(k);
}

Variable Variable::entry(Letter s, unsigned row, unsigned col) {
    if (row > 0xff || col > 0xff)
        throw std::out_of_range("matrix order too large");
    return Variable(kEntryBit | (std::uint32_t(s) << 16) | (row << 8) | col);
}

std::string Variable::name(const Alphabet& alphabet) const {
    if (is_aux())
        return "t" + std::to_string(aux_index());
    return std::string("x[") + alphabet.symbol(letter()) + "][" + std::to_string(row() + 1) + "][" +
           std::to_string(col() + 1) + "]";
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(Variable v, std::uint32_t exponent) {
    Monomial m;
    if (exponent > 0) {
        m.powers_.emplace_back(v.code(), exponent);
        m.degree_ = exponent;
    }
    return m;
}

Monomial Monomial::from_powers(std::vector<Power> powers) {
    Monomial m;
    for (std::size_t i = 0; i < powers.size(); ++i) {
        if (powers[i].second == 0 || (i > 0 && powers[i].first <= powers[i - 1].first))
            throw std::invalid_argument("malformed monomial powers");
        m.degree_ += powers[i].second;
    }
    m.powers_ = std::move(powers);
    return m;
}

std::uint32_t Monomial::exponent(Variable v) const {
    auto it = std::lower_bound(powers_.begin(), powers_.end(), Power{v.code(), 0});
    return (it != powers_.end() && it->first == v.code()) ? it->second : 0;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
    Monomial out;
    out.powers_.reserve(powers_.size() + rhs.powers_.size());
    auto a = powers_.begin(), b = rhs.powers_.begin();
    while (a != powers_.end() && b != rhs.powers_.end()) {
        if (a->first < b->first)
            out.powers_.push_back(*a++);
        else if (b->first < a->first)
            out.powers_.push_back(*b++);
        else {
            out.powers_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    out.powers_.insert(out.powers_.end(), a, powers_.end());
    out.powers_.insert(out.powers_.end(), b, rhs.powers_.end());
    out.degree_ = degree_ + rhs.degree_;
    return out;
}

std::pair<Monomial, Monomial> Monomial::split_aux() const {
    Monomial aux, rest;
    for (const auto& p : powers_) {
        Monomial& target = Variable::from_code(p.first).is_aux() ? aux : rest;
        target.powers_.push_back(p);
        target.degree_ += p.second;
    }
    return {std::move(aux), std::move(rest)};
}

std::strong_ordering Monomial::operator<=>(const Monomial& rhs) const {
    if (auto c = degree_ <=> rhs.degree_; c != 0)
        return c;
    // scan from the last variable; a larger exponent there makes the monomial smaller
    auto i = static_cast<std::ptrdiff_t>(powers_.size()) - 1;
    auto j = static_cast<std::ptrdiff_t>(rhs.powers_.size()) - 1;
    while (i >= 0 || j >= 0) {
        std::int64_t ca = i >= 0 ? powers_[i].first : -1;
        std::int64_t cb = j >= 0 ? rhs.powers_[j].first : -1;
        if (ca == cb) {
            if (powers_[i].second != rhs.powers_[j].second)
                return rhs.powers_[j].second <=> powers_[i].second;
            --i;
            --j;
        } else {
            return ca > cb ? std::strong_ordering::less : std::strong_ordering::greater;
        }
    }
    return std::strong_ordering::equal;
}

std::string Monomial::to_string(const Alphabet& alphabet) const {
    std::string s;
    for (const auto& [code, e] : powers_) {
        if (!s.empty())
            s += '*';
        s += Variable::from_code(code).name(alphabet);
        if (e > 1)
            s += "^" + std::to_string(e);
    }
    return s;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (const auto& [code, e] : m.powers()) {
        h ^= (std::size_t(code) << 8) ^ e;
        h *= 0x100000001b3ULL;
    }
    return h;
}

// ---------------------------------------------------------------- CommPoly

namespace {
bool term_greater(const CommPoly::Term& a, const CommPoly::Term& b) { return a.first > b.first; }
} // namespace

CommPoly::CommPoly(const Integer& c) {
    if (c != 0)
        terms_.emplace_back(Monomial{}, c);
}

CommPoly CommPoly::variable(Variable v) { return monomial(Monomial::variable(v)); }

CommPoly CommPoly::monomial(const Monomial& m, const Integer& c) {
    CommPoly p;
    if (c != 0)
        p.terms_.emplace_back(m, c);
    return p;
}

CommPoly CommPoly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), term_greater);
    CommPoly p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().first == t.first)
            p.terms_.back().second += t.second;
        else
            p.terms_.push_back(std::move(t));
        if (p.terms_.back().second == 0)
            p.terms_.pop_back();
    }
    return p;
}

Integer CommPoly::coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{m, 0}, term_greater);
    return (it != terms_.end() && it->first == m) ? it->second : Integer(0);
}

std::uint32_t CommPoly::total_degree() const {
    std::uint32_t d = 0;
    for (const auto& t : terms_)
        d = std::max(d, t.first.degree());
    return d;
}

namespace {

std::vector<CommPoly::Term> merge(std::span<const CommPoly::Term> a, std::span<const CommPoly::Term> b, int sign) {
    std::vector<CommPoly::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first > b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first > a[i].first) {
            out.emplace_back(b[j].first, sign > 0 ? b[j].second : Integer(-b[j].second));
            ++j;
        } else {
            Integer c = sign > 0 ? Integer(a[i].second + b[j].second) : Integer(a[i].second - b[j].second);
            if (c != 0)
                out.emplace_back(a[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

CommPoly& CommPoly::operator+=(const CommPoly& rhs) {
    terms_ = merge(terms_, rhs.terms_, +1);
    return *this;
}

CommPoly& CommPoly::operator-=(const CommPoly& rhs) {
    terms_ = merge(terms_, rhs.terms_, -1);
    return *this;
}

CommPoly& CommPoly::operator*=(const Integer& c) {
    if (c == 0)
        terms_.clear();
    for (auto& t : terms_)
        t.second *= c;
    return *this;
}

CommPoly& CommPoly::operator*=(const CommPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

CommPoly operator*(const CommPoly& a, const CommPoly& b) {
    if (a.is_zero() || b.is_zero())
        return {};
    if (a.size() == 1 && a.terms_[0].first.is_one()) {
        CommPoly r = b;
        return r *= a.terms_[0].second;
    }
    if (b.size() == 1 && b.terms_[0].first.is_one()) {
        CommPoly r = a;
        return r *= b.terms_[0].second;
    }
    std::unordered_map<Monomial, Integer, MonomialHash> acc;
    acc.reserve(a.size() * b.size());
    Integer prod;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            mpz_mul(prod.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
            auto [it, inserted] = acc.try_emplace(ma * mb, prod);
            if (!inserted)
                it->second += prod;
        }
    CommPoly out;
    out.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0)
            out.terms_.emplace_back(m, std::move(c));
    std::sort(out.terms_.begin(), out.terms_.end(), term_greater);
    return out;
}

CommPoly CommPoly::pow(unsigned k) const {
    CommPoly out(1);
    for (unsigned i = 0; i < k; ++i)
        out = out * *this;
    return out;
}

Integer CommPoly::evaluate(const std::function<Integer(Variable)>& value) const {
    Integer total = 0;
    for (const auto& [m, c] : terms_) {
        Integer t = c;
        for (const auto& [code, e] : m.powers()) {
            Integer v = value(Variable::from_code(code));
            Integer p;
            mpz_pow_ui(p.get_mpz_t(), v.get_mpz_t(), e);
            t *= p;
        }
        total += t;
    }
    return total;
}

std::optional<Multidegree> CommPoly::letter_multidegree(std::size_t alphabet_size) const {
    std::optional<Multidegree> result;
    for (const auto& [m, c] : terms_) {
        Multidegree d(alphabet_size, 0);
        for (const auto& [code, e] : m.powers()) {
            Variable v = Variable::from_code(code);
            if (!v.is_aux())
                d.at(v.letter()) += e;
        }
        if (result && *result != d)
            return std::nullopt;
        result = std::move(d);
    }
    if (!result)
        return Multidegree(alphabet_size, 0);
    return result;
}

std::string CommPoly::to_string(const Alphabet& alphabet) const {
    if (terms_.empty())
        return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (first)
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        first = false;
        Integer mag = abs(c);
        if (m.is_one())
            s += mag.get_str();
        else if (mag == 1)
            s += m.to_string(alphabet);
        else
            s += mag.get_str() + "*" + m.to_string(alphabet);
    }
    return s;
}

} // namespace dpinv
