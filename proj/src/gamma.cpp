#include "dpinv/gamma.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace dpinv {

unsigned Level::n() const {
    if (!n_)
        throw ContextMismatch("the limit ring has no truncation level");
    return *n_;
}

std::string Level::to_string() const { return n_ ? "n=" + std::to_string(*n_) : "lim"; }

// ---------------------------------------------------------------- DPMonomial

DPMonomial::DPMonomial(std::vector<Factor> factors) {
    std::erase_if(factors, [](const Factor& f) { return f.second == 0; });
    std::sort(factors.begin(), factors.end(),
              [](const Factor& a, const Factor& b) { return a.first < b.first; });
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].first.empty())
            throw std::invalid_argument("divided-power factor on the empty word");
        if (i > 0 && factors[i].first == factors[i - 1].first)
            throw std::invalid_argument("repeated word in divided-power monomial");
        weight_ += factors[i].second;
    }
    factors_ = std::move(factors);
}

DPMonomial DPMonomial::power(const Word& w, unsigned k) { return DPMonomial({{w, k}}); }

unsigned DPMonomial::exponent(const Word& w) const {
    for (const auto& [word, e] : factors_)
        if (word == w)
            return e;
    return 0;
}

Multidegree DPMonomial::multidegree(std::size_t alphabet_size) const {
    Multidegree d(alphabet_size, 0);
    for (const auto& [w, e] : factors_)
        for (Letter l : w.letters())
            d.at(l) += e;
    return d;
}

std::string DPMonomial::to_string(const Alphabet& alphabet) const {
    std::string s;
    for (const auto& [w, e] : factors_) {
        if (!s.empty())
            s += ' ';
        s += w.to_string(alphabet) + "^(" + std::to_string(e) + ")";
    }
    return s;
}

std::strong_ordering DPMonomial::operator<=>(const DPMonomial& rhs) const {
    if (auto c = weight_ <=> rhs.weight_; c != 0)
        return c;
    return std::lexicographical_compare_three_way(factors_.begin(), factors_.end(),
                                                  rhs.factors_.begin(), rhs.factors_.end());
}

std::size_t DPMonomialHash::operator()(const DPMonomial& m) const noexcept {
    std::size_t h = m.weight();
    WordHash wh;
    for (const auto& [w, e] : m.factors())
        h = (h * 1000003) ^ (wh(w) * 31 + e);
    return h;
}

// ---------------------------------------------------------------- GammaElement

GammaElement GammaElement::basis(const DPMonomial& m, Level level) {
    GammaElement g(level);
    g.add_term(m, 1);
    return g;
}

GammaElement GammaElement::identity(Level level) { return basis(DPMonomial{}, level); }

Integer GammaElement::coefficient(const DPMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
}

void GammaElement::add_term(const DPMonomial& m, const Integer& c) {
    if (!level_.admits(m.weight()))
        throw std::invalid_argument("monomial of weight " + std::to_string(m.weight()) +
                                    " is not a basis element of Gamma_" + std::to_string(level_.n()));
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void GammaElement::check_level(const GammaElement& rhs) const {
    if (!(level_ == rhs.level_))
        throw ContextMismatch("operands live in " + level_.to_string() + " and " + rhs.level_.to_string());
}

GammaElement& GammaElement::operator+=(const GammaElement& rhs) {
    check_level(rhs);
    for (const auto& [m, c] : rhs.terms_)
        add_term(m, c);
    return *this;
}

GammaElement& GammaElement::operator-=(const GammaElement& rhs) {
    check_level(rhs);
    for (const auto& [m, c] : rhs.terms_)
        add_term(m, -c);
    return *this;
}

GammaElement& GammaElement::operator*=(const Integer& c) {
    if (c == 0)
        terms_.clear();
    for (auto& [m, coef] : terms_)
        coef *= c;
    return *this;
}

std::string GammaElement::to_string(const Alphabet& alphabet) const {
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
        if (mag != 1)
            s += mag.get_str() + "*";
        s += "[" + m.to_string(alphabet) + "|" + level_.to_string() + "]";
    }
    return s;
}

namespace {

class GammaParser {
public:
    GammaParser(std::string_view text, const Alphabet& alphabet) : text_(text), alphabet_(alphabet) {}

    GammaElement parse() {
        std::vector<std::pair<DPMonomial, Integer>> terms;
        std::optional<Level> level;
        skip();
        if (at_end())
            throw ParseError(pos_, "empty divided-power element");
        if (peek() == '0') {
            std::size_t save = pos_;
            ++pos_;
            skip();
            if (at_end())
                return GammaElement();
            pos_ = save;
        }
        bool first = true;
        while (!at_end()) {
            Integer sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip();
            } else if (!first) {
                throw ParseError(pos_, "expected '+' or '-'");
            }
            Integer coef = 1;
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                coef = number_text();
                skip();
                expect('*');
                skip();
            }
            std::size_t bracket_pos = pos_;
            auto [mono, lvl] = bracket();
            if (level && !(*level == lvl))
                throw ParseError(bracket_pos, "terms use different ambient levels");
            level = lvl;
            if (!lvl.admits(mono.weight()))
                throw ParseError(bracket_pos, "monomial weight exceeds the truncation level");
            terms.emplace_back(std::move(mono), sign * coef);
            first = false;
            skip();
        }
        GammaElement g(*level);
        for (const auto& [m, c] : terms)
            g.add_term(m, c);
        return g;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    void skip() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    void expect(char c) {
        if (peek() != c)
            throw ParseError(pos_, std::string("expected '") + c + "'");
        ++pos_;
    }
    Integer number_text() {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        if (start == pos_)
            throw ParseError(pos_, "expected a number");
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }
    unsigned small_number() {
        std::size_t start = pos_;
        Integer v = number_text();
        if (v > 1000000)
            throw ParseError(start, "number too large");
        return static_cast<unsigned>(v.get_ui());
    }

    std::pair<DPMonomial, Level> bracket() {
        expect('[');
        std::vector<DPMonomial::Factor> factors;
        std::vector<std::size_t> positions;
        skip();
        while (peek() != '|') {
            if (at_end())
                throw ParseError(pos_, "unterminated bracket");
            std::size_t start = pos_;
            std::vector<Letter> letters;
            while (std::isalpha(static_cast<unsigned char>(peek()))) {
                auto l = alphabet_.find(peek());
                if (!l)
                    throw ParseError(pos_, std::string("unknown letter '") + peek() + "'");
                letters.push_back(*l);
                ++pos_;
            }
            if (letters.empty())
                throw ParseError(pos_, "expected a word");
            expect('^');
            expect('(');
            unsigned e = small_number();
            expect(')');
            factors.emplace_back(Word(std::move(letters)), e);
            positions.push_back(start);
            skip();
        }
        ++pos_;
        skip();
        Level level;
        if (text_.substr(pos_, 3) == "lim") {
            pos_ += 3;
            level = Level::limit();
        } else if (peek() == 'n') {
            ++pos_;
            skip();
            expect('=');
            skip();
            level = Level::truncated(small_number());
        } else {
            throw ParseError(pos_, "expected 'lim' or 'n=<level>'");
        }
        skip();
        expect(']');
        for (std::size_t i = 0; i < factors.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (factors[i].first == factors[j].first)
                    throw ParseError(positions[i], "repeated word in bracket");
        return {DPMonomial(std::move(factors)), level};
    }

    std::string_view text_;
    const Alphabet& alphabet_;
    std::size_t pos_ = 0;
};

// Merges (word, exponent) contributions with relation (v) and returns the
// combined coefficient together with the merged monomial.
std::pair<Integer, DPMonomial> merge_contributions(std::vector<DPMonomial::Factor>& parts) {
    std::sort(parts.begin(), parts.end(),
              [](const DPMonomial::Factor& a, const DPMonomial::Factor& b) { return a.first < b.first; });
    Integer coef = 1;
    std::vector<DPMonomial::Factor> merged;
    merged.reserve(parts.size());
    for (auto& [w, e] : parts) {
        if (e == 0)
            continue;
        if (!merged.empty() && merged.back().first == w) {
            unsigned prev = merged.back().second;
            coef *= binomial(prev + e, e);
            merged.back().second = prev + e;
        } else {
            merged.emplace_back(std::move(w), e);
        }
    }
    return {std::move(coef), DPMonomial(std::move(merged))};
}

struct MarginEnumerator {
    std::span<const DPMonomial::Factor> rows;
    std::span<const DPMonomial::Factor> cols;
    std::vector<unsigned> col_remaining;
    std::vector<unsigned> cell;
    GammaElement* out;

    void fill(std::size_t i, std::size_t j, unsigned row_remaining) {
        const std::size_t R = rows.size(), C = cols.size();
        if (i == R) {
            emit();
            return;
        }
        if (j == C) {
            // the rest of row i goes to column "1"
            cell[i * (C + 1) + C] = row_remaining;
            fill(i + 1, 0, i + 1 < R ? rows[i + 1].second : 0);
            return;
        }
        unsigned hi = std::min(row_remaining, col_remaining[j]);
        for (unsigned g = 0; g <= hi; ++g) {
            cell[i * (C + 1) + j] = g;
            col_remaining[j] -= g;
            fill(i, j + 1, row_remaining - g);
            col_remaining[j] += g;
        }
        cell[i * (C + 1) + j] = 0;
    }

    void emit() {
        const std::size_t R = rows.size(), C = cols.size();
        std::vector<DPMonomial::Factor> parts;
        parts.reserve(R * (C + 1) + C);
        for (std::size_t i = 0; i < R; ++i) {
            for (std::size_t j = 0; j < C; ++j)
                if (unsigned g = cell[i * (C + 1) + j])
                    parts.emplace_back(rows[i].first * cols[j].first, g);
            if (unsigned g = cell[i * (C + 1) + C])
                parts.emplace_back(rows[i].first, g);
        }
        for (std::size_t j = 0; j < C; ++j)
            if (col_remaining[j])
                parts.emplace_back(cols[j].first, col_remaining[j]);
        auto [coef, mono] = merge_contributions(parts);
        out->add_term(mono, coef);
    }
};

} // namespace

GammaElement GammaElement::parse(std::string_view text, const Alphabet& alphabet) {
    return GammaParser(text, alphabet).parse();
}

// ---------------------------------------------------------------- products

GammaElement dp_product(const DPMonomial& u, const DPMonomial& v, Level level) {
    std::vector<DPMonomial::Factor> parts(u.factors().begin(), u.factors().end());
    parts.insert(parts.end(), v.factors().begin(), v.factors().end());
    auto [coef, mono] = merge_contributions(parts);
    GammaElement out(level);
    if (level.admits(mono.weight()))
        out.add_term(mono, coef);
    return out;
}

GammaElement dp_product(const GammaElement& f, const GammaElement& g) {
    if (!(f.level() == g.level()))
        throw ContextMismatch("dp_product operands live in different levels");
    GammaElement out(f.level());
    for (const auto& [u, a] : f.terms())
        for (const auto& [v, b] : g.terms())
            out += dp_product(u, v, f.level()) * (a * b);
    return out;
}

GammaElement tau(const DPMonomial& u, const DPMonomial& v) {
    GammaElement out(Level::limit());
    MarginEnumerator e;
    e.rows = u.factors();
    e.cols = v.factors();
    e.col_remaining.reserve(e.cols.size());
    for (const auto& f : e.cols)
        e.col_remaining.push_back(f.second);
    e.cell.assign(e.rows.size() * (e.cols.size() + 1), 0);
    e.out = &out;
    e.fill(0, 0, e.rows.empty() ? 0 : e.rows[0].second);
    return out;
}

GammaElement tau_n(const DPMonomial& u, const DPMonomial& v, unsigned n) {
    if (u.weight() > n || v.weight() > n)
        throw ContextMismatch("tau_n operand is not a basis element of Gamma_" + std::to_string(n));
    return sigma_n(tau(u, v), n);
}

GammaElement tau(const GammaElement& f, const GammaElement& g) {
    if (!(f.level() == g.level()))
        throw ContextMismatch("tau operands live in " + f.level().to_string() + " and " +
                              g.level().to_string());
    GammaElement out(f.level());
    for (const auto& [u, a] : f.terms())
        for (const auto& [v, b] : g.terms()) {
            GammaElement p = f.level().is_limit() ? tau(u, v) : tau_n(u, v, f.level().n());
            out += p * (a * b);
        }
    return out;
}

GammaElement sigma_n(const GammaElement& g, unsigned n) {
    if (!g.level().is_limit())
        throw ContextMismatch("sigma_n expects an element of the limit ring");
    GammaElement out(Level::truncated(n));
    for (const auto& [m, c] : g.terms())
        if (m.weight() <= n)
            out.add_term(m, c);
    return out;
}

GammaElement rho_n(const GammaElement& g) {
    unsigned n = g.level().n();
    if (n == 0)
        throw std::invalid_argument("rho_n needs n >= 1");
    GammaElement out(Level::truncated(n - 1));
    for (const auto& [m, c] : g.terms())
        if (m.weight() < n)
            out.add_term(m, c);
    return out;
}

GammaElement dp_expand(const FreePoly& f, unsigned k) {
    if (f.constant_term() != 0)
        throw std::invalid_argument("dp_expand needs an element without constant term");
    GammaElement out(Level::limit());
    std::vector<std::pair<Word, Integer>> terms(f.terms().begin(), f.terms().end());
    if (terms.empty()) {
        if (k == 0)
            out.add_term(DPMonomial{}, 1);
        return out;
    }
    // distribute k over the words: sum over xi with |xi| = k of prod c^xi * prod w^(xi_w)
    std::vector<unsigned> xi(terms.size(), 0);
    auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
        if (i + 1 == terms.size()) {
            xi[i] = left;
            Integer coef = 1;
            std::vector<DPMonomial::Factor> factors;
            for (std::size_t t = 0; t < terms.size(); ++t) {
                if (xi[t] == 0)
                    continue;
                Integer p;
                mpz_pow_ui(p.get_mpz_t(), terms[t].second.get_mpz_t(), xi[t]);
                coef *= p;
                factors.emplace_back(terms[t].first, xi[t]);
            }
            out.add_term(DPMonomial(std::move(factors)), coef);
            return;
        }
        for (unsigned e = 0; e <= left; ++e) {
            xi[i] = e;
            self(self, i + 1, left - e);
        }
    };
    rec(rec, 0, k);
    return out;
}

DPMonomial abelianized_representative(const DPMonomial& m) {
    if (m.factors().size() != 1)
        return m;
    const auto& [w, e] = m.factors().front();
    return DPMonomial::power(cyclic_normal_form(w), e);
}

void NormedTensor::add_term(const DPMonomial& left, const Word& right, const Integer& c) {
    if (left.weight() > n_)
        throw std::invalid_argument("left tensor factor is not in Gamma_" + std::to_string(n_));
    if (c == 0)
        return;
    Key key{abelianized_representative(left), right};
    auto [it, inserted] = terms_.try_emplace(std::move(key), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

std::string NormedTensor::to_string(const Alphabet& alphabet) const {
    if (terms_.empty())
        return "0";
    std::string s;
    bool first = true;
    const std::string lvl = "|n=" + std::to_string(n_) + "]";
    for (const auto& [key, c] : terms_) {
        if (first)
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        first = false;
        Integer mag = abs(c);
        if (mag != 1)
            s += mag.get_str() + "*";
        s += "[" + key.first.to_string(alphabet) + lvl;
        if (!key.second.empty())
            s += "*" + key.second.to_string(alphabet);
    }
    return s;
}

NormedTensor chi_formal(const FreePoly& f, unsigned n) {
    if (f.constant_term() != 0)
        throw std::invalid_argument("chi_n needs an element without constant term");
    if (f.is_zero())
        throw std::invalid_argument("chi_n needs a nonconstant element");
    NormedTensor out(n);
    const FreePoly top = f.power(n);
    for (const auto& [w, c] : top.terms())
        out.add_term(DPMonomial{}, w, c);
    for (unsigned i = 1; i <= n; ++i) {
        GammaElement divided = dp_expand(f, i);
        FreePoly rest = f.power(n - i);
        Integer sign = (i % 2) ? -1 : 1;
        for (const auto& [m, a] : divided.terms())
            for (const auto& [w, b] : rest.terms())
                out.add_term(m, w, sign * a * b);
    }
    return out;
}

std::vector<DPMonomial> dp_monomials_of_multidegree(const Multidegree& d, Level level) {
    const std::vector<Word> words = enumerate_words(d);
    std::vector<Multidegree> degrees;
    for (const auto& w : words)
        degrees.push_back(w.multidegree(d.size()));
    std::vector<DPMonomial> out;
    std::vector<DPMonomial::Factor> chosen;
    Multidegree remaining = d;
    unsigned weight = 0;
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (std::all_of(remaining.begin(), remaining.end(), [](unsigned v) { return v == 0; })) {
            out.emplace_back(chosen);
            return;
        }
        if (k == words.size())
            return;
        self(self, k + 1);
        const Multidegree& deg = degrees[k];
        unsigned e = 0;
        while (true) {
            bool fits = true;
            for (std::size_t s = 0; s < d.size(); ++s)
                if (remaining[s] < deg[s])
                    fits = false;
            if (!fits || !level.admits(weight + 1))
                break;
            for (std::size_t s = 0; s < d.size(); ++s)
                remaining[s] -= deg[s];
            ++weight;
            ++e;
            chosen.emplace_back(words[k], e);
            self(self, k + 1);
            chosen.pop_back();
        }
        for (std::size_t s = 0; s < d.size(); ++s)
            remaining[s] += e * deg[s];
        weight -= e;
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace dpinv
