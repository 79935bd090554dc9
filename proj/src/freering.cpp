#include "dpinv/freering.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace dpinv {

Alphabet::Alphabet(std::string symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty())
        throw std::invalid_argument("alphabet must not be empty");
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (!std::isalpha(static_cast<unsigned char>(symbols_[i])))
            throw std::invalid_argument("alphabet symbols must be letters");
        if (symbols_.find(symbols_[i], i + 1) != std::string::npos)
            throw std::invalid_argument("alphabet symbols must be distinct");
    }
}

Alphabet Alphabet::standard(std::size_t size) {
    static const std::string order = "xyzwvu";
    if (size == 0 || size > order.size())
        throw std::invalid_argument("standard alphabet has between 1 and 6 letters");
    return Alphabet(order.substr(0, size));
}

std::optional<Letter> Alphabet::find(char c) const {
    auto pos = symbols_.find(c);
    if (pos == std::string::npos)
        return std::nullopt;
    return static_cast<Letter>(pos);
}

Word Word::parse(std::string_view text, const Alphabet& alphabet) {
    std::vector<Letter> letters;
    letters.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        auto l = alphabet.find(text[i]);
        if (!l)
            throw ParseError(i, std::string("unknown letter '") + text[i] + "'");
        letters.push_back(*l);
    }
    return Word(std::move(letters));
}

Word Word::operator*(const Word& rhs) const {
    std::vector<Letter> out;
    out.reserve(letters_.size() + rhs.letters_.size());
    out.insert(out.end(), letters_.begin(), letters_.end());
    out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
    return Word(std::move(out));
}

Word Word::power(unsigned k) const {
    std::vector<Letter> out;
    out.reserve(letters_.size() * k);
    for (unsigned i = 0; i < k; ++i)
        out.insert(out.end(), letters_.begin(), letters_.end());
    return Word(std::move(out));
}

Word Word::rotated(std::size_t shift) const {
    if (letters_.empty())
        return *this;
    std::vector<Letter> out(letters_);
    std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(shift % out.size()), out.end());
    return Word(std::move(out));
}

Multidegree Word::multidegree(std::size_t alphabet_size) const {
    Multidegree d(alphabet_size, 0);
    for (Letter l : letters_) {
        if (l >= alphabet_size)
            throw std::out_of_range("letter outside alphabet");
        ++d[l];
    }
    return d;
}

std::string Word::to_string(const Alphabet& alphabet) const {
    std::string s;
    s.reserve(letters_.size());
    for (Letter l : letters_)
        s.push_back(alphabet.symbol(l));
    return s;
}

std::strong_ordering Word::operator<=>(const Word& rhs) const {
    if (auto c = letters_.size() <=> rhs.letters_.size(); c != 0)
        return c;
    return std::lexicographical_compare_three_way(letters_.begin(), letters_.end(),
                                                  rhs.letters_.begin(), rhs.letters_.end());
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
    std::size_t h = w.length();
    for (Letter l : w.letters())
        h = h * 131 + l + 1;
    return h;
}

Word cyclic_normal_form(const Word& w) {
    const std::size_t n = w.length();
    if (n == 0)
        throw std::invalid_argument("the empty word has no cyclic class");
    // two-candidate scan for the least rotation
    std::size_t i = 0, j = 1, k = 0;
    while (i < n && j < n && k < n) {
        Letter a = w[(i + k) % n];
        Letter b = w[(j + k) % n];
        if (a == b) {
            ++k;
            continue;
        }
        if (a > b)
            i += k + 1;
        else
            j += k + 1;
        if (i == j)
            ++j;
        k = 0;
    }
    return w.rotated(std::min(i, j));
}

PrimitiveDecomposition primitive_decompose(const Word& w) {
    const std::size_t n = w.length();
    if (n == 0)
        throw std::invalid_argument("the empty word has no primitive root");
    std::vector<std::size_t> border(n, 0);
    for (std::size_t q = 1, k = 0; q < n; ++q) {
        while (k > 0 && w[q] != w[k])
            k = border[k - 1];
        if (w[q] == w[k])
            ++k;
        border[q] = k;
    }
    std::size_t period = n - border[n - 1];
    if (n % period != 0)
        period = n;
    std::vector<Letter> root(w.letters().begin(), w.letters().begin() + static_cast<std::ptrdiff_t>(period));
    return {Word(std::move(root)), static_cast<unsigned>(n / period)};
}

namespace {

void words_with_counts(Multidegree& remaining, std::vector<Letter>& prefix, std::vector<Word>& out) {
    bool done = true;
    for (std::size_t l = 0; l < remaining.size(); ++l) {
        if (remaining[l] == 0)
            continue;
        done = false;
        --remaining[l];
        prefix.push_back(static_cast<Letter>(l));
        words_with_counts(remaining, prefix, out);
        prefix.pop_back();
        ++remaining[l];
    }
    if (done)
        out.emplace_back(prefix);
}

bool dominated(const Multidegree& d, const Multidegree& bound) {
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] > bound[i])
            return false;
    return true;
}

void compositions(std::size_t parts, unsigned total, Multidegree& cur, std::size_t pos,
                  std::vector<Multidegree>& out) {
    if (pos + 1 == parts) {
        cur[pos] = total;
        out.push_back(cur);
        return;
    }
    for (unsigned v = total + 1; v-- > 0;) {
        cur[pos] = v;
        compositions(parts, total - v, cur, pos + 1, out);
    }
}

} // namespace

std::vector<Word> words_of_multidegree(const Multidegree& d) {
    std::vector<Word> out;
    Multidegree remaining = d;
    std::vector<Letter> prefix;
    words_with_counts(remaining, prefix, out);
    return out;
}

std::vector<Word> enumerate_words(std::size_t alphabet_size, unsigned max_total_degree) {
    std::vector<Word> out;
    for (unsigned len = 1; len <= max_total_degree; ++len) {
        std::vector<Letter> cur(len, 0);
        while (true) {
            out.emplace_back(cur);
            std::size_t pos = len;
            while (pos > 0 && cur[pos - 1] + 1u == alphabet_size) {
                cur[pos - 1] = 0;
                --pos;
            }
            if (pos == 0)
                break;
            ++cur[pos - 1];
        }
    }
    return out;
}

std::vector<Word> enumerate_words(const Multidegree& bound) {
    std::vector<Word> out;
    for (const Word& w : enumerate_words(bound.size(), total_degree(bound)))
        if (dominated(w.multidegree(bound.size()), bound))
            out.push_back(w);
    return out;
}

std::vector<Necklace> enumerate_necklaces(std::size_t alphabet_size, unsigned max_total_degree) {
    std::vector<Necklace> out;
    for (const Word& w : enumerate_words(alphabet_size, max_total_degree))
        if (cyclic_normal_form(w) == w)
            out.emplace_back(w);
    return out;
}

std::vector<Necklace> enumerate_necklaces(const Multidegree& bound) {
    std::vector<Necklace> out;
    for (const Word& w : enumerate_words(bound))
        if (cyclic_normal_form(w) == w)
            out.emplace_back(w);
    return out;
}

std::vector<Multidegree> multidegrees_of_total_at_most(std::size_t alphabet_size, unsigned max_total) {
    std::vector<Multidegree> out;
    Multidegree cur(alphabet_size, 0);
    for (unsigned t = 0; t <= max_total; ++t)
        compositions(alphabet_size, t, cur, 0, out);
    return out;
}

std::vector<Multidegree> multidegrees_up_to(const Multidegree& bound) {
    std::vector<Multidegree> out;
    for (auto& d : multidegrees_of_total_at_most(bound.size(), total_degree(bound)))
        if (dominated(d, bound))
            out.push_back(std::move(d));
    return out;
}

// ---------------------------------------------------------------- FreePoly

FreePoly FreePoly::constant(const Integer& c) { return monomial(Word{}, c); }

FreePoly FreePoly::monomial(const Word& w, const Integer& c) {
    FreePoly f;
    f.add_term(w, c);
    return f;
}

void FreePoly::add_term(const Word& w, const Integer& c) {
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Integer FreePoly::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Integer(0) : it->second;
}

std::size_t FreePoly::degree() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.length();
}

bool FreePoly::is_homogeneous() const {
    if (terms_.empty())
        return true;
    return terms_.begin()->first.length() == terms_.rbegin()->first.length();
}

FreePoly& FreePoly::operator+=(const FreePoly& rhs) {
    for (const auto& [w, c] : rhs.terms_)
        add_term(w, c);
    return *this;
}

FreePoly& FreePoly::operator-=(const FreePoly& rhs) {
    for (const auto& [w, c] : rhs.terms_)
        add_term(w, -c);
    return *this;
}

FreePoly& FreePoly::operator*=(const Integer& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, coef] : terms_)
        coef *= c;
    return *this;
}

FreePoly freepoly_mul(const FreePoly& f, const FreePoly& g) {
    FreePoly out;
    for (const auto& [u, a] : f.terms_)
        for (const auto& [v, b] : g.terms_)
            out.add_term(u * v, a * b);
    return out;
}

FreePoly FreePoly::power(unsigned k) const {
    FreePoly out = constant(1);
    for (unsigned i = 0; i < k; ++i)
        out = out * *this;
    return out;
}

std::string FreePoly::to_string(const Alphabet& alphabet) const {
    if (terms_.empty())
        return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        Integer mag = abs(c);
        if (first)
            s += (c < 0 ? "-" : "");
        else
            s += (c < 0 ? " - " : " + ");
        first = false;
        std::string body;
        for (std::size_t i = 0; i < w.length();) {
            std::size_t j = i;
            while (j < w.length() && w[j] == w[i])
                ++j;
            if (!body.empty())
                body += "*";
            body += alphabet.symbol(w[i]);
            if (j - i > 1)
                body += "^" + std::to_string(j - i);
            i = j;
        }
        if (body.empty())
            s += mag.get_str();
        else if (mag == 1)
            s += body;
        else
            s += mag.get_str() + "*" + body;
    }
    return s;
}

namespace {

class FreePolyParser {
public:
    FreePolyParser(std::string_view text, const Alphabet& alphabet) : text_(text), alphabet_(alphabet) {}

    FreePoly parse() {
        FreePoly result;
        skip();
        if (pos_ == text_.size())
            throw ParseError(pos_, "empty polynomial");
        bool first = true;
        while (pos_ < text_.size()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip();
            } else if (!first) {
                throw ParseError(pos_, "expected '+' or '-'");
            }
            FreePoly t = term();
            t *= Integer(sign);
            result += t;
            first = false;
            skip();
        }
        return result;
    }

private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    unsigned number() {
        std::size_t start = pos_;
        unsigned long long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + static_cast<unsigned>(text_[pos_] - '0');
            if (v > 1000000)
                throw ParseError(start, "exponent too large");
            ++pos_;
        }
        if (start == pos_)
            throw ParseError(pos_, "expected a number");
        return static_cast<unsigned>(v);
    }

    FreePoly term() {
        Integer coef = 1;
        Word word;
        bool have_factor = false;
        while (true) {
            skip();
            char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::size_t start = pos_;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    ++pos_;
                coef *= Integer(std::string(text_.substr(start, pos_ - start)));
            } else if (std::isalpha(static_cast<unsigned char>(c))) {
                std::vector<Letter> run;
                while (std::isalpha(static_cast<unsigned char>(peek()))) {
                    auto l = alphabet_.find(peek());
                    if (!l)
                        throw ParseError(pos_, std::string("unknown letter '") + peek() + "'");
                    run.push_back(*l);
                    ++pos_;
                }
                skip();
                if (peek() == '^') {
                    ++pos_;
                    skip();
                    unsigned k = number();
                    Letter last = run.back();
                    run.pop_back();
                    run.insert(run.end(), k, last);
                }
                word = word * Word(std::move(run));
            } else {
                throw ParseError(pos_, have_factor ? "expected a factor after '*'" : "expected a term");
            }
            have_factor = true;
            skip();
            if (peek() != '*')
                break;
            ++pos_;
        }
        return FreePoly::monomial(word, coef);
    }

    std::string_view text_;
    const Alphabet& alphabet_;
    std::size_t pos_ = 0;
};

} // namespace

FreePoly FreePoly::parse(std::string_view text, const Alphabet& alphabet) {
    return FreePolyParser(text, alphabet).parse();
}

} // namespace dpinv
