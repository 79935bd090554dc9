#include "dpinv/invariants.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace dpinv {

MatrixPoly generic_matrix(Letter s, unsigned n) {
    MatrixPoly m(n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            m(i, j) = CommPoly::variable(Variable::entry(s, i, j));
    return m;
}

MatrixPoly generic_matrix(char symbol, const Alphabet& alphabet, unsigned n) {
    auto l = alphabet.find(symbol);
    if (!l)
        throw std::invalid_argument(std::string("letter '") + symbol + "' is not in the alphabet");
    return generic_matrix(*l, n);
}

namespace {

MatrixPoly word_product(const Word& w, unsigned n, std::vector<MatrixPoly>& letters) {
    MatrixPoly m = MatrixPoly::identity(n);
    for (Letter l : w.letters()) {
        while (letters.size() <= l)
            letters.push_back(generic_matrix(static_cast<Letter>(letters.size()), n));
        m = m * letters[l];
    }
    return m;
}

} // namespace

MatrixPoly jn_eval(const FreePoly& f, unsigned n) {
    std::vector<MatrixPoly> letters;
    MatrixPoly out(n);
    for (const auto& [w, c] : f.terms()) {
        MatrixPoly m = word_product(w, n, letters);
        m.scale(CommPoly(c));
        out += m;
    }
    return out;
}

std::vector<CommPoly> charpoly_coeffs(const MatrixPoly& b) { return characteristic_coefficients(b); }

ParametricDeterminant::ParametricDeterminant(std::span<const MatrixPoly> matrices)
    : n_(matrices.empty() ? 0 : static_cast<unsigned>(matrices.front().order())), count_(matrices.size()) {
    if (matrices.empty())
        throw std::invalid_argument("parametric determinant needs at least one matrix");
    MatrixPoly combined = MatrixPoly::identity(n_);
    combined.scale(CommPoly::variable(Variable::aux(0)));
    for (std::size_t k = 0; k < count_; ++k) {
        if (matrices[k].order() != n_)
            throw std::invalid_argument("matrix orders differ");
        MatrixPoly term = matrices[k];
        term.scale(CommPoly::variable(Variable::aux(static_cast<unsigned>(k + 1))));
        combined += term;
    }
    const CommPoly det = characteristic_coefficients(combined).back();
    // e_n is the determinant itself
    std::map<std::vector<unsigned>, std::vector<CommPoly::Term>> grouped;
    for (const auto& [mono, c] : det.terms()) {
        auto [aux, rest] = mono.split_aux();
        std::vector<unsigned> key(count_ + 1, 0);
        for (const auto& [code, e] : aux.powers())
            key[Variable::from_code(code).aux_index()] = e;
        grouped[key].emplace_back(rest, c);
    }
    for (auto& [key, terms] : grouped)
        by_parameters_.emplace(key, CommPoly::from_terms(std::move(terms)));
}

CommPoly ParametricDeterminant::coefficient(std::span<const unsigned> exponents) const {
    if (exponents.size() != count_)
        throw std::invalid_argument("wrong number of parameter exponents");
    unsigned weight = 0;
    for (unsigned e : exponents)
        weight += e;
    if (weight > n_)
        return CommPoly();
    std::vector<unsigned> key;
    key.reserve(count_ + 1);
    key.push_back(n_ - weight);
    key.insert(key.end(), exponents.begin(), exponents.end());
    auto it = by_parameters_.find(key);
    return it == by_parameters_.end() ? CommPoly() : it->second;
}

CommPoly multidet_coeff(std::span<const MatrixPoly> matrices, std::span<const unsigned> exponents, unsigned n) {
    for (const auto& m : matrices)
        if (m.order() != n)
            throw std::invalid_argument("matrix order differs from n");
    return ParametricDeterminant(matrices).coefficient(exponents);
}

const MatrixPoly& PiEvaluator::word_matrix(const Word& w) {
    auto it = words_.find(w);
    if (it != words_.end())
        return it->second;
    MatrixPoly m = MatrixPoly::identity(n_);
    for (Letter l : w.letters()) {
        Word single = Word::letter(l);
        auto lt = words_.find(single);
        if (lt == words_.end())
            lt = words_.emplace(single, generic_matrix(l, n_)).first;
        m = m * lt->second;
    }
    return words_.emplace(w, std::move(m)).first->second;
}

const CommPoly& PiEvaluator::char_coeff(const Word& w, unsigned i) {
    if (i > n_)
        throw std::out_of_range("characteristic coefficient index exceeds matrix order");
    auto it = char_coeffs_.find(w);
    if (it == char_coeffs_.end())
        it = char_coeffs_.emplace(w, characteristic_coefficients(word_matrix(w))).first;
    return it->second[i];
}

const CommPoly& PiEvaluator::evaluate(const DPMonomial& m) {
    auto it = monomials_.find(m);
    if (it != monomials_.end())
        return it->second;
    CommPoly value;
    if (m.weight() > n_) {
        value = CommPoly();
    } else if (m.is_identity()) {
        value = CommPoly(1);
    } else if (m.factors().size() == 1) {
        value = char_coeff(m.factors()[0].first, m.factors()[0].second);
    } else {
        std::vector<Word> words;
        std::vector<unsigned> exps;
        for (const auto& [w, e] : m.factors()) {
            words.push_back(w);
            exps.push_back(e);
        }
        auto dt = determinants_.find(words);
        if (dt == determinants_.end()) {
            std::vector<MatrixPoly> mats;
            for (const auto& w : words)
                mats.push_back(word_matrix(w));
            dt = determinants_.emplace(words, std::make_unique<ParametricDeterminant>(mats)).first;
        }
        value = dt->second->coefficient(exps);
    }
    return monomials_.emplace(m, std::move(value)).first->second;
}

CommPoly PiEvaluator::evaluate(const GammaElement& g) {
    if (g.level().is_limit() || g.level().n() != n_)
        throw ContextMismatch("pi_" + std::to_string(n_) + " applied to an element of level " +
                              g.level().to_string());
    CommPoly out;
    for (const auto& [m, c] : g.terms()) {
        CommPoly v = evaluate(m);
        v *= c;
        out += v;
    }
    return out;
}

CommPoly pi_n_eval(const GammaElement& g, unsigned n) {
    PiEvaluator ev(n);
    return ev.evaluate(g);
}

namespace {

struct GeneratorSearch {
    // (w, i, i * deg w) for every necklace w and 1 <= i <= n
    struct Factor {
        Word word;
        unsigned index;
        Multidegree degree;
    };
    std::vector<Factor> factors;
    PiEvaluator& evaluator;
    std::vector<InvariantGenerator> out;
    std::vector<std::pair<Word, unsigned>> chosen;

    void run(std::size_t start, const Multidegree& remaining, const CommPoly& value) {
        if (std::all_of(remaining.begin(), remaining.end(), [](unsigned v) { return v == 0; })) {
            out.push_back({chosen, value});
            return;
        }
        for (std::size_t k = start; k < factors.size(); ++k) {
            const Factor& f = factors[k];
            Multidegree rest = remaining;
            bool fits = true;
            for (std::size_t s = 0; s < rest.size() && fits; ++s) {
                if (rest[s] < f.degree[s])
                    fits = false;
                else
                    rest[s] -= f.degree[s];
            }
            if (!fits)
                continue;
            const CommPoly& e = evaluator.char_coeff(f.word, f.index);
            if (e.is_zero())
                continue;
            chosen.emplace_back(f.word, f.index);
            run(k, rest, value * e);
            chosen.pop_back();
        }
    }
};

} // namespace

std::vector<InvariantGenerator> invariant_generators(unsigned n, const Multidegree& d, PiEvaluator& evaluator) {
    if (evaluator.level() != n)
        throw std::invalid_argument("evaluator level differs from n");
    GeneratorSearch search{{}, evaluator, {}, {}};
    for (const auto& nk : enumerate_necklaces(d)) {
        const Word& w = nk.representative();
        Multidegree deg = w.multidegree(d.size());
        for (unsigned i = 1; i <= n; ++i) {
            Multidegree scaled = deg;
            for (auto& v : scaled)
                v *= i;
            search.factors.push_back({w, i, std::move(scaled)});
        }
    }
    search.run(0, d, CommPoly(1));
    return std::move(search.out);
}

std::vector<CommPoly> invariant_span(unsigned n, const Multidegree& d) {
    PiEvaluator ev(n);
    std::vector<CommPoly> out;
    for (auto& g : invariant_generators(n, d, ev))
        out.push_back(std::move(g.value));
    return out;
}

std::vector<MatrixPoly> covariant_span(unsigned n, const Multidegree& d) {
    PiEvaluator ev(n);
    std::vector<MatrixPoly> out;
    for (const auto& e : multidegrees_up_to(d)) {
        Multidegree rest(d.size());
        for (std::size_t s = 0; s < d.size(); ++s)
            rest[s] = d[s] - e[s];
        auto gens = invariant_generators(n, e, ev);
        if (gens.empty())
            continue;
        for (const auto& w : words_of_multidegree(rest)) {
            const MatrixPoly& wm = ev.word_matrix(w);
            for (const auto& g : gens) {
                MatrixPoly m = wm;
                m.scale(g.value);
                out.push_back(std::move(m));
            }
        }
    }
    return out;
}

namespace {

ExactMatrix rows_over_monomials(const std::vector<std::vector<const CommPoly*>>& rows) {
    std::set<Monomial, std::greater<>> monomials;
    for (const auto& row : rows)
        for (const CommPoly* p : row)
            for (const auto& t : p->terms())
                monomials.insert(t.first);
    std::map<Monomial, std::size_t> column;
    for (const auto& m : monomials)
        column.emplace(m, column.size());
    const std::size_t width = rows.empty() ? 0 : rows.front().size();
    ExactMatrix out(rows.size(), width * monomials.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t k = 0; k < rows[r].size(); ++k)
            for (const auto& [m, c] : rows[r][k]->terms())
                out(r, k * monomials.size() + column.at(m)) = c;
    return out;
}

} // namespace

ExactMatrix coefficient_matrix(std::span<const CommPoly> polys) {
    std::vector<std::vector<const CommPoly*>> rows;
    for (const auto& p : polys)
        rows.push_back({&p});
    return rows_over_monomials(rows);
}

ExactMatrix coefficient_matrix(std::span<const MatrixPoly> matrices) {
    std::vector<std::vector<const CommPoly*>> rows;
    for (const auto& m : matrices) {
        if (!rows.empty() && m.entries().size() != rows.front().size())
            throw std::invalid_argument("matrix orders differ");
        std::vector<const CommPoly*> row;
        for (const auto& e : m.entries())
            row.push_back(&e);
        rows.push_back(std::move(row));
    }
    return rows_over_monomials(rows);
}

} // namespace dpinv
