#include "dpinv/theorems.hpp"

#include "dpinv/symfunc.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <unordered_map>

namespace dpinv {

namespace {

bool is_zero_degree(const Multidegree& d) {
    return std::all_of(d.begin(), d.end(), [](unsigned v) { return v == 0; });
}

bool dominated(const Multidegree& e, const Multidegree& d) {
    for (std::size_t s = 0; s < d.size(); ++s)
        if (e[s] > d[s])
            return false;
    return true;
}

Multidegree minus(const Multidegree& d, const Multidegree& e) {
    Multidegree out(d.size());
    for (std::size_t s = 0; s < d.size(); ++s)
        out[s] = d[s] - e[s];
    return out;
}

Multidegree plus(const Multidegree& d, const Multidegree& e) {
    Multidegree out(d.size());
    for (std::size_t s = 0; s < d.size(); ++s)
        out[s] = d[s] + e[s];
    return out;
}

std::uint64_t cell_seed(std::uint64_t seed, unsigned n, const Multidegree& d) {
    std::uint64_t h = mix_seed(seed, n);
    for (unsigned v : d)
        h = mix_seed(h, v);
    return h;
}

/// Standard bases per multidegree at one level, computed on demand.
class BasisCache {
public:
    explicit BasisCache(Level level) : level_(level) {}
    const std::vector<DPMonomial>& operator()(const Multidegree& d) {
        auto it = bases_.find(d);
        if (it == bases_.end())
            it = bases_.emplace(d, dp_monomials_of_multidegree(d, level_)).first;
        return it->second;
    }
    Level level() const { return level_; }

private:
    Level level_;
    std::map<Multidegree, std::vector<DPMonomial>> bases_;
};

class Coordinates {
public:
    explicit Coordinates(const std::vector<DPMonomial>& basis) {
        for (std::size_t k = 0; k < basis.size(); ++k)
            index_.emplace(basis[k], k);
    }
    std::size_t dimension() const { return index_.size(); }
    std::vector<Integer> operator()(const GammaElement& g) const {
        std::vector<Integer> row(index_.size());
        for (const auto& [m, c] : g.terms()) {
            auto it = index_.find(m);
            if (it == index_.end())
                throw std::logic_error("element leaves the graded piece");
            row[it->second] = c;
        }
        return row;
    }

private:
    std::unordered_map<DPMonomial, std::size_t, DPMonomialHash> index_;
};

/// Calls sink(a tau (u tau v - v tau u)) for all basis elements with
/// deg a + deg u + deg v = d, u < v, u and v of positive degree.
/// sink returns false to stop early.
template <class Sink>
void for_each_commutator_relation(const Multidegree& d, BasisCache& bases, Sink&& sink) {
    const Level level = bases.level();
    std::vector<std::pair<DPMonomial, Multidegree>> factors;
    for (const auto& e : multidegrees_up_to(d)) {
        if (is_zero_degree(e))
            continue;
        for (const auto& m : bases(e))
            factors.emplace_back(m, e);
    }
    std::sort(factors.begin(), factors.end());
    for (std::size_t i = 0; i < factors.size(); ++i) {
        for (std::size_t j = i + 1; j < factors.size(); ++j) {
            const Multidegree uv = plus(factors[i].second, factors[j].second);
            if (!dominated(uv, d))
                continue;
            GammaElement u = GammaElement::basis(factors[i].first, level);
            GammaElement v = GammaElement::basis(factors[j].first, level);
            GammaElement c = tau(u, v) - tau(v, u);
            if (c.is_zero())
                continue;
            for (const auto& a : bases(minus(d, uv)))
                if (!sink(tau(GammaElement::basis(a, level), c)))
                    return;
        }
    }
}

bool all_entries_zero(const MatrixPoly& m) {
    return std::all_of(m.entries().begin(), m.entries().end(), [](const CommPoly& p) { return p.is_zero(); });
}

std::optional<Multidegree> homogeneous_degree(const FreePoly& f, std::size_t letters) {
    std::optional<Multidegree> deg;
    for (const auto& [w, c] : f.terms()) {
        Multidegree e = w.multidegree(letters);
        if (deg && *deg != e)
            return std::nullopt;
        deg = e;
    }
    return deg;
}

Report make_report(std::string theorem, std::string label, unsigned n, const Multidegree& d) {
    Report r;
    r.theorem = std::move(theorem);
    r.label = std::move(label);
    r.n = n;
    r.multidegree = d;
    return r;
}

Multidegree scaled(Multidegree d, unsigned k) {
    for (auto& v : d)
        v *= k;
    return d;
}

} // namespace

// ---------------------------------------------------------------- graded isomorphism

AbelianizedPiece abelianized_piece(unsigned n, const Multidegree& d) {
    BasisCache bases(Level::truncated(n));
    AbelianizedPiece piece;
    piece.basis = bases(d);
    Coordinates coords(piece.basis);
    std::vector<std::vector<Integer>> rows;
    for_each_commutator_relation(d, bases, [&](const GammaElement& r) {
        rows.push_back(coords(r));
        return true;
    });
    piece.relations = rows.empty() ? ExactMatrix(0, piece.basis.size()) : ExactMatrix::from_integer_rows(rows);
    return piece;
}

bool conjugation_invariant(const std::vector<CommPoly>& invariants, unsigned n, std::size_t letters,
                           std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto draw = [&](int lo, int hi) { return static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)) + lo; };

    // g and its inverse as products of elementary matrices
    IntMatrix g = IntMatrix::identity(n), g_inv = IntMatrix::identity(n);
    if (n > 1) {
        for (unsigned step = 0; step < 3 * n; ++step) {
            unsigned i = static_cast<unsigned>(rng() % n), j = static_cast<unsigned>(rng() % (n - 1));
            if (j >= i)
                ++j;
            int k = draw(-2, 2);
            if (k == 0)
                k = 1;
            IntMatrix e = IntMatrix::identity(n), e_inv = IntMatrix::identity(n);
            e(i, j) = k;
            e_inv(i, j) = -k;
            g = g * e;
            g_inv = e_inv * g_inv;
        }
    }
    std::vector<IntMatrix> xs, ys;
    for (std::size_t s = 0; s < letters; ++s) {
        IntMatrix x(n);
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j)
                x(i, j) = draw(-3, 3);
        ys.push_back(g * x * g_inv);
        xs.push_back(std::move(x));
    }
    auto at = [](const std::vector<IntMatrix>& ms) {
        return [&ms](Variable v) -> Integer {
            if (v.is_aux() || v.letter() >= ms.size())
                throw std::invalid_argument("unexpected variable in an invariant");
            return ms[v.letter()](v.row(), v.col());
        };
    };
    for (const auto& p : invariants)
        if (p.evaluate(at(xs)) != p.evaluate(at(ys)))
            return false;
    return true;
}

Report verify_thm_2_2_2_piece(unsigned n, const Multidegree& d, const RunOptions& options) {
    Report report;
    report.theorem = "2.2.2";
    report.n = n;
    report.multidegree = d;

    BasisCache bases(Level::truncated(n));
    const auto& basis = bases(d);
    Coordinates coords(basis);
    EchelonBasis relations(basis.size());
    std::vector<std::vector<Integer>> independent, all_rows;
    for_each_commutator_relation(d, bases, [&](const GammaElement& r) {
        auto row = coords(r);
        if (options.strict_z)
            all_rows.push_back(row);
        if (relations.add(row))
            independent.push_back(std::move(row));
        return options.strict_z || !relations.full();
    });

    PiEvaluator ev(n);
    std::vector<CommPoly> images;
    for (const auto& m : basis)
        images.push_back(ev.evaluate(m));
    const std::size_t image_rank = rank(coefficient_matrix(images));

    bool relations_vanish = true;
    for (const auto& row : independent) {
        CommPoly sum;
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (row[k] == 0)
                continue;
            CommPoly term = images[k];
            term *= row[k];
            sum += term;
        }
        if (!sum.is_zero()) {
            relations_vanish = false;
            break;
        }
    }

    std::vector<CommPoly> invariants;
    for (auto& g : invariant_generators(n, d, ev))
        invariants.push_back(std::move(g.value));
    const std::size_t invariant_rank = rank(coefficient_matrix(invariants));

    std::vector<CommPoly> together = images;
    together.insert(together.end(), invariants.begin(), invariants.end());
    const bool image_is_invariant = rank(coefficient_matrix(together)) == invariant_rank;

    const bool conjugation_ok = conjugation_invariant(invariants, n, d.size(), cell_seed(options.seed, n, d));

    report.lhs_rank = basis.size() - relations.rank();
    report.rhs_rank = invariant_rank;
    report.kernel_rank = basis.size() - image_rank;
    report.pass = report.lhs_rank == report.rhs_rank && report.kernel_rank == relations.rank() &&
                  relations_vanish && image_is_invariant && conjugation_ok;
    if (options.strict_z) {
        report.torsion_checked = true;
        if (!all_rows.empty())
            for (auto& q : smith_normal_form(ExactMatrix::from_integer_rows(all_rows)))
                if (q != 1)
                    report.torsion.push_back(q);
        report.pass = report.pass && report.torsion.empty();
    }
    return report;
}

std::vector<Report> verify_thm_2_2_2(unsigned n, std::size_t letters, unsigned max_total_degree,
                                     const RunOptions& options) {
    std::vector<std::function<Report()>> jobs;
    for (const auto& d : multidegrees_of_total_at_most(letters, max_total_degree))
        if (!is_zero_degree(d))
            jobs.push_back([n, d, options] { return verify_thm_2_2_2_piece(n, d, options); });
    return run_ordered(jobs, options);
}

// ---------------------------------------------------------------- reduction to generators

namespace {

TauPolynomial reduce_memo(const DPMonomial& g, std::map<DPMonomial, TauPolynomial>& memo) {
    if (auto it = memo.find(g); it != memo.end())
        return it->second;
    TauPolynomial out;
    auto factors = g.factors();
    if (factors.empty()) {
        out[{}] = 1;
    } else if (factors.size() == 1) {
        out[{factors[0]}] = 1;
    } else {
        DPMonomial first({factors[0]});
        DPMonomial rest(std::vector<DPMonomial::Factor>(factors.begin() + 1, factors.end()));
        GammaElement product = tau(first, rest);
        if (product.coefficient(g) != 1)
            throw std::logic_error("unexpected leading coefficient in tau reduction");
        GammaElement correction = product - GammaElement::basis(g);
        for (const auto& [key, c] : reduce_memo(rest, memo)) {
            TauWord word{factors[0]};
            word.insert(word.end(), key.begin(), key.end());
            out[word] += c;
        }
        // correction terms merge words, so their weight is strictly smaller
        for (const auto& [m, c] : correction.terms())
            for (const auto& [key, v] : reduce_memo(m, memo))
                out[key] -= c * v;
        std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    }
    memo.emplace(g, out);
    return out;
}

} // namespace

TauPolynomial reduce_to_single_generators(const DPMonomial& g) {
    std::map<DPMonomial, TauPolynomial> memo;
    return reduce_memo(g, memo);
}

GammaElement evaluate_tau_polynomial(const TauPolynomial& p) {
    GammaElement out;
    for (const auto& [word, c] : p) {
        GammaElement prod = GammaElement::identity();
        for (const auto& [w, e] : word)
            prod = tau(prod, GammaElement::basis(DPMonomial::power(w, e)));
        out += prod * c;
    }
    return out;
}

std::string tau_polynomial_to_string(const TauPolynomial& p, const Alphabet& alphabet) {
    if (p.empty())
        return "0";
    std::string s;
    bool first = true;
    for (const auto& [word, c] : p) {
        Integer mag = abs(c);
        if (first)
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        first = false;
        if (mag != 1)
            s += mag.get_str() + "*";
        if (word.empty()) {
            s += "1";
            continue;
        }
        for (std::size_t k = 0; k < word.size(); ++k) {
            if (k)
                s += " tau ";
            s += word[k].first.to_string(alphabet) + "^(" + std::to_string(word[k].second) + ")";
        }
    }
    return s;
}

// ---------------------------------------------------------------- plethysm

GammaElement plethysm_closed_form(const FreePoly& a, unsigned n, unsigned i) {
    std::map<unsigned, GammaElement> powers;
    GammaElement out;
    for (const auto& alpha : partitions_of(n * i, n, n * i)) {
        Integer c = c_alpha(alpha, n);
        if (c == 0)
            continue;
        GammaElement prod = GammaElement::identity();
        for (unsigned part : alpha.parts()) {
            auto it = powers.find(part);
            if (it == powers.end())
                it = powers.emplace(part, dp_expand(a, part)).first;
            prod = tau(prod, it->second);
        }
        out += prod * c;
    }
    return out;
}

Report verify_plethysm_case(const FreePoly& a, unsigned n, unsigned i, const Alphabet& alphabet) {
    Report report;
    report.theorem = "plethysm";
    report.label = "a=" + a.to_string(alphabet) + " i=" + std::to_string(i);
    report.n = n;
    if (auto deg = homogeneous_degree(a, alphabet.size()))
        report.multidegree = scaled(*deg, n * i);
    GammaElement lhs = dp_expand(a.power(n), i);
    GammaElement rhs = rho_a_substitute(plethysm_e_p(i, n, n * i), a);
    GammaElement closed = plethysm_closed_form(a, n, i);
    report.lhs_rank = lhs.terms().size();
    report.rhs_rank = rhs.terms().size();
    report.kernel_rank = (lhs - rhs).terms().size() + (lhs - closed).terms().size();
    report.pass = report.kernel_rank == 0;
    return report;
}

std::vector<Report> verify_plethysm(const std::vector<FreePoly>& as, const std::vector<unsigned>& ns,
                                    const std::vector<unsigned>& is, const Alphabet& alphabet,
                                    const RunOptions& options) {
    std::vector<std::function<Report()>> jobs;
    for (unsigned n : ns)
        for (const auto& a : as)
            for (unsigned i : is)
                jobs.push_back([a, n, i, alphabet] { return verify_plethysm_case(a, n, i, alphabet); });
    return run_ordered(jobs, options);
}

// ---------------------------------------------------------------- Cayley-Hamilton

MatrixPoly evaluate_chi(const FreePoly& f, unsigned n) {
    const NormedTensor chi = chi_formal(f, n);
    PiEvaluator ev(n);
    MatrixPoly out(n);
    for (const auto& [key, c] : chi.terms()) {
        CommPoly scalar = ev.evaluate(key.first);
        scalar *= c;
        if (scalar.is_zero())
            continue;
        MatrixPoly m = ev.word_matrix(key.second);
        m.scale(scalar);
        out += m;
    }
    return out;
}

Report verify_cayley_hamilton(const FreePoly& f, unsigned n, const Alphabet& alphabet) {
    Report report;
    report.theorem = "ch";
    report.label = "f=" + f.to_string(alphabet);
    report.n = n;
    if (auto deg = homogeneous_degree(f, alphabet.size()))
        report.multidegree = scaled(*deg, n);
    report.lhs_rank = chi_formal(f, n).terms().size();
    MatrixPoly value = evaluate_chi(f, n);
    report.rhs_rank = 0;
    report.kernel_rank = static_cast<std::size_t>(
        std::count_if(value.entries().begin(), value.entries().end(), [](const CommPoly& p) { return !p.is_zero(); }));
    report.pass = all_entries_zero(value);
    return report;
}

// ---------------------------------------------------------------- kernel of sigma_n on the abelianization

Report verify_zubkov_kernel(unsigned n, const Multidegree& d) {
    Report report;
    report.theorem = "zubkov";
    report.n = n;
    report.multidegree = d;

    BasisCache bases(Level::limit());
    const auto& basis = bases(d);
    Coordinates coords(basis);
    const unsigned total = total_degree(d);

    EchelonBasis relations(basis.size());
    for_each_commutator_relation(d, bases, [&](const GammaElement& r) {
        relations.add(coords(r));
        return !relations.full();
    });

    // ker sigma_n is spanned by the monomials of weight > n
    EchelonBasis kernel = relations;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (basis[k].weight() <= n)
            continue;
        std::vector<Integer> unit(basis.size());
        unit[k] = 1;
        kernel.add(std::move(unit));
    }

    // generators f: single words, sums of two words, and the sum of all words
    const std::vector<Word> words = enumerate_words(d);
    std::vector<FreePoly> family;
    for (const auto& w : words)
        family.push_back(FreePoly::monomial(w));
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j)
            family.push_back(FreePoly::monomial(words[i]) + FreePoly::monomial(words[j]));
    if (words.size() > 2) {
        FreePoly all;
        for (const auto& w : words)
            all += FreePoly::monomial(w);
        family.push_back(all);
    }

    EchelonBasis ideal = relations;
    EchelonBasis combined = kernel;
    for (const auto& f : family) {
        for (unsigned k = n + 1; k <= total; ++k) {
            // only words of degree <= total - k + 1 can occur in degree <= total
            FreePoly truncated;
            for (const auto& [w, c] : f.terms())
                if (w.length() + k - 1 <= total)
                    truncated += FreePoly::monomial(w, c);
            if (truncated.is_zero())
                continue;
            std::map<Multidegree, GammaElement> components;
            const GammaElement expanded = dp_expand(truncated, k);
            for (const auto& [m, c] : expanded.terms()) {
                Multidegree e = m.multidegree(d.size());
                if (!dominated(e, d))
                    continue;
                auto it = components.try_emplace(e).first;
                it->second.add_term(m, c);
            }
            for (const auto& [e, h] : components) {
                for (const auto& a : bases(minus(d, e))) {
                    auto row = coords(tau(GammaElement::basis(a), h));
                    ideal.add(row);
                    combined.add(std::move(row));
                }
            }
        }
    }

    report.lhs_rank = kernel.rank() - relations.rank();
    report.rhs_rank = ideal.rank() - relations.rank();
    report.kernel_rank = combined.rank() - kernel.rank();
    report.pass = report.lhs_rank == report.rhs_rank && report.kernel_rank == 0;
    return report;
}

std::vector<Report> verify_zubkov(unsigned n, std::size_t letters, unsigned max_total_degree,
                                  const RunOptions& options) {
    std::vector<std::function<Report()>> jobs;
    for (const auto& d : multidegrees_of_total_at_most(letters, max_total_degree))
        if (!is_zero_degree(d))
            jobs.push_back([n, d] { return verify_zubkov_kernel(n, d); });
    return run_ordered(jobs, options);
}

// ---------------------------------------------------------------- tau axioms

namespace {

Report tau_associativity(const Multidegree& D) {
    Report r = make_report("tau-axioms", "associativity", 0, D);
    BasisCache bases(Level::limit());
    for (const auto& e1 : multidegrees_up_to(D)) {
        if (is_zero_degree(e1))
            continue;
        const Multidegree rest = minus(D, e1);
        for (const auto& e2 : multidegrees_up_to(rest)) {
            const Multidegree e3 = minus(rest, e2);
            if (is_zero_degree(e2) || is_zero_degree(e3))
                continue;
            for (const auto& u : bases(e1))
                for (const auto& v : bases(e2)) {
                    GammaElement uv = tau(u, v);
                    for (const auto& w : bases(e3)) {
                        GammaElement wg = GammaElement::basis(w);
                        ++r.lhs_rank;
                        if (tau(uv, wg) == tau(GammaElement::basis(u), tau(v, w)))
                            ++r.rhs_rank;
                    }
                }
        }
    }
    r.kernel_rank = r.lhs_rank - r.rhs_rank;
    r.pass = r.kernel_rank == 0;
    return r;
}

Report tau_identity(const Multidegree& D) {
    Report r = make_report("tau-axioms", "identity", 0, D);
    const GammaElement one = GammaElement::identity();
    for (const auto& u : dp_monomials_of_multidegree(D)) {
        GammaElement ug = GammaElement::basis(u);
        ++r.lhs_rank;
        if (tau(one, ug) == ug && tau(ug, one) == ug)
            ++r.rhs_rank;
    }
    r.kernel_rank = r.lhs_rank - r.rhs_rank;
    r.pass = r.kernel_rank == 0;
    return r;
}

Report sigma_homomorphism(const Multidegree& D, unsigned n) {
    Report r = make_report("tau-axioms", "sigma-hom", n, D);
    BasisCache bases(Level::limit());
    for (const auto& e1 : multidegrees_up_to(D)) {
        const Multidegree e2 = minus(D, e1);
        if (is_zero_degree(e1) || is_zero_degree(e2))
            continue;
        for (const auto& u : bases(e1))
            for (const auto& v : bases(e2)) {
                ++r.lhs_rank;
                GammaElement lhs = sigma_n(tau(u, v), n);
                GammaElement rhs = tau(sigma_n(GammaElement::basis(u), n), sigma_n(GammaElement::basis(v), n));
                if (lhs == rhs)
                    ++r.rhs_rank;
            }
    }
    r.kernel_rank = r.lhs_rank - r.rhs_rank;
    r.pass = r.kernel_rank == 0;
    return r;
}

} // namespace

std::vector<Report> verify_tau_axioms(std::size_t letters, unsigned max_total_degree, unsigned max_n,
                                      const RunOptions& options) {
    std::vector<std::function<Report()>> jobs;
    for (const auto& D : multidegrees_of_total_at_most(letters, max_total_degree)) {
        if (is_zero_degree(D))
            continue;
        jobs.push_back([D] { return tau_identity(D); });
        jobs.push_back([D] { return tau_associativity(D); });
        for (unsigned n = 1; n <= max_n; ++n)
            jobs.push_back([D, n] { return sigma_homomorphism(D, n); });
    }
    return run_ordered(jobs, options);
}

// ---------------------------------------------------------------- pi_n multiplicativity

std::vector<Report> verify_pi_multiplicativity(unsigned n, std::size_t letters, unsigned max_total_degree,
                                               const RunOptions& options) {
    std::vector<std::function<Report()>> jobs;
    for (const auto& D : multidegrees_of_total_at_most(letters, max_total_degree)) {
        if (is_zero_degree(D))
            continue;
        jobs.push_back([n, D] {
            Report r = make_report("pi-multiplicativity", "", n, D);
            const Level level = Level::truncated(n);
            BasisCache bases(level);
            PiEvaluator ev(n);
            for (const auto& e1 : multidegrees_up_to(D)) {
                const Multidegree e2 = minus(D, e1);
                for (const auto& u : bases(e1))
                    for (const auto& v : bases(e2)) {
                        ++r.lhs_rank;
                        GammaElement uv = tau(GammaElement::basis(u, level), GammaElement::basis(v, level));
                        if (ev.evaluate(uv) == ev.evaluate(u) * ev.evaluate(v))
                            ++r.rhs_rank;
                    }
            }
            r.kernel_rank = r.lhs_rank - r.rhs_rank;
            r.pass = r.kernel_rank == 0;
            return r;
        });
    }
    return run_ordered(jobs, options);
}

} // namespace dpinv
