#pragma once

// Generic matrices, the evaluation j_n : F_S -> M_n(A_S(n)), characteristic
// coefficients, and the map pi_n from Gamma_n(F_S) to polynomial invariants.

#include "dpinv/commpoly.hpp"
#include "dpinv/exactla.hpp"
#include "dpinv/freering.hpp"
#include "dpinv/gamma.hpp"
#include "dpinv/matrix.hpp"

#include <map>
#include <memory>
#include <span>
#include <unordered_map>
#include <vector>

namespace dpinv {

using MatrixPoly = SquareMatrix<CommPoly>;
using IntMatrix = SquareMatrix<Integer>;

/// The generic matrix with entries x[s][i][j].
MatrixPoly generic_matrix(Letter s, unsigned n);
/// Same, by symbol; throws std::invalid_argument for a letter outside the alphabet.
MatrixPoly generic_matrix(char symbol, const Alphabet& alphabet, unsigned n);

MatrixPoly jn_eval(const FreePoly& f, unsigned n);

/// [e_0 = 1, e_1, ..., e_n] with det(t I - b) = sum (-1)^i e_i t^(n-i).
std::vector<CommPoly> charpoly_coeffs(const MatrixPoly& b);

/// det(t_0 I + t_1 M_1 + ... + t_k M_k), expanded once, with its
/// coefficients grouped by the exponents of the parameters t.
class ParametricDeterminant {
public:
    explicit ParametricDeterminant(std::span<const MatrixPoly> matrices);

    unsigned order() const noexcept { return n_; }
    /// Coefficient of t_0^(n-|a|) prod t_k^(a_k); zero when |a| > n.
    CommPoly coefficient(std::span<const unsigned> exponents) const;

private:
    unsigned n_ = 0;
    std::size_t count_ = 0;
    std::map<std::vector<unsigned>, CommPoly> by_parameters_;
};

CommPoly multidet_coeff(std::span<const MatrixPoly> matrices, std::span<const unsigned> exponents, unsigned n);

/// Evaluates pi_n on Gamma_n(F_S), caching word matrices and parametric
/// determinants. Not thread-safe; use one instance per worker.
class PiEvaluator {
public:
    explicit PiEvaluator(unsigned n) : n_(n) {}

    unsigned level() const noexcept { return n_; }
    const MatrixPoly& word_matrix(const Word& w);
    /// e_i(j_n(w)).
    const CommPoly& char_coeff(const Word& w, unsigned i);
    const CommPoly& evaluate(const DPMonomial& m);
    /// Throws ContextMismatch unless g lives in Gamma_n.
    CommPoly evaluate(const GammaElement& g);

private:
    unsigned n_;
    std::unordered_map<Word, MatrixPoly, WordHash> words_;
    std::unordered_map<Word, std::vector<CommPoly>, WordHash> char_coeffs_;
    std::map<std::vector<Word>, std::unique_ptr<ParametricDeterminant>> determinants_;
    std::unordered_map<DPMonomial, CommPoly, DPMonomialHash> monomials_;
};

/// pi_n(g) for g in Gamma_n.
CommPoly pi_n_eval(const GammaElement& g, unsigned n);

/// A product of characteristic coefficients e_{i_1}(w_1) ... e_{i_r}(w_r)
/// over necklace representatives w_k.
struct InvariantGenerator {
    std::vector<std::pair<Word, unsigned>> factors;
    CommPoly value;
};

/// Spanning set of the multidegree-d piece of the invariants C_S(n),
/// alphabet size d.size().
std::vector<InvariantGenerator> invariant_generators(unsigned n, const Multidegree& d, PiEvaluator& evaluator);
std::vector<CommPoly> invariant_span(unsigned n, const Multidegree& d);
/// Invariant generators right-multiplied by words in the generic matrices.
std::vector<MatrixPoly> covariant_span(unsigned n, const Multidegree& d);

/// Rows of coefficients over the union of monomials (columns in decreasing
/// monomial order).
ExactMatrix coefficient_matrix(std::span<const CommPoly> polys);
/// Same, flattening the n^2 entries of each matrix into one row.
ExactMatrix coefficient_matrix(std::span<const MatrixPoly> matrices);

} // namespace dpinv
