#include "dpinv/exactla.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace dpinv {

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    ExactMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw std::invalid_argument("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

ExactMatrix ExactMatrix::from_integer_rows(const std::vector<std::vector<Integer>>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    ExactMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw std::invalid_argument("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

bool ExactMatrix::is_integral() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return q.get_den() == 1; });
}

std::vector<std::vector<Integer>> ExactMatrix::integer_rows() const {
    std::vector<std::vector<Integer>> out(rows_, std::vector<Integer>(cols_));
    for (std::size_t r = 0; r < rows_; ++r) {
        Integer l = 1;
        for (std::size_t c = 0; c < cols_; ++c)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), (*this)(r, c).get_den_mpz_t());
        for (std::size_t c = 0; c < cols_; ++c) {
            const Rational& q = (*this)(r, c);
            out[r][c] = q.get_num() * (l / q.get_den());
        }
    }
    return out;
}

namespace {

/// Fraction-free forward elimination; returns the rank. Sets `sign` to the
/// parity of row swaps and leaves the last pivot in `last`.
std::size_t bareiss(std::vector<std::vector<Integer>>& a, std::size_t cols, int& sign) {
    const std::size_t rows = a.size();
    std::size_t r = 0;
    Integer prev = 1;
    sign = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        if (p != r) {
            std::swap(a[p], a[r]);
            sign = -sign;
        }
        const Integer& piv = a[r][c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            const Integer lead = a[i][c];
            for (std::size_t j = c + 1; j < cols; ++j) {
                Integer t = piv * a[i][j] - lead * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

} // namespace

std::size_t rank(const ExactMatrix& m) {
    auto a = m.integer_rows();
    int sign = 1;
    return bareiss(a, m.cols(), sign);
}

Rational determinant(const ExactMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    // clear denominators row by row, then undo the scaling
    Rational scale = 1;
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
    for (std::size_t r = 0; r < n; ++r) {
        Integer l = 1;
        for (std::size_t c = 0; c < n; ++c)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
        for (std::size_t c = 0; c < n; ++c)
            a[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
        scale *= l;
    }
    int sign = 1;
    if (bareiss(a, n, sign) < n)
        return 0;
    Rational d = Rational(a[n - 1][n - 1]) / scale;
    return sign < 0 ? Rational(-d) : d;
}

std::vector<Integer> smith_normal_form(const ExactMatrix& m) {
    if (!m.is_integral())
        throw std::invalid_argument("Smith normal form needs an integer matrix");
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            a[r][c] = m(r, c).get_num();

    std::vector<Integer> divisors;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        while (true) {
            // smallest nonzero entry of the trailing block becomes the pivot
            std::size_t pr = rows, pc = cols;
            for (std::size_t r = t; r < rows; ++r)
                for (std::size_t c = t; c < cols; ++c)
                    if (a[r][c] != 0 && (pr == rows || abs(a[r][c]) < abs(a[pr][pc]))) {
                        pr = r;
                        pc = c;
                    }
            if (pr == rows)
                return divisors;
            std::swap(a[t], a[pr]);
            for (std::size_t r = 0; r < rows; ++r)
                std::swap(a[r][t], a[r][pc]);

            bool clean = true;
            const Integer piv = a[t][t];
            for (std::size_t r = t + 1; r < rows; ++r) {
                if (a[r][t] == 0)
                    continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a[r][t].get_mpz_t(), piv.get_mpz_t());
                for (std::size_t c = t; c < cols; ++c)
                    a[r][c] -= q * a[t][c];
                if (a[r][t] != 0)
                    clean = false;
            }
            for (std::size_t c = t + 1; c < cols; ++c) {
                if (a[t][c] == 0)
                    continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a[t][c].get_mpz_t(), piv.get_mpz_t());
                for (std::size_t r = t; r < rows; ++r)
                    a[r][c] -= q * a[r][t];
                if (a[t][c] != 0)
                    clean = false;
            }
            if (!clean)
                continue;
            // the pivot must divide the whole trailing block
            bool divides = true;
            for (std::size_t r = t + 1; r < rows && divides; ++r)
                for (std::size_t c = t + 1; c < cols; ++c)
                    if (!mpz_divisible_p(a[r][c].get_mpz_t(), piv.get_mpz_t())) {
                        for (std::size_t k = t; k < cols; ++k)
                            a[t][k] += a[r][k];
                        divides = false;
                        break;
                    }
            if (divides)
                break;
        }
        divisors.push_back(abs(a[t][t]));
    }
    return divisors;
}

std::optional<std::vector<Rational>> in_span(const std::vector<std::vector<Rational>>& vectors,
                                             const std::vector<Rational>& target) {
    const std::size_t dim = target.size();
    const std::size_t k = vectors.size();
    for (const auto& v : vectors)
        if (v.size() != dim)
            throw std::invalid_argument("in_span: vector length differs from target length");
    // augmented system: one row per coordinate, one column per vector, plus target
    std::vector<std::vector<Rational>> a(dim, std::vector<Rational>(k + 1));
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < k; ++c)
            a[r][c] = vectors[c][r];
        a[r][k] = target[r];
    }
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t c = 0; c < k && row < dim; ++c) {
        std::size_t p = row;
        while (p < dim && a[p][c] == 0)
            ++p;
        if (p == dim)
            continue;
        std::swap(a[p], a[row]);
        Rational inv = 1 / a[row][c];
        for (std::size_t j = c; j <= k; ++j)
            a[row][j] *= inv;
        for (std::size_t r = 0; r < dim; ++r) {
            if (r == row || a[r][c] == 0)
                continue;
            Rational f = a[r][c];
            for (std::size_t j = c; j <= k; ++j)
                a[r][j] -= f * a[row][j];
        }
        pivot_cols.push_back(c);
        ++row;
    }
    for (std::size_t r = row; r < dim; ++r)
        if (a[r][k] != 0)
            return std::nullopt;
    std::vector<Rational> coeffs(k, Rational(0));
    for (std::size_t i = 0; i < pivot_cols.size(); ++i)
        coeffs[pivot_cols[i]] = a[i][k];
    return coeffs;
}

std::size_t EchelonBasis::reduce(std::vector<Integer>& row) const {
    if (row.size() != dim_)
        throw std::invalid_argument("row length differs from basis dimension");
    Integer g;
    for (std::size_t b = 0; b < rows_.size(); ++b) {
        const std::size_t p = pivots_[b];
        if (row[p] == 0)
            continue;
        const Integer lead = row[p];
        const auto& basis = rows_[b];
        mpz_gcd(g.get_mpz_t(), lead.get_mpz_t(), basis[p].get_mpz_t());
        const Integer mr = basis[p] / g, mb = lead / g;
        for (std::size_t j = 0; j < dim_; ++j)
            row[j] = mr * row[j] - mb * basis[j];
    }
    for (std::size_t j = 0; j < dim_; ++j)
        if (row[j] != 0)
            return j;
    return dim_;
}

bool EchelonBasis::add(std::vector<Integer> row) {
    std::size_t p = reduce(row);
    if (p == dim_)
        return false;
    Integer g = 0;
    for (const auto& v : row)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (row[p] < 0)
        g = -g;
    for (auto& v : row)
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    rows_.push_back(std::move(row));
    pivots_.push_back(p);
    return true;
}

bool EchelonBasis::contains(std::vector<Integer> row) const { return reduce(row) == dim_; }

} // namespace dpinv
