#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace dpinv {

/// Dense n x n matrix over a commutative ring T (row-major).
template <class T>
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t n) : n_(n), entries_(n * n, T(0)) {}

    static SquareMatrix identity(std::size_t n) {
        SquareMatrix m(n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = T(1);
        return m;
    }

    std::size_t order() const noexcept { return n_; }
    T& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    const std::vector<T>& entries() const noexcept { return entries_; }

    SquareMatrix& operator+=(const SquareMatrix& rhs) {
        check(rhs);
        for (std::size_t k = 0; k < entries_.size(); ++k)
            entries_[k] += rhs.entries_[k];
        return *this;
    }
    SquareMatrix& operator-=(const SquareMatrix& rhs) {
        check(rhs);
        for (std::size_t k = 0; k < entries_.size(); ++k)
            entries_[k] -= rhs.entries_[k];
        return *this;
    }
    SquareMatrix& scale(const T& c) {
        for (auto& e : entries_)
            e = c * e;
        return *this;
    }
    friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) { return a += b; }
    friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) { return a -= b; }
    friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
        a.check(b);
        SquareMatrix out(a.n_);
        for (std::size_t i = 0; i < a.n_; ++i)
            for (std::size_t k = 0; k < a.n_; ++k) {
                const T& aik = a(i, k);
                if (aik == T(0))
                    continue;
                for (std::size_t j = 0; j < a.n_; ++j)
                    out(i, j) += aik * b(k, j);
            }
        return out;
    }

    T trace() const {
        T t(0);
        for (std::size_t i = 0; i < n_; ++i)
            t += (*this)(i, i);
        return t;
    }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (!(e == T(0)))
                return false;
        return true;
    }

    bool operator==(const SquareMatrix&) const = default;

private:
    void check(const SquareMatrix& rhs) const {
        if (rhs.n_ != n_)
            throw std::invalid_argument("matrix orders differ");
    }

    std::size_t n_ = 0;
    std::vector<T> entries_;
};

/// Characteristic coefficients [e_0 = 1, e_1, ..., e_n] with
/// det(t I - b) = sum_i (-1)^i e_i(b) t^(n-i), computed without division
/// (Berkowitz). Valid over any commutative ring.
template <class T>
std::vector<T> characteristic_coefficients(const SquareMatrix<T>& b) {
    const std::size_t n = b.order();
    // coefficients of det(tI - A_k) for the leading k x k block, highest power first
    std::vector<T> poly{T(1)};
    for (std::size_t k = 0; k < n; ++k) {
        // toeplitz column: 1, -a_kk, -R C, -R M C, ..., -R M^(k-1) C
        std::vector<T> column;
        column.reserve(k + 2);
        column.push_back(T(1));
        column.push_back(T(0) - b(k, k));
        std::vector<T> v(k);
        for (std::size_t i = 0; i < k; ++i)
            v[i] = b(i, k);
        for (std::size_t p = 0; p < k; ++p) {
            T rv(0);
            for (std::size_t i = 0; i < k; ++i)
                rv += b(k, i) * v[i];
            column.push_back(T(0) - rv);
            if (p + 1 < k) {
                std::vector<T> next(k, T(0));
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j)
                        next[i] += b(i, j) * v[j];
                v = std::move(next);
            }
        }
        std::vector<T> next(k + 2, T(0));
        for (std::size_t r = 0; r < k + 2; ++r)
            for (std::size_t c = 0; c <= k && c <= r; ++c)
                next[r] += column[r - c] * poly[c];
        poly = std::move(next);
    }
    for (std::size_t i = 1; i < poly.size(); i += 2)
        poly[i] = T(0) - poly[i];
    return poly;
}

} // namespace dpinv
