#pragma once

// Independent reference computations used only by the tests.

#include "dpinv/freering.hpp"
#include "dpinv/gamma.hpp"
#include "dpinv/integer.hpp"
#include "dpinv/matrix.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace oracle {

using dpinv::DPMonomial;
using dpinv::GammaElement;
using dpinv::Integer;
using dpinv::Word;

// ---------------------------------------------------------------- Gamma_n as symmetric tensors
//
// For a free ring F, Gamma_n(F) is the ring of S_n-invariant tensors in
// F^{(x) n} with componentwise multiplication. The basis element
// 1^(n-|a|) prod mu^(a_mu) is the orbit sum of the tuple listing each word
// mu a_mu times and the empty word n - |a| times.

using Tensor = std::map<std::vector<Word>, Integer>;

inline Tensor orbit_sum(const DPMonomial& m, unsigned n) {
    std::vector<Word> tuple;
    for (const auto& [w, e] : m.factors())
        for (unsigned k = 0; k < e; ++k)
            tuple.push_back(w);
    while (tuple.size() < n)
        tuple.push_back(Word{});
    std::sort(tuple.begin(), tuple.end());
    Tensor t;
    do {
        t[tuple] += 1;
    } while (std::next_permutation(tuple.begin(), tuple.end()));
    return t;
}

inline Tensor multiply(const Tensor& a, const Tensor& b) {
    Tensor out;
    for (const auto& [ta, ca] : a)
        for (const auto& [tb, cb] : b) {
            std::vector<Word> t(ta.size());
            for (std::size_t k = 0; k < ta.size(); ++k)
                t[k] = ta[k] * tb[k];
            out[t] += ca * cb;
        }
    return out;
}

/// Reads a symmetric tensor back in the divided-power basis of Gamma_n.
inline GammaElement from_tensor(const Tensor& t, unsigned n) {
    GammaElement out(dpinv::Level::truncated(n));
    for (const auto& [tuple, c] : t) {
        if (c == 0 || !std::is_sorted(tuple.begin(), tuple.end()))
            continue;
        std::map<Word, unsigned> counts;
        for (const auto& w : tuple)
            if (!w.empty())
                ++counts[w];
        std::vector<DPMonomial::Factor> factors(counts.begin(), counts.end());
        out.add_term(DPMonomial(factors), c);
    }
    return out;
}

inline GammaElement tau_n(const DPMonomial& u, const DPMonomial& v, unsigned n) {
    return from_tensor(multiply(orbit_sum(u, n), orbit_sum(v, n)), n);
}

// ---------------------------------------------------------------- determinants

using TPoly = std::vector<Integer>; // coefficients of t^0, t^1, ...

inline TPoly tpoly_mul(const TPoly& a, const TPoly& b) {
    TPoly out(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

inline void tpoly_add(TPoly& a, const TPoly& b, int sign) {
    if (a.size() < b.size())
        a.resize(b.size(), Integer(0));
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] += sign * b[i];
}

/// Laplace expansion along the first row.
inline TPoly cofactor_det(const std::vector<std::vector<TPoly>>& m) {
    const std::size_t n = m.size();
    if (n == 0)
        return {Integer(1)};
    if (n == 1)
        return m[0][0];
    TPoly out{Integer(0)};
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::vector<TPoly>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<TPoly> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c)
                    row.push_back(m[r][k]);
            minor.push_back(row);
        }
        tpoly_add(out, tpoly_mul(m[0][c], cofactor_det(minor)), c % 2 ? -1 : 1);
    }
    return out;
}

/// e_i(b) read off det(t I - b) computed by cofactor expansion.
inline std::vector<Integer> char_coeffs(const dpinv::SquareMatrix<Integer>& b) {
    const std::size_t n = b.order();
    std::vector<std::vector<TPoly>> m(n, std::vector<TPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = i == j ? TPoly{-b(i, j), Integer(1)} : TPoly{-b(i, j)};
    TPoly det = cofactor_det(m);
    det.resize(n + 1, Integer(0));
    std::vector<Integer> e(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        e[i] = (i % 2 ? -1 : 1) * det[n - i];
    return e;
}

inline Integer int_det(const std::vector<std::vector<Integer>>& a) {
    std::vector<std::vector<TPoly>> m;
    for (const auto& row : a) {
        std::vector<TPoly> r;
        for (const auto& v : row)
            r.push_back({v});
        m.push_back(r);
    }
    return cofactor_det(m)[0];
}

// ---------------------------------------------------------------- symmetric polynomials in explicit variables

using Explicit = std::map<std::vector<unsigned>, Integer>;

inline Explicit explicit_mul(const Explicit& a, const Explicit& b) {
    Explicit out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<unsigned> e(ea.size());
            for (std::size_t k = 0; k < e.size(); ++k)
                e[k] = ea[k] + eb[k];
            out[e] += ca * cb;
        }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

inline Explicit explicit_one(unsigned nvars) { return {{std::vector<unsigned>(nvars, 0), Integer(1)}}; }

inline Explicit explicit_e(unsigned k, unsigned nvars) {
    Explicit out;
    std::vector<unsigned> mask(nvars, 0);
    for (unsigned j = 0; j < k && j < nvars; ++j)
        mask[nvars - 1 - j] = 1;
    if (k > nvars)
        return out;
    do {
        out[mask] += 1;
    } while (std::next_permutation(mask.begin(), mask.end()));
    return out;
}

/// m_alpha: all distinct rearrangements of alpha padded with zeros.
inline Explicit explicit_m(std::vector<unsigned> alpha, unsigned nvars) {
    Explicit out;
    if (alpha.size() > nvars)
        return out;
    alpha.resize(nvars, 0);
    std::sort(alpha.begin(), alpha.end());
    do {
        out[alpha] += 1;
    } while (std::next_permutation(alpha.begin(), alpha.end()));
    return out;
}

inline void explicit_add(Explicit& a, const Explicit& b, const Integer& c) {
    for (const auto& [e, v] : b)
        a[e] += c * v;
    std::erase_if(a, [](const auto& kv) { return kv.second == 0; });
}

} // namespace oracle
