#pragma once

// Independent reference computations for the tests. They avoid the library's
// elimination and chart machinery: plain Gaussian elimination over mpq,
// Leibniz determinants, complex embeddings of cyclotomic elements and
// interpolation conditions from homogeneous partial derivatives.

#include <fatpoints/field.hpp>

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <vector>

namespace oracle {

using QMatrix = std::vector<std::vector<mpq_class>>;

inline std::size_t rank(QMatrix m) {
    std::size_t r = 0;
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0)
                continue;
            const mpq_class f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

inline mpq_class leibniz_det(const QMatrix &m) {
    const std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    mpq_class total = 0;
    do {
        int sign = 1;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j])
                    sign = -sign;
        mpq_class t = sign;
        for (std::size_t i = 0; i < n; ++i)
            t *= m[i][perm[i]];
        total += t;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

inline std::complex<double> embed(const fatpoints::Scalar &s) {
    const unsigned n = s.field()->conductor();
    const double pi = std::acos(-1.0);
    const std::complex<double> zeta = s.field()->degree() == 1 && n <= 2
                                          ? std::complex<double>(n == 2 ? -1.0 : 1.0, 0.0)
                                          : std::polar(1.0, 2 * pi / n);
    std::complex<double> acc = 0, w = 1;
    for (const auto &c : s.coefficients()) {
        acc += c.get_d() * w;
        w *= zeta;
    }
    return acc;
}

struct Exps {
    unsigned x, y, z;
};

// graded-lex exponent list with x > y > z, computed independently of the library
inline std::vector<Exps> monomials(unsigned d) {
    std::vector<Exps> out;
    for (int a = static_cast<int>(d); a >= 0; --a)
        for (int b = static_cast<int>(d) - a; b >= 0; --b)
            out.push_back({static_cast<unsigned>(a), static_cast<unsigned>(b), d - a - b});
    return out;
}

inline mpq_class qpow(const mpq_class &b, unsigned e) {
    mpq_class r = 1;
    for (unsigned i = 0; i < e; ++i)
        r *= b;
    return r;
}

inline long falling(unsigned e, unsigned k) {
    long r = 1;
    for (unsigned t = 0; t < k; ++t)
        r *= static_cast<long>(e) - static_cast<long>(t);
    return r;
}

struct RationalFatPoint {
    mpq_class x, y, z;
    unsigned m;
};

// Rows: every homogeneous partial of order exactly min(m-1, d) evaluated at the
// point (by Euler's formula equivalent to vanishing of all lower-order partials).
inline QMatrix homogeneous_conditions(const std::vector<RationalFatPoint> &pts, unsigned d) {
    const auto mons = monomials(d);
    QMatrix rows;
    for (const auto &p : pts) {
        if (p.m == 0)
            continue;
        const unsigned k = std::min(p.m - 1, d);
        for (unsigned i = 0; i <= k; ++i)
            for (unsigned j = 0; i + j <= k; ++j) {
                const unsigned l = k - i - j;
                std::vector<mpq_class> row;
                for (const auto &e : mons) {
                    if (e.x < i || e.y < j || e.z < l) {
                        row.emplace_back(0);
                        continue;
                    }
                    row.push_back(mpq_class(falling(e.x, i) * falling(e.y, j) * falling(e.z, l)) *
                                  qpow(p.x, e.x - i) * qpow(p.y, e.y - j) * qpow(p.z, e.z - l));
                }
                rows.push_back(std::move(row));
            }
    }
    return rows;
}

inline std::size_t interpolation_dim(const std::vector<RationalFatPoint> &pts, unsigned d) {
    const std::size_t cols = (d + 1) * (d + 2) / 2;
    const QMatrix rows = homogeneous_conditions(pts, d);
    if (rows.empty())
        return cols;
    return cols - rank(rows);
}

inline std::size_t binom(std::size_t n, std::size_t k) {
    if (k > n)
        return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

} // namespace oracle
