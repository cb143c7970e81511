#pragma once

// Generic rank of a matrix whose entries are polynomials in two parameters.
//
// A certificate of generic rank r consists of
//   * a specialisation (a0, b0) where the rank equals r (lower bound), and
//   * a proof that every (r+1)-minor vanishes identically. Either r is the
//     full rank min(rows, cols), or the rank is <= r on an integer grid
//     {0..Da} x {0..Db}, where Da (Db) bounds the a-degree (b-degree) of every
//     (r+1)-minor. A nonzero polynomial of bidegree <= (Da, Db) cannot vanish
//     on such a grid.

#include "field.hpp"
#include "matrix.hpp"
#include "param_poly.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace fatpoints {

struct GenericRankCertificate {
    enum class Method { full_rank, grid };

    std::size_t rank = 0;
    std::pair<Scalar, Scalar> witness;  // specialisation attaining rank
    Method method = Method::full_rank;
    std::size_t degree_bound_a = 0;     // grid side - 1 in a
    std::size_t degree_bound_b = 0;
    std::size_t grid_evaluations = 0;
};

inline Matrix<Scalar> specialize(const Matrix<ParamPoly> &m, const Scalar &a, const Scalar &b) {
    Matrix<Scalar> out(m.rows(), m.cols(), Scalar(a.field()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = m(i, j).evaluate(a, b);
    return out;
}

namespace detail {

// Sum of the k largest values (k clamped to the list size).
inline std::size_t top_sum(std::vector<long> v, std::size_t k) {
    std::sort(v.begin(), v.end(), std::greater<>());
    std::size_t s = 0;
    for (std::size_t i = 0; i < std::min(k, v.size()); ++i)
        s += static_cast<std::size_t>(std::max(v[i], 0L));
    return s;
}

// Bound on the degree in one parameter of any k x k minor: the smaller of the
// row-wise and column-wise sums of the k largest per-line degrees.
inline std::size_t minor_degree_bound(const Matrix<ParamPoly> &m, std::size_t k, bool in_a) {
    std::vector<long> row_deg(m.rows(), 0), col_deg(m.cols(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const long d = in_a ? m(i, j).degree_a() : m(i, j).degree_b();
            row_deg[i] = std::max(row_deg[i], d);
            col_deg[j] = std::max(col_deg[j], d);
        }
    return std::min(top_sum(row_deg, k), top_sum(col_deg, k));
}

} // namespace detail

// samples: specialisations tried first for the lower bound (may be empty).
inline GenericRankCertificate symbolic_rank_bound(const Matrix<ParamPoly> &m, const FieldPtr &field,
                                                  std::span<const std::pair<Scalar, Scalar>> samples = {}) {
    GenericRankCertificate cert;
    const std::size_t full = std::min(m.rows(), m.cols());
    cert.witness = {Scalar(field), Scalar(field)};
    if (full == 0)
        return cert;

    auto consider = [&](const Scalar &a, const Scalar &b, bool first) {
        const std::size_t r = exact_rank(specialize(m, a, b));
        if (first || r > cert.rank) {
            cert.rank = r;
            cert.witness = {a, b};
            return true;
        }
        return false;
    };
    if (samples.empty())
        consider(Scalar(field, 0), Scalar(field, 0), true);
    for (std::size_t s = 0; s < samples.size() && cert.rank < full; ++s)
        consider(samples[s].first, samples[s].second, s == 0);

    while (true) {
        if (cert.rank == full) {
            cert.method = GenericRankCertificate::Method::full_rank;
            return cert;
        }
        const std::size_t k = cert.rank + 1;
        cert.method = GenericRankCertificate::Method::grid;
        cert.degree_bound_a = detail::minor_degree_bound(m, k, true);
        cert.degree_bound_b = detail::minor_degree_bound(m, k, false);
        bool raised = false;
        for (std::size_t i = 0; i <= cert.degree_bound_a && !raised; ++i)
            for (std::size_t j = 0; j <= cert.degree_bound_b && !raised; ++j) {
                ++cert.grid_evaluations;
                raised = consider(Scalar(field, static_cast<long>(i)), Scalar(field, static_cast<long>(j)), false);
            }
        if (!raised)
            return cert;
    }
}

} // namespace fatpoints
