#pragma once

// Dimensions at a general point, unexpected curves and splitting types.
//
// For a base scheme X with N a basis of I(X)_d (k vectors) and R_P the
// derivative rows of mP, dim I(X + mP)_d = k - rank(R_P N). Sampled mode takes
// the minimum over random integer points P = [u, v, 1]; every sample can only
// overestimate the generic value. Certified mode computes the generic rank of
// R_{[a,b,1]} N over Q[a, b] with a GenericRankCertificate.

#include "field.hpp"
#include "form.hpp"
#include "geom.hpp"
#include "linsys.hpp"
#include "matrix.hpp"
#include "param_poly.hpp"
#include "random.hpp"
#include "symbolic_rank.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fatpoints {

struct GeneralPointStrategy {
    enum class Mode { sampled, certified };

    Mode mode = Mode::sampled;
    unsigned samples = 3;
    long height = 1000;
    std::uint64_t seed = 0;

    void validate() const {
        if (samples < 1)
            throw std::invalid_argument("strategy needs at least one sample");
        if (height < 2)
            throw std::invalid_argument("strategy height must be at least 2");
    }

    static GeneralPointStrategy certified_with(std::uint64_t seed) {
        GeneralPointStrategy s;
        s.mode = Mode::certified;
        s.seed = seed;
        return s;
    }
};

struct PointSample {
    ProjectivePoint point;
    std::size_t dim = 0;
};

struct GenericDimension {
    std::size_t base_dim = 0; // dim I(X)_d
    std::size_t dim = 0;      // generic dim I(X + mP)_d
    bool certified = false;
    std::vector<PointSample> samples;
    std::optional<GenericRankCertificate> certificate;
    std::optional<Form<Scalar>> witness; // nonzero element at witness_point
    std::optional<ProjectivePoint> witness_point;
};

// Sample point number `index`: [u, v, 1] with |u|, |v| <= height, avoiding the support of x.
inline ProjectivePoint general_point(const FatPointScheme &x, const GeneralPointStrategy &s, std::size_t index) {
    CounterRng rng(s.seed, streams::general_point, index);
    while (true) {
        const long u = rng.uniform(-s.height, s.height);
        const long v = rng.uniform(-s.height, s.height);
        const ProjectivePoint p = ProjectivePoint::of(x.field(), u, v, 1);
        bool clash = false;
        for (const auto &fp : x.points())
            clash = clash || fp.point == p;
        if (!clash)
            return p;
    }
}

namespace detail {

inline Matrix<Scalar> basis_columns(const std::vector<std::vector<Scalar>> &basis, std::size_t cols,
                                    const FieldPtr &field) {
    Matrix<Scalar> n(cols, basis.size(), Scalar(field));
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < cols; ++i)
            n(i, j) = basis[j][i];
    return n;
}

template <class C> Matrix<C> rows_matrix(const std::vector<std::vector<C>> &rows, std::size_t cols, const C &zero) {
    Matrix<C> m(rows.size(), cols, zero);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = rows[i][j];
    return m;
}

// reduced rows R_P N at the affine point (u, v) of chart z
inline Matrix<Scalar> reduced_at(const Scalar &u, const Scalar &v, unsigned m, unsigned d, const Matrix<Scalar> &n,
                                 const FieldPtr &field) {
    const auto rows = derivative_rows<Scalar>(u, v, 2, m, d, field);
    return multiply(rows_matrix(rows, n.rows(), Scalar(field)), n, Scalar(field));
}

} // namespace detail

inline GenericDimension generic_dim(const FatPointScheme &x, unsigned m, unsigned d, const GeneralPointStrategy &s) {
    s.validate();
    const FieldPtr &field = x.field();
    const std::size_t cols = monomial_count(d);
    std::vector<std::vector<Scalar>> basis;
    if (x.size() == 0) {
        for (std::size_t c = 0; c < cols; ++c) {
            std::vector<Scalar> e(cols, Scalar(field));
            e[c] = Scalar(field, 1);
            basis.push_back(std::move(e));
        }
    } else {
        basis = nullspace_basis(conditions_matrix(x, d), field);
    }
    const std::size_t k = basis.size();
    const Matrix<Scalar> n = detail::basis_columns(basis, cols, field);

    GenericDimension out;
    out.base_dim = k;
    std::optional<Matrix<Scalar>> best_reduced;
    std::vector<std::pair<Scalar, Scalar>> affine;
    for (std::size_t i = 0; i < s.samples; ++i) {
        const ProjectivePoint p = general_point(x, s, i);
        // stored coordinates are scaled so the first nonzero one is 1
        const Scalar u = p[0] / p[2], v = p[1] / p[2];
        affine.emplace_back(u, v);
        std::size_t dim = k;
        Matrix<Scalar> red;
        if (k > 0 && m > 0) {
            red = detail::reduced_at(u, v, m, d, n, field);
            dim = k - exact_rank(red);
        }
        if (out.samples.empty() || dim < out.dim) {
            out.dim = dim;
            out.witness_point = p;
            best_reduced = red;
        }
        out.samples.push_back({p, dim});
    }

    if (s.mode == GeneralPointStrategy::Mode::certified) {
        out.certified = true;
        if (k > 0 && m > 0) {
            const auto rows = detail::derivative_rows<ParamPoly>(ParamPoly::var_a(field), ParamPoly::var_b(field), 2,
                                                                 m, d, field);
            Matrix<ParamPoly> nl(cols, k, ParamPoly(field));
            for (std::size_t i = 0; i < cols; ++i)
                for (std::size_t j = 0; j < k; ++j)
                    nl(i, j) = ParamPoly(n(i, j));
            const Matrix<ParamPoly> red =
                multiply(detail::rows_matrix(rows, cols, ParamPoly(field)), nl, ParamPoly(field));
            out.certificate = symbolic_rank_bound(red, field, affine);
            const std::size_t generic = k - out.certificate->rank;
            if (generic != out.dim) {
                // no sample attains the generic value; use the certificate's specialisation
                const auto &[a0, b0] = out.certificate->witness;
                out.dim = generic;
                out.witness_point = ProjectivePoint(a0, b0, Scalar(field, 1));
                best_reduced = detail::reduced_at(a0, b0, m, d, n, field);
            }
        }
    }

    if (out.dim > 0) {
        std::vector<Scalar> w(k, Scalar(field));
        if (m == 0 || best_reduced->rows() == 0) {
            w[0] = Scalar(field, 1);
        } else {
            w = nullspace_basis(*best_reduced, field).front();
        }
        std::vector<Scalar> coeffs(cols, Scalar(field));
        for (std::size_t j = 0; j < k; ++j)
            if (!w[j].is_zero())
                for (std::size_t i = 0; i < cols; ++i)
                    coeffs[i] += w[j] * n(i, j);
        out.witness = Form<Scalar>(field, d, std::move(coeffs));
    }
    return out;
}

// m(j) = generic dim I(Z + jP)_{j+1}
inline std::size_t multiplicity_dim(const PointConfiguration &z, unsigned j, const GeneralPointStrategy &s) {
    return generic_dim(FatPointScheme(z), j, j + 1, s).dim;
}

struct SplittingType {
    std::size_t a = 0, b = 0;
    std::vector<std::size_t> m; // m(j), j = 0 .. |Z|-1
    bool balanced = false;
};

inline SplittingType splitting_type(const PointConfiguration &z, const GeneralPointStrategy &s) {
    if (z.size() < 2)
        throw std::invalid_argument("splitting_type needs at least two points");
    const FatPointScheme base(z);
    SplittingType st;
    std::optional<std::size_t> first;
    for (unsigned j = 0; j < z.size(); ++j) {
        st.m.push_back(generic_dim(base, j, j + 1, s).dim);
        if (!first && st.m.back() != 0)
            first = j;
    }
    if (!first)
        throw std::logic_error("splitting_type: m(j) vanished for every j");
    st.a = *first;
    st.b = z.size() - 1 - st.a;
    st.balanced = (st.a > st.b ? st.a - st.b : st.b - st.a) <= 1;
    return st;
}

enum class Balance { balanced, unbalanced };

inline Balance is_semistable_gate(const PointConfiguration &z, const GeneralPointStrategy &s) {
    return splitting_type(z, s).balanced ? Balance::balanced : Balance::unbalanced;
}

struct UnexpectedCurveReport {
    unsigned degree = 0;
    std::size_t dim_z = 0;
    std::size_t generic_dim = 0;
    std::size_t threshold = 0;
    bool unexpected = false;
    bool certified = false;
    std::optional<Form<Scalar>> witness;
    std::optional<ProjectivePoint> witness_point;
    std::vector<PointSample> samples;
};

inline std::size_t unexpected_threshold(std::size_t dim_z, unsigned d) {
    const std::size_t c = std::size_t{d} * (d - 1) / 2;
    return dim_z > c ? dim_z - c : 0;
}

inline UnexpectedCurveReport detect_unexpected(const PointConfiguration &z, unsigned d, const GeneralPointStrategy &s) {
    if (d < 2)
        throw std::invalid_argument("detect_unexpected needs degree at least 2");
    const GenericDimension g = generic_dim(FatPointScheme(z), d - 1, d, s);
    UnexpectedCurveReport r;
    r.degree = d;
    r.dim_z = g.base_dim;
    r.generic_dim = g.dim;
    r.threshold = unexpected_threshold(g.base_dim, d);
    r.unexpected = r.generic_dim > r.threshold;
    r.certified = g.certified;
    r.samples = g.samples;
    if (r.unexpected) {
        r.witness = g.witness;
        r.witness_point = g.witness_point;
    }
    return r;
}

// Degrees d in [lo, hi] for which z admits an unexpected curve.
inline std::vector<unsigned> unexpected_degrees(const PointConfiguration &z, unsigned lo, unsigned hi,
                                                const GeneralPointStrategy &s) {
    std::vector<unsigned> out;
    for (unsigned d = lo; d <= hi; ++d)
        if (detect_unexpected(z, d, s).unexpected)
            out.push_back(d);
    return out;
}

// True when a mod-p computation at one sample proves z has no unexpected curve
// of degree d: the sample dimension bounds the generic one from above, and
// max(2d + 1 - |Z|, 0) bounds the threshold from below. False means "unknown".
inline bool quick_not_unexpected(const PointConfiguration &z, unsigned d, std::uint64_t seed) {
    GeneralPointStrategy s;
    s.seed = seed;
    const FatPointScheme base(z);
    const ProjectivePoint p = general_point(base, s, 0);
    const auto bound = dim_mod_p_upper_bound(base.plus(p, d - 1), d);
    if (!bound)
        return false;
    const long floor = std::max(2L * d + 1 - static_cast<long>(z.size()), 0L);
    return static_cast<long>(*bound) <= floor;
}

} // namespace fatpoints
