#pragma once

// Fat point schemes X = m1 P1 + ... + mr Pr and the linear systems I(X)_d.
//
// A point of multiplicity m imposes the vanishing of every derivative of order
// <= m-1 in the affine chart where its last nonzero coordinate is 1. The row
// for the derivative d^i/du^i d^j/dv^j has, in the column of a monomial with
// chart exponents (eu, ev), the entry eu!/(eu-i)! ev!/(ev-j)! u^(eu-i) v^(ev-j).

#include "field.hpp"
#include "form.hpp"
#include "geom.hpp"
#include "matrix.hpp"
#include "param_poly.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fatpoints {

class BaseLocusError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

struct FatPoint {
    ProjectivePoint point;
    unsigned multiplicity = 1;
};

class FatPointScheme {
  public:
    explicit FatPointScheme(FieldPtr field) : field_(std::move(field)) {}

    // every point of Z with multiplicity one
    explicit FatPointScheme(const PointConfiguration &z) : field_(z.field()) {
        for (const auto &p : z)
            add(p, 1);
    }

    FatPointScheme &add(const ProjectivePoint &p, unsigned multiplicity) {
        require_compatible(*field_, *p.field());
        if (multiplicity == 0)
            throw std::invalid_argument("multiplicity must be at least 1");
        for (const auto &fp : points_)
            if (fp.point == p)
                throw DegenerateInput("point " + p.to_string() + " already in scheme");
        points_.push_back({p, multiplicity});
        return *this;
    }

    FatPointScheme plus(const ProjectivePoint &p, unsigned multiplicity) const {
        FatPointScheme s(*this);
        if (multiplicity > 0)
            s.add(p, multiplicity);
        return s;
    }

    const FieldPtr &field() const noexcept { return field_; }
    const std::vector<FatPoint> &points() const noexcept { return points_; }
    std::size_t size() const noexcept { return points_.size(); }

    // sum of C(m_i + 1, 2)
    std::size_t condition_count() const {
        std::size_t n = 0;
        for (const auto &fp : points_)
            n += std::size_t{fp.multiplicity} * (fp.multiplicity + 1) / 2;
        return n;
    }

  private:
    FieldPtr field_;
    std::vector<FatPoint> points_;
};

inline long binomial2(long n) { return n * (n - 1) / 2; }

namespace detail {

inline std::size_t chart_of(const ProjectivePoint &p) {
    for (std::size_t k = 3; k-- > 0;)
        if (!p[k].is_zero())
            return k;
    return 0;
}

inline std::pair<std::size_t, std::size_t> chart_variables(std::size_t chart) {
    switch (chart) {
    case 0: return {1, 2};
    case 1: return {0, 2};
    default: return {0, 1};
    }
}

inline unsigned monomial_exponent(const Monomial &m, std::size_t var) {
    return var == 0 ? m.x : var == 1 ? m.y : m.z;
}

inline long falling(unsigned e, unsigned k) {
    long r = 1;
    for (unsigned t = 0; t < k; ++t)
        r *= static_cast<long>(e - t);
    return r;
}

// Derivative rows of order <= m-1 at the affine point (u, v) of the given chart.
// Rows are ordered by total order, then by the u-order descending.
template <class C>
std::vector<std::vector<C>> derivative_rows(const C &u, const C &v, std::size_t chart, unsigned m, unsigned d,
                                            const FieldPtr &field) {
    const auto [iu, iv] = chart_variables(chart);
    const auto mons = monomial_basis(d);
    std::vector<C> pu{C(field, 1)}, pv{C(field, 1)};
    for (unsigned k = 1; k <= d; ++k) {
        pu.push_back(pu.back() * u);
        pv.push_back(pv.back() * v);
    }
    std::vector<std::vector<C>> rows;
    for (unsigned order = 0; order < m; ++order)
        for (unsigned i = order + 1; i-- > 0;) {
            const unsigned j = order - i;
            std::vector<C> row(mons.size(), C(field, 0));
            for (std::size_t c = 0; c < mons.size(); ++c) {
                const unsigned eu = monomial_exponent(mons[c], iu);
                const unsigned ev = monomial_exponent(mons[c], iv);
                if (eu < i || ev < j)
                    continue;
                row[c] = pu[eu - i] * pv[ev - j] * C(field, falling(eu, i) * falling(ev, j));
            }
            rows.push_back(std::move(row));
        }
    return rows;
}

inline std::vector<std::vector<Scalar>> point_rows(const ProjectivePoint &p, std::size_t chart, unsigned m,
                                                   unsigned d) {
    const auto [iu, iv] = chart_variables(chart);
    const Scalar inv = p[chart].inverse();
    return derivative_rows<Scalar>(p[iu] * inv, p[iv] * inv, chart, m, d, p.field());
}

} // namespace detail

inline Matrix<Scalar> conditions_matrix(const FatPointScheme &x, unsigned d) {
    Matrix<Scalar> m(0, monomial_count(d), Scalar(x.field()));
    for (const auto &fp : x.points())
        for (const auto &row : detail::point_rows(fp.point, detail::chart_of(fp.point), fp.multiplicity, d))
            m.append_row(row);
    return m;
}

// Whether all derivatives of order < m vanish at p, checked in every chart that contains p.
inline bool vanishes_to_order(const Form<Scalar> &f, const ProjectivePoint &p, unsigned m) {
    for (std::size_t chart = 0; chart < 3; ++chart) {
        if (p[chart].is_zero())
            continue;
        for (const auto &row : detail::point_rows(p, chart, m, f.degree())) {
            Scalar acc(f.field());
            for (std::size_t c = 0; c < row.size(); ++c)
                if (!row[c].is_zero() && !f.coefficients()[c].is_zero())
                    acc += row[c] * f.coefficients()[c];
            if (!acc.is_zero())
                return false;
        }
    }
    return true;
}

struct LinearSystemReport {
    unsigned degree = 0;
    long vdim = 0;
    long edim = 0;
    long dim = 0;
    bool special = false; // dim != edim
    std::vector<Form<Scalar>> basis;
};

inline long virtual_dimension(const FatPointScheme &x, unsigned d) {
    return static_cast<long>(monomial_count(d)) - static_cast<long>(x.condition_count());
}

inline std::vector<Form<Scalar>> forms_from_vectors(const std::vector<std::vector<Scalar>> &vs, unsigned d,
                                                    const FieldPtr &field) {
    std::vector<Form<Scalar>> out;
    for (const auto &v : vs)
        out.emplace_back(field, d, v);
    return out;
}

inline LinearSystemReport dim_linear_system(const FatPointScheme &x, unsigned d) {
    LinearSystemReport r;
    r.degree = d;
    r.vdim = virtual_dimension(x, d);
    r.edim = std::max(r.vdim, 0L);
    const Matrix<Scalar> m = conditions_matrix(x, d);
    if (m.rows() == 0) {
        std::vector<std::vector<Scalar>> id;
        for (std::size_t c = 0; c < monomial_count(d); ++c) {
            std::vector<Scalar> e(monomial_count(d), Scalar(x.field()));
            e[c] = Scalar(x.field(), 1);
            id.push_back(std::move(e));
        }
        r.basis = forms_from_vectors(id, d, x.field());
    } else {
        r.basis = forms_from_vectors(nullspace_basis(m, x.field()), d, x.field());
    }
    r.dim = static_cast<long>(r.basis.size());
    r.special = r.dim != r.edim;
    return r;
}

// Basis of I(X)_d; every form is checked to vanish to the required order.
inline std::vector<Form<Scalar>> system_basis(const FatPointScheme &x, unsigned d) {
    auto basis = dim_linear_system(x, d).basis;
    for (const auto &f : basis)
        for (const auto &fp : x.points())
            if (!vanishes_to_order(f, fp.point, fp.multiplicity))
                throw std::logic_error("system_basis: basis form fails a vanishing condition at " +
                                       fp.point.to_string());
    return basis;
}

// [f1(p) : ... : fk(p)], normalized so the first nonzero entry is 1.
inline std::vector<Scalar> rational_map_image(const std::vector<Form<Scalar>> &basis, const ProjectivePoint &p) {
    if (basis.empty())
        throw std::invalid_argument("rational_map_image: empty basis");
    std::vector<Scalar> img;
    for (const auto &f : basis)
        img.push_back(evaluate(f, p.coords()));
    std::size_t k = 0;
    while (k < img.size() && img[k].is_zero())
        ++k;
    if (k == img.size())
        throw BaseLocusError("rational_map_image: " + p.to_string() + " lies in the base locus");
    const Scalar inv = img[k].inverse();
    for (auto &s : img)
        s *= inv;
    return img;
}

namespace detail {

inline std::optional<std::uint64_t> mod_p(const Scalar &s) {
    if (!s.is_rational())
        return std::nullopt;
    const mpq_class &q = s.constant_term();
    const std::uint64_t den = modp::from_mpz(q.get_den());
    if (den == 0)
        return std::nullopt;
    return modp::mul(modp::from_mpz(q.get_num()), modp::inverse(den));
}

// Affine chart coordinates of p reduced mod p.
inline std::optional<std::pair<std::uint64_t, std::uint64_t>> chart_mod_p(const ProjectivePoint &p,
                                                                          std::size_t chart) {
    const auto [iu, iv] = chart_variables(chart);
    auto w = mod_p(p[chart]), u = mod_p(p[iu]), v = mod_p(p[iv]);
    if (!w || !u || !v || *w == 0)
        return std::nullopt;
    const std::uint64_t inv = modp::inverse(*w);
    return std::pair{modp::mul(*u, inv), modp::mul(*v, inv)};
}

} // namespace detail

// Derivative rows of a fat point reduced mod p, appended to a row-major buffer.
inline void append_rows_mod_p(std::vector<std::uint64_t> &out, std::uint64_t u, std::uint64_t v,
                              std::size_t chart, unsigned m, unsigned d) {
    const auto [iu, iv] = detail::chart_variables(chart);
    const auto mons = monomial_basis(d);
    std::vector<std::uint64_t> pu{1}, pv{1};
    for (unsigned k = 1; k <= d; ++k) {
        pu.push_back(modp::mul(pu.back(), u));
        pv.push_back(modp::mul(pv.back(), v));
    }
    for (unsigned order = 0; order < m; ++order)
        for (unsigned i = order + 1; i-- > 0;) {
            const unsigned j = order - i;
            for (const auto &mon : mons) {
                const unsigned eu = detail::monomial_exponent(mon, iu);
                const unsigned ev = detail::monomial_exponent(mon, iv);
                if (eu < i || ev < j) {
                    out.push_back(0);
                    continue;
                }
                const std::uint64_t c = modp::from_signed(detail::falling(eu, i) * detail::falling(ev, j));
                out.push_back(modp::mul(c, modp::mul(pu[eu - i], pv[ev - j])));
            }
        }
}

// Upper bound on dim I(X)_d from a rank computed mod 2^61-1 (rational schemes only).
inline std::optional<std::size_t> dim_mod_p_upper_bound(const FatPointScheme &x, unsigned d) {
    std::vector<std::uint64_t> buf;
    for (const auto &fp : x.points()) {
        const std::size_t chart = detail::chart_of(fp.point);
        const auto uv = detail::chart_mod_p(fp.point, chart);
        if (!uv)
            return std::nullopt;
        append_rows_mod_p(buf, uv->first, uv->second, chart, fp.multiplicity, d);
    }
    const std::size_t cols = monomial_count(d);
    const std::size_t rows = buf.size() / cols;
    return cols - modp::rank(buf, rows, cols);
}

} // namespace fatpoints
