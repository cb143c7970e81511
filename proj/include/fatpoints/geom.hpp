#pragma once

// Points and lines of the projective plane, incidence statistics, duality,
// projective transformations and equivalence of point sets.

#include "field.hpp"
#include "form.hpp"
#include "matrix.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fatpoints {

class DegenerateInput : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

// Scale so the first nonzero coordinate is 1.
inline Point3<Scalar> normalize_triple(Point3<Scalar> v) {
    std::size_t k = 0;
    while (k < 3 && v[k].is_zero())
        ++k;
    if (k == 3)
        throw DegenerateInput("homogeneous triple is zero");
    require_compatible(*v[0].field(), *v[1].field());
    require_compatible(*v[0].field(), *v[2].field());
    if (!v[k].is_one()) {
        const Scalar inv = v[k].inverse();
        for (std::size_t i = k; i < 3; ++i)
            v[i] *= inv;
    }
    return v;
}

inline Point3<Scalar> cross(const Point3<Scalar> &u, const Point3<Scalar> &v) {
    return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

inline std::strong_ordering compare_triples(const Point3<Scalar> &a, const Point3<Scalar> &b) {
    for (std::size_t i = 0; i < 3; ++i) {
        const auto c = a[i].canonical_compare(b[i]);
        if (c != 0)
            return c;
    }
    return std::strong_ordering::equal;
}

} // namespace detail

// Normalized homogeneous triple shared by points and lines.
class HomogeneousTriple {
  public:
    HomogeneousTriple(Scalar a, Scalar b, Scalar c)
        : v_(detail::normalize_triple({std::move(a), std::move(b), std::move(c)})) {}
    explicit HomogeneousTriple(Point3<Scalar> v) : v_(detail::normalize_triple(std::move(v))) {}

    const Point3<Scalar> &coords() const noexcept { return v_; }
    const Scalar &operator[](std::size_t i) const { return v_.at(i); }
    const FieldPtr &field() const noexcept { return v_[0].field(); }

    std::string to_string() const {
        return "[" + v_[0].to_string() + "," + v_[1].to_string() + "," + v_[2].to_string() + "]";
    }

  protected:
    Point3<Scalar> v_;
};

class ProjectivePoint : public HomogeneousTriple {
  public:
    using HomogeneousTriple::HomogeneousTriple;

    static ProjectivePoint of(const FieldPtr &f, long x, long y, long z) {
        return {Scalar(f, x), Scalar(f, y), Scalar(f, z)};
    }

    friend bool operator==(const ProjectivePoint &a, const ProjectivePoint &b) { return a.v_ == b.v_; }
    friend bool operator<(const ProjectivePoint &a, const ProjectivePoint &b) {
        return detail::compare_triples(a.v_, b.v_) < 0;
    }
};

class ProjectiveLine : public HomogeneousTriple {
  public:
    using HomogeneousTriple::HomogeneousTriple;

    bool contains(const ProjectivePoint &p) const {
        return (v_[0] * p[0] + v_[1] * p[1] + v_[2] * p[2]).is_zero();
    }

    Form<Scalar> as_form() const { return Form<Scalar>::linear(field(), v_[0], v_[1], v_[2]); }

    friend bool operator==(const ProjectiveLine &a, const ProjectiveLine &b) { return a.v_ == b.v_; }
    friend bool operator<(const ProjectiveLine &a, const ProjectiveLine &b) {
        return detail::compare_triples(a.v_, b.v_) < 0;
    }
};

// Ordered list of distinct points over one field.
class PointConfiguration {
  public:
    explicit PointConfiguration(FieldPtr field) : field_(std::move(field)) {}

    PointConfiguration(FieldPtr field, std::vector<ProjectivePoint> points)
        : field_(std::move(field)), points_(std::move(points)) {
        for (const auto &p : points_)
            require_compatible(*field_, *p.field());
        auto sorted = points_;
        std::sort(sorted.begin(), sorted.end());
        const auto dup = std::adjacent_find(sorted.begin(), sorted.end());
        if (dup != sorted.end())
            throw DegenerateInput("repeated point " + dup->to_string() + " in configuration");
    }

    const FieldPtr &field() const noexcept { return field_; }
    std::size_t size() const noexcept { return points_.size(); }
    const ProjectivePoint &operator[](std::size_t i) const { return points_.at(i); }
    const std::vector<ProjectivePoint> &points() const noexcept { return points_; }
    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }

    bool contains(const ProjectivePoint &p) const {
        return std::find(points_.begin(), points_.end(), p) != points_.end();
    }

    PointConfiguration with(const ProjectivePoint &p) const {
        auto pts = points_;
        pts.push_back(p);
        return PointConfiguration(field_, std::move(pts));
    }

    PointConfiguration subset(const std::vector<std::size_t> &indices) const {
        std::vector<ProjectivePoint> pts;
        for (auto i : indices)
            pts.push_back(points_.at(i));
        return PointConfiguration(field_, std::move(pts));
    }

    friend bool operator==(const PointConfiguration &a, const PointConfiguration &b) {
        return a.field_->compatible(*b.field_) && a.points_ == b.points_;
    }

  private:
    FieldPtr field_;
    std::vector<ProjectivePoint> points_;
};

// Re-express a configuration over a larger field (coordinates must be rational).
inline PointConfiguration embed(const PointConfiguration &z, const FieldPtr &field) {
    std::vector<ProjectivePoint> pts;
    for (const auto &p : z) {
        Point3<Scalar> v{Scalar(field), Scalar(field), Scalar(field)};
        for (std::size_t i = 0; i < 3; ++i) {
            if (!p[i].is_rational())
                throw FieldMismatch("embed: coordinate " + p[i].to_string() + " is not rational");
            v[i] = Scalar(field, p[i].constant_term());
        }
        pts.emplace_back(v);
    }
    return PointConfiguration(field, std::move(pts));
}

inline ProjectiveLine line_through(const ProjectivePoint &p, const ProjectivePoint &q) {
    if (p == q)
        throw DegenerateInput("line_through: points coincide");
    return ProjectiveLine(detail::cross(p.coords(), q.coords()));
}

inline ProjectivePoint meet(const ProjectiveLine &l, const ProjectiveLine &m) {
    if (l == m)
        throw DegenerateInput("meet: lines coincide");
    return ProjectivePoint(detail::cross(l.coords(), m.coords()));
}

inline bool collinear(const ProjectivePoint &p, const ProjectivePoint &q, const ProjectivePoint &r) {
    Matrix<Scalar> m(3, 3, Scalar(p.field()));
    for (std::size_t j = 0; j < 3; ++j) {
        m(0, j) = p[j];
        m(1, j) = q[j];
        m(2, j) = r[j];
    }
    return det3(m).is_zero();
}

struct IncidentLine {
    ProjectiveLine line;
    std::vector<std::size_t> points; // indices into the configuration, increasing
};

struct LineStats {
    std::vector<IncidentLine> lines; // every line through at least two points

    // number of lines with exactly k points, keyed by k >= 2
    std::map<std::size_t, std::size_t> histogram() const {
        std::map<std::size_t, std::size_t> h;
        for (const auto &l : lines)
            ++h[l.points.size()];
        return h;
    }

    std::size_t count(std::size_t k) const {
        std::size_t n = 0;
        for (const auto &l : lines)
            n += l.points.size() == k;
        return n;
    }

    std::size_t simple_count() const { return count(2); }

    std::size_t count_at_least(std::size_t k) const {
        std::size_t n = 0;
        for (const auto &l : lines)
            n += l.points.size() >= k;
        return n;
    }

    // number of k-rich lines through point i
    std::size_t lines_through(std::size_t i, std::size_t k) const {
        std::size_t n = 0;
        for (const auto &l : lines)
            if (l.points.size() == k && std::find(l.points.begin(), l.points.end(), i) != l.points.end())
                ++n;
        return n;
    }
};

inline LineStats analyze_lines(const PointConfiguration &z) {
    const std::size_t n = z.size();
    LineStats stats;
    std::vector<std::vector<bool>> done(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (done[i][j])
                continue;
            IncidentLine il{line_through(z[i], z[j]), {}};
            for (std::size_t k = 0; k < n; ++k)
                if (k == i || k == j || il.line.contains(z[k]))
                    il.points.push_back(k);
            for (auto a : il.points)
                for (auto b : il.points)
                    done[a][b] = true;
            stats.lines.push_back(std::move(il));
        }
    return stats;
}

inline std::vector<ProjectiveLine> dualize(const PointConfiguration &z) {
    std::vector<ProjectiveLine> out;
    for (const auto &p : z)
        out.emplace_back(p.coords());
    return out;
}

inline PointConfiguration dual_points(const std::vector<ProjectiveLine> &lines, const FieldPtr &field) {
    std::vector<ProjectivePoint> pts;
    for (const auto &l : lines)
        pts.emplace_back(l.coords());
    return PointConfiguration(field, std::move(pts));
}

// Distinct lines PQ for Q in Z \ {P}, in order of first appearance.
inline std::vector<ProjectiveLine> pencil_lines(const PointConfiguration &z, const ProjectivePoint &p) {
    if (!z.contains(p))
        throw std::invalid_argument("pencil_lines: point " + p.to_string() + " is not in the configuration");
    std::vector<ProjectiveLine> out;
    for (const auto &q : z) {
        if (q == p)
            continue;
        auto l = line_through(p, q);
        if (std::find(out.begin(), out.end(), l) == out.end())
            out.push_back(std::move(l));
    }
    return out;
}

inline Point3<Scalar> transform_coords(const Matrix<Scalar> &t, const Point3<Scalar> &v) {
    Point3<Scalar> r{Scalar(v[0].field()), Scalar(v[0].field()), Scalar(v[0].field())};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            if (!t(i, j).is_zero() && !v[j].is_zero())
                r[i] += t(i, j) * v[j];
    return r;
}

inline ProjectivePoint apply_transform(const Matrix<Scalar> &t, const ProjectivePoint &p) {
    return ProjectivePoint(transform_coords(t, p.coords()));
}

inline PointConfiguration apply_transform(const Matrix<Scalar> &t, const PointConfiguration &z) {
    if (det3(t).is_zero())
        throw SingularMatrix("apply_transform: singular matrix");
    std::vector<ProjectivePoint> pts;
    for (const auto &p : z)
        pts.push_back(apply_transform(t, p));
    return PointConfiguration(z.field(), std::move(pts));
}

// Lines transform by the inverse transpose.
inline ProjectiveLine apply_transform(const Matrix<Scalar> &t, const ProjectiveLine &l) {
    return ProjectiveLine(transform_coords(inverse3(t).transpose(), l.coords()));
}

inline bool in_general_position(const std::array<ProjectivePoint, 4> &q) {
    for (std::size_t skip = 0; skip < 4; ++skip) {
        std::vector<const ProjectivePoint *> t;
        for (std::size_t i = 0; i < 4; ++i)
            if (i != skip)
                t.push_back(&q[i]);
        if (collinear(*t[0], *t[1], *t[2]))
            return false;
    }
    return true;
}

namespace detail {

// Matrix sending e1, e2, e3, (1,1,1) to q0, q1, q2, q3.
inline Matrix<Scalar> frame_matrix(const std::array<ProjectivePoint, 4> &q) {
    const FieldPtr f = q[0].field();
    Matrix<Scalar> cols(3, 3, Scalar(f));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            cols(i, j) = q[j][i];
    const Point3<Scalar> lambda = transform_coords(inverse3(cols), q[3].coords());
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            cols(i, j) *= lambda[j];
    return cols;
}

} // namespace detail

// The projective transformation sending src[i] to dst[i], i = 0..3.
inline Matrix<Scalar> frame_transform(const std::array<ProjectivePoint, 4> &src,
                                      const std::array<ProjectivePoint, 4> &dst) {
    if (!in_general_position(src) || !in_general_position(dst))
        throw DegenerateInput("frame_transform: quadruple has three collinear points");
    const FieldPtr f = src[0].field();
    return multiply(detail::frame_matrix(dst), inverse3(detail::frame_matrix(src)), Scalar(f));
}

struct EquivalenceResult {
    bool equivalent = false;
    std::optional<Matrix<Scalar>> witness; // maps Z1 onto Z2 when equivalent
    std::size_t frame_trials = 0;
};

// Lexicographically smallest index quadruple of Z in linearly general position.
inline std::optional<std::array<std::size_t, 4>> anchor_quadruple(const PointConfiguration &z) {
    const std::size_t n = z.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c) {
                if (collinear(z[a], z[b], z[c]))
                    continue;
                for (std::size_t d = c + 1; d < n; ++d)
                    if (in_general_position({z[a], z[b], z[c], z[d]}))
                        return std::array<std::size_t, 4>{a, b, c, d};
            }
    return std::nullopt;
}

inline EquivalenceResult projective_equivalent(const PointConfiguration &z1, const PointConfiguration &z2) {
    require_compatible(*z1.field(), *z2.field());
    EquivalenceResult res;
    if (z1.size() != z2.size())
        return res;
    if (analyze_lines(z1).histogram() != analyze_lines(z2).histogram())
        return res;
    const auto anchor = anchor_quadruple(z1);
    if (!anchor)
        throw DegenerateInput("projective_equivalent: configuration has no four points in general position");
    const std::array<ProjectivePoint, 4> src{z1[(*anchor)[0]], z1[(*anchor)[1]], z1[(*anchor)[2]],
                                             z1[(*anchor)[3]]};
    const Matrix<Scalar> from_src = inverse3(detail::frame_matrix(src));

    auto target = z2.points();
    std::sort(target.begin(), target.end());
    const std::size_t n = z2.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (b == a)
                continue;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == a || c == b || collinear(z2[a], z2[b], z2[c]))
                    continue;
                for (std::size_t d = 0; d < n; ++d) {
                    if (d == a || d == b || d == c)
                        continue;
                    const std::array<ProjectivePoint, 4> dst{z2[a], z2[b], z2[c], z2[d]};
                    if (!in_general_position(dst))
                        continue;
                    ++res.frame_trials;
                    const Matrix<Scalar> t = multiply(detail::frame_matrix(dst), from_src, Scalar(z1.field()));
                    bool ok = true;
                    for (const auto &p : z1) {
                        if (!std::binary_search(target.begin(), target.end(), apply_transform(t, p))) {
                            ok = false;
                            break;
                        }
                    }
                    if (ok) {
                        res.equivalent = true;
                        res.witness = t;
                        return res;
                    }
                }
            }
        }
    return res;
}

} // namespace fatpoints
