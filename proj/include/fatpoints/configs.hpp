#pragma once

// Named configurations, parametrized families and generators for searches.

#include "field.hpp"
#include "geom.hpp"
#include "random.hpp"
#include "unexpected.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fatpoints {

class DomainError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// The nine points Z1..Z9 carrying the unexpected quartic.
inline PointConfiguration example_quartic_config(const FieldPtr &f = rational_field()) {
    const auto P = [&](long x, long y, long z) { return ProjectivePoint::of(f, x, y, z); };
    return PointConfiguration(f, {P(-1, 0, 1), P(0, -1, 1), P(1, 0, 1), P(0, 1, 1), P(0, 0, 1), P(1, -1, 0),
                                  P(1, 1, 0), P(0, 1, 0), P(1, 0, 0)});
}

enum class DiagonalPair { z5_z6, z5_z7, z6_z7 };

struct Quadrilateral {
    std::array<ProjectivePoint, 3> diagonal; // Z5, Z6, Z7
    // the two sides through each diagonal point
    std::array<std::array<ProjectiveLine, 2>, 3> sides;
};

inline Quadrilateral complete_quadrilateral(const std::array<ProjectivePoint, 4> &q) {
    if (!in_general_position(q))
        throw DegenerateInput("complete_quadrilateral: points not in general position");
    const auto L = [&](int i, int j) { return line_through(q[i], q[j]); };
    Quadrilateral out{{meet(L(0, 2), L(1, 3)), meet(L(0, 1), L(2, 3)), meet(L(0, 3), L(1, 2))},
                      {{{L(0, 2), L(1, 3)}, {L(0, 1), L(2, 3)}, {L(0, 3), L(1, 2)}}}};
    return out;
}

// Z1..Z4 given; Z5, Z6, Z7 the diagonal points; Z8, Z9 where the line through the
// chosen pair meets the two sides through the remaining diagonal point.
inline PointConfiguration example_from_quadrilateral(const std::array<ProjectivePoint, 4> &q, DiagonalPair pair) {
    const Quadrilateral quad = complete_quadrilateral(q);
    std::size_t i = 1, j = 2, rest = 0;
    if (pair == DiagonalPair::z5_z6) {
        i = 0, j = 1, rest = 2;
    } else if (pair == DiagonalPair::z5_z7) {
        i = 0, j = 2, rest = 1;
    }
    const ProjectiveLine l = line_through(quad.diagonal[i], quad.diagonal[j]);
    std::vector<ProjectivePoint> pts(q.begin(), q.end());
    pts.insert(pts.end(), quad.diagonal.begin(), quad.diagonal.end());
    pts.push_back(meet(l, quad.sides[rest][1]));
    pts.push_back(meet(l, quad.sides[rest][0]));
    return PointConfiguration(q[0].field(), std::move(pts));
}

inline PointConfiguration example_quartic_variant(DiagonalPair pair, const FieldPtr &f = rational_field()) {
    const auto ex = example_quartic_config(f);
    return example_from_quadrilateral({ex[0], ex[1], ex[2], ex[3]}, pair);
}

// Duals of the linear factors of (x^n - y^n)(x^n - z^n)(y^n - z^n), over Q(zeta_n).
inline PointConfiguration dual_fermat(unsigned n) {
    if (n < 3)
        throw std::invalid_argument("dual_fermat needs n >= 3");
    const FieldPtr f = cyclotomic_field(n);
    const Scalar zeta = primitive_root(f);
    const Scalar zero(f), one(f, 1);
    std::vector<ProjectivePoint> pts;
    Scalar w = one;
    std::vector<Scalar> powers;
    for (unsigned k = 0; k < n; ++k, w *= zeta)
        powers.push_back(-w);
    for (const auto &c : powers)
        pts.emplace_back(one, c, zero);
    for (const auto &c : powers)
        pts.emplace_back(one, zero, c);
    for (const auto &c : powers)
        pts.emplace_back(zero, one, c);
    return PointConfiguration(f, std::move(pts));
}

inline std::vector<unsigned> fermat_unexpected_range(unsigned n, const GeneralPointStrategy &s) {
    if (n < 3)
        throw std::invalid_argument("fermat_unexpected_range needs n >= 3");
    return unexpected_degrees(dual_fermat(n), 3, 2 * n - 3, s);
}

enum class Family { example_quartic, fermat, w5, prop31, prop33_case3, prop33_first, figure2_cubic };

inline std::string family_name(Family id) {
    switch (id) {
    case Family::example_quartic: return "example-quartic";
    case Family::fermat: return "fermat";
    case Family::w5: return "w5";
    case Family::prop31: return "prop31";
    case Family::prop33_case3: return "prop33-case3";
    case Family::prop33_first: return "prop33-first";
    case Family::figure2_cubic: return "figure2-cubic";
    }
    return "";
}

inline std::optional<Family> parse_family(const std::string &name) {
    for (auto id : {Family::example_quartic, Family::fermat, Family::w5, Family::prop31, Family::prop33_case3,
                    Family::prop33_first, Family::figure2_cubic})
        if (family_name(id) == name)
            return id;
    return std::nullopt;
}

// Number of scalar parameters; fermat takes its conductor n as the one parameter.
inline std::size_t family_arity(Family id) {
    switch (id) {
    case Family::example_quartic: return 0;
    case Family::prop31:
    case Family::prop33_case3: return 2;
    default: return 1;
    }
}

enum class DomainCheck { enforce, skip };

namespace detail {

struct FamilyBuilder {
    FieldPtr f;
    DomainCheck check;
    std::string name;

    void require(bool ok, const std::string &constraint) const {
        if (check == DomainCheck::enforce && !ok)
            throw DomainError(name + ": parameters violate " + constraint);
    }
    Scalar c(long v) const { return Scalar(f, v); }
    ProjectivePoint P(Scalar x, Scalar y, Scalar z) const { return {std::move(x), std::move(y), std::move(z)}; }
    PointConfiguration make(std::vector<ProjectivePoint> pts) const { return PointConfiguration(f, std::move(pts)); }
};

} // namespace detail

inline PointConfiguration family(Family id, const std::vector<Scalar> &params,
                                 DomainCheck check = DomainCheck::enforce) {
    if (params.size() != family_arity(id))
        throw std::invalid_argument(family_name(id) + " takes " + std::to_string(family_arity(id)) +
                                    " parameter(s), got " + std::to_string(params.size()));
    if (id == Family::example_quartic)
        return example_quartic_config();
    if (id == Family::fermat) {
        const Scalar &n = params[0];
        if (!n.is_rational() || n.constant_term().get_den() != 1 || n.constant_term() < 3 ||
            n.constant_term() > 1000)
            throw DomainError("fermat: n must be an integer >= 3");
        return dual_fermat(static_cast<unsigned>(n.constant_term().get_num().get_ui()));
    }
    const FieldPtr f = params[0].field();
    for (const auto &p : params)
        require_compatible(*f, *p.field());
    detail::FamilyBuilder b{f, check, family_name(id)};
    const Scalar zero = b.c(0), one = b.c(1);
    const Scalar &a = params[0];

    switch (id) {
    case Family::w5:
        b.require(a != zero, "a != 0");
        b.require(a != one, "a != 1");
        return b.make({b.P(one, zero, zero), b.P(zero, one, zero), b.P(zero, zero, one), b.P(one, one, one),
                       b.P(one, a, zero)});
    case Family::prop31: {
        const Scalar &bb = params[1];
        b.require(a != bb, "a != b");
        b.require(bb != one, "b != 1");
        b.require(a != one, "a != 1");
        b.require(a != zero, "a != 0");
        b.require(bb != zero, "b != 0");
        // S, R1, R2, R3, R4, Q1, Q2, Q3, Q4
        return b.make({b.P(zero, zero, one), b.P(one, zero, zero), b.P(zero, one, zero), b.P(one, one, zero),
                       b.P(a, bb, zero), b.P(a - bb, zero, one - bb), b.P(zero, a - bb, a - one),
                       b.P(one, one, one), b.P(a, bb, one)});
    }
    case Family::prop33_case3: {
        const Scalar &bb = params[1];
        const Scalar minus_one = b.c(-1);
        b.require(a != zero, "a != 0");
        b.require(bb != zero, "b != 0");
        b.require(a != bb, "a != b");
        b.require(!((a == minus_one && bb == one) || (a == one && bb == minus_one)), "{a,b} != {-1,1}");
        b.require(a != one, "a != 1 (R3 would lie on L_S)");
        b.require(bb != one, "b != 1 (R4 would lie on L_S)");
        // R1, R2, S1, S2, Q1, Q2, Q3, R3, R4
        return b.make({b.P(one, zero, zero), b.P(zero, one, zero), b.P(zero, zero, one), b.P(one, one, one),
                       b.P(one, zero, one), b.P(zero, one, one), b.P(one, one, b.c(2)), b.P(one, a, zero),
                       b.P(one, bb, zero)});
    }
    case Family::prop33_first:
        b.require(a != zero, "a != 0");
        b.require(a != one, "a != 1");
        // R1, R2, Q3, S1, R3, S2, Q2, Q1, R4
        return b.make({b.P(zero, zero, one), b.P(zero, one, zero), b.P(one, zero, zero), b.P(one, one, one),
                       b.P(zero, one, one), b.P(one, a, zero), b.P(one, a, one), b.P(one, one, one - a),
                       b.P(zero, one - a, one)});
    case Family::figure2_cubic:
        b.require(a != zero, "a != 0");
        // Z1..Z7; a = 1 gives the seven-point configuration with six 3-rich lines
        return b.make({b.P(one, zero, one), b.P(zero, one, one), b.P(one, -one, zero), b.P(one, zero, zero),
                       b.P(zero, one, zero), b.P(zero, zero, one), b.P(one, a, one)});
    default: break;
    }
    throw std::logic_error("unhandled family");
}

// r distinct points with integer coordinates in [-h, h], not all zero.
inline PointConfiguration random_config(std::size_t r, long h, std::uint64_t seed,
                                        const FieldPtr &f = rational_field()) {
    if (h < 1)
        throw std::invalid_argument("random_config: height must be positive");
    CounterRng rng(seed, streams::random_config, 0);
    std::vector<ProjectivePoint> pts;
    while (pts.size() < r) {
        const long x = rng.uniform(-h, h), y = rng.uniform(-h, h), z = rng.uniform(-h, h);
        if (x == 0 && y == 0 && z == 0)
            continue;
        const auto p = ProjectivePoint::of(f, x, y, z);
        if (std::find(pts.begin(), pts.end(), p) == pts.end())
            pts.push_back(p);
    }
    return PointConfiguration(f, std::move(pts));
}

enum class GridConstraint { none, four_rich_line };

struct SearchSpace {
    unsigned n = 2;      // coordinates in [0, n]
    std::size_t r = 3;   // configuration size
    GridConstraint constraint = GridConstraint::none;
    std::uint64_t seed = 0;

    void validate() const {
        if (n < 1)
            throw std::invalid_argument("search space needs n >= 1");
        if (r < 3)
            throw std::invalid_argument("search space needs r >= 3");
    }
};

// Affine grid points [x, y, 1], 0 <= x, y <= n, with a table of line ids.
class Grid {
  public:
    explicit Grid(unsigned n, const FieldPtr &f = rational_field()) : field_(f) {
        for (unsigned x = 0; x <= n; ++x)
            for (unsigned y = 0; y <= n; ++y)
                points_.push_back(ProjectivePoint::of(f, x, y, 1));
        const std::size_t m = points_.size();
        line_id_.assign(m * m, 0);
        std::vector<ProjectiveLine> lines;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) {
                const auto l = line_through(points_[i], points_[j]);
                auto it = std::find(lines.begin(), lines.end(), l);
                const std::size_t id = static_cast<std::size_t>(it - lines.begin());
                if (it == lines.end())
                    lines.push_back(l);
                line_id_[i * m + j] = line_id_[j * m + i] = id;
            }
        line_count_ = lines.size();
    }

    const FieldPtr &field() const noexcept { return field_; }
    const std::vector<ProjectivePoint> &points() const noexcept { return points_; }
    std::size_t size() const noexcept { return points_.size(); }
    std::size_t line_count() const noexcept { return line_count_; }
    std::size_t line_id(std::size_t i, std::size_t j) const { return line_id_[i * points_.size() + j]; }

    PointConfiguration config(const std::vector<std::size_t> &idx) const {
        std::vector<ProjectivePoint> pts;
        for (auto i : idx)
            pts.push_back(points_[i]);
        return PointConfiguration(field_, std::move(pts));
    }

    // Some line carries exactly four of the chosen points (C(4,2) = 6 pairs).
    bool has_four_rich_line(const std::vector<std::size_t> &idx, std::vector<unsigned> &scratch) const {
        scratch.assign(line_count_, 0);
        for (std::size_t a = 0; a < idx.size(); ++a)
            for (std::size_t b = a + 1; b < idx.size(); ++b)
                ++scratch[line_id(idx[a], idx[b])];
        for (auto c : scratch)
            if (c == 6)
                return true;
        return false;
    }

  private:
    FieldPtr field_;
    std::vector<ProjectivePoint> points_;
    std::vector<std::size_t> line_id_;
    std::size_t line_count_ = 0;
};

// Visit every r-subset of the grid (lexicographic index order) that meets the
// constraint. The visitor returns false to stop. Returns the number visited.
inline std::size_t for_each_grid_config(const Grid &grid, const SearchSpace &space,
                                        const std::function<bool(const std::vector<std::size_t> &)> &visit) {
    space.validate();
    const std::size_t m = grid.size(), r = space.r;
    if (r > m)
        return 0;
    std::vector<std::size_t> idx(r);
    for (std::size_t i = 0; i < r; ++i)
        idx[i] = i;
    std::vector<unsigned> scratch;
    std::size_t visited = 0;
    while (true) {
        if (space.constraint == GridConstraint::none || grid.has_four_rich_line(idx, scratch)) {
            ++visited;
            if (!visit(idx))
                return visited;
        }
        std::size_t i = r;
        while (i-- > 0 && idx[i] == m - r + i) {
        }
        if (i == static_cast<std::size_t>(-1))
            return visited;
        ++idx[i];
        for (std::size_t j = i + 1; j < r; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

inline std::vector<PointConfiguration> grid_configs(const SearchSpace &space) {
    const Grid grid(space.n);
    std::vector<PointConfiguration> out;
    for_each_grid_config(grid, space, [&](const std::vector<std::size_t> &idx) {
        out.push_back(grid.config(idx));
        return true;
    });
    return out;
}

} // namespace fatpoints
