#pragma once

// Claim checkers reproducing the results on unexpected curves, and the suite
// that runs them. Universal statements are checked on named instance
// corpora; a pass means no counterexample was found in the corpus.

#include "configs.hpp"
#include "field.hpp"
#include "form.hpp"
#include "geom.hpp"
#include "json_io.hpp"
#include "linsys.hpp"
#include "matrix.hpp"
#include "param_poly.hpp"
#include "random.hpp"
#include "unexpected.hpp"

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace fatpoints {

struct ClaimResult {
    enum class Status { pass, fail, skipped };

    std::string id;
    Status status = Status::pass;
    json measured = json::object();
    double runtime_seconds = 0;
    std::string corpus;
    std::optional<json> offending; // set on failure

    bool passed() const noexcept { return status == Status::pass; }
};

inline std::string status_name(ClaimResult::Status s) {
    switch (s) {
    case ClaimResult::Status::pass: return "pass";
    case ClaimResult::Status::fail: return "fail";
    case ClaimResult::Status::skipped: return "skipped";
    }
    return "";
}

inline json claim_to_json(const ClaimResult &r) {
    json j{{"id", r.id},
           {"status", status_name(r.status)},
           {"measured", r.measured},
           {"runtimeSeconds", r.runtime_seconds},
           {"corpus", r.corpus}};
    if (r.offending)
        j["offending"] = *r.offending;
    return j;
}

namespace detail {

// Times `body`, which fills in the result; a failure keeps the first offender.
class ClaimRun {
  public:
    ClaimRun(std::string id, std::string corpus) {
        r_.id = std::move(id);
        r_.corpus = std::move(corpus);
    }

    ClaimResult &result() { return r_; }
    json &measured() { return r_.measured; }

    void require(bool ok, const std::string &what, const json &instance = json()) {
        if (ok || r_.status == ClaimResult::Status::fail)
            return;
        r_.status = ClaimResult::Status::fail;
        r_.offending = json{{"check", what}, {"instance", instance}};
    }

    ClaimResult finish() {
        r_.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        return r_;
    }

  private:
    ClaimResult r_;
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline GeneralPointStrategy strategy(std::uint64_t seed, bool certify) {
    return certify ? GeneralPointStrategy::certified_with(seed)
                   : GeneralPointStrategy{GeneralPointStrategy::Mode::sampled, 3, 1000, seed};
}

inline ProjectivePoint random_affine_point(CounterRng &rng, const FieldPtr &f, long h) {
    return ProjectivePoint::of(f, rng.uniform(-h, h), rng.uniform(-h, h), 1);
}

// every second partial of g with respect to (x, y), in the order xx, xy, yy
inline std::array<Form<ParamPoly>, 3> second_partials(const Form<ParamPoly> &g) {
    const auto gx = g.derivative(Variable::x);
    return {gx.derivative(Variable::x), gx.derivative(Variable::y), g.derivative(Variable::y).derivative(Variable::y)};
}

} // namespace detail

// The three quartics through Z + 2P built from the lines of the example, with
// P = [a, b, 1] symbolic: the Hessian-type determinant of their second partials
// vanishes identically, each is singular at P, and they are independent.
inline ClaimResult check_hessian_certificate(std::uint64_t seed = 0) {
    detail::ClaimRun run("hessian-certificate", "example quartic configuration, P = [a,b,1] symbolic");
    const FieldPtr f = rational_field();
    const auto z = example_quartic_config(f);
    const Point3<ParamPoly> p{ParamPoly::var_a(f), ParamPoly::var_b(f), ParamPoly(f, 1)};
    const auto lifted = [&](const ProjectiveLine &l) {
        return Form<ParamPoly>::linear(f, ParamPoly(l[0]), ParamPoly(l[1]), ParamPoly(l[2]));
    };
    const auto l1 = lifted(line_through(z[0], z[2]));
    const auto l2 = lifted(line_through(z[1], z[3]));
    const auto l3 = lifted(line_through(z[5], z[6]));
    // M_j through P and Z_j: coefficients P x Z_j
    const auto m = [&](std::size_t j) {
        const auto &q = z[j - 1];
        const ParamPoly x(q[0]), y(q[1]), w(q[2]);
        return Form<ParamPoly>::linear(f, p[1] * w - p[2] * y, p[2] * x - p[0] * w, p[0] * y - p[1] * x);
    };
    const std::array<Form<ParamPoly>, 3> g{product({l1, l2, m(6), m(7)}), product({l1, l3, m(2), m(4)}),
                                           product({l2, l3, m(1), m(3)})};

    Matrix<ParamPoly> h(3, 3, ParamPoly(f));
    bool singular = true;
    for (std::size_t i = 0; i < 3; ++i) {
        const auto second = detail::second_partials(g[i]);
        for (std::size_t r = 0; r < 3; ++r)
            h(r, i) = evaluate(second[r], p);
        singular = singular && evaluate(g[i], p).is_zero() && evaluate(g[i].derivative(Variable::x), p).is_zero() &&
                   evaluate(g[i].derivative(Variable::y), p).is_zero();
    }
    const ParamPoly det = det3(h);
    long entry_degree = 0;
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c)
            entry_degree = std::max(entry_degree, h(r, c).total_degree());
    run.measured()["determinant"] = det.to_string();
    run.measured()["entryTotalDegree"] = entry_degree;
    run.measured()["singularAtP"] = singular;
    run.require(det.is_zero(), "determinant is the zero polynomial", det.to_string());
    run.require(singular, "each G_i is singular at P");

    // independence and membership at a random specialisation
    CounterRng rng(seed, streams::suite, 1);
    const Scalar a0(f, rng.uniform(-1000, 1000)), b0(f, rng.uniform(-1000, 1000));
    const ProjectivePoint pt(a0, b0, Scalar(f, 1));
    Matrix<Scalar> coeffs(3, monomial_count(4), Scalar(f));
    bool in_system = true;
    for (std::size_t i = 0; i < 3; ++i) {
        const auto gi = specialize(g[i], a0, b0);
        for (std::size_t c = 0; c < coeffs.cols(); ++c)
            coeffs(i, c) = gi.coefficients()[c];
        in_system = in_system && vanishes_to_order(gi, pt, 2);
        for (const auto &q : z)
            in_system = in_system && evaluate(gi, q.coords()).is_zero();
    }
    const std::size_t rank = exact_rank(coeffs);
    const auto dim = dim_linear_system(FatPointScheme(z).plus(pt, 2), 4).dim;
    run.measured()["specialization"] = point_to_json(pt);
    run.measured()["rank"] = rank;
    run.measured()["dimI(Z+2P)_4"] = dim;
    run.require(rank == 3, "G_1, G_2, G_3 linearly independent", point_to_json(pt));
    run.require(in_system && dim == 3, "G_1, G_2, G_3 form a basis of I(Z+2P)_4", point_to_json(pt));
    return run.finish();
}

// Example quartic: generic dim of I(Z+3P)_4 is 1 against threshold 0 in every
// mode, and I(Z+2P)_4 has dimension 3 with every basis form singular at P.
inline ClaimResult check_example_quartic(std::uint64_t seed = 0) {
    detail::ClaimRun run("example-quartic", "example quartic configuration; sample seeds s, s+1, s+2 and certified");
    const auto z = example_quartic_config();
    json modes = json::array();
    for (std::uint64_t s = seed; s < seed + 3; ++s) {
        const auto r = detect_unexpected(z, 4, detail::strategy(s, false));
        modes.push_back({{"seed", s}, {"genericDim", r.generic_dim}, {"threshold", r.threshold}});
        run.require(r.generic_dim == 1 && r.threshold == 0 && r.unexpected, "sampled generic dim 1 > 0",
                    unexpected_report_to_json(r));
        run.require(r.witness && vanishes_to_order(*r.witness, *r.witness_point, 3), "witness quartic is triple at P");
    }
    const auto c = detect_unexpected(z, 4, GeneralPointStrategy::certified_with(seed));
    modes.push_back({{"certified", true}, {"genericDim", c.generic_dim}, {"threshold", c.threshold}});
    run.require(c.certified && c.generic_dim == 1 && c.unexpected, "certified generic dim 1 > 0",
                unexpected_report_to_json(c));
    run.measured()["modes"] = modes;

    CounterRng rng(seed, streams::suite, 2);
    json doubles = json::array();
    for (int t = 0; t < 5; ++t) {
        const auto p = detail::random_affine_point(rng, z.field(), 1000);
        if (z.contains(p)) {
            --t;
            continue;
        }
        const auto basis = system_basis(FatPointScheme(z).plus(p, 2), 4);
        bool singular = true;
        for (const auto &g : basis)
            singular = singular && vanishes_to_order(g, p, 2);
        doubles.push_back({{"point", point_to_json(p)}, {"dim", basis.size()}});
        run.require(basis.size() == 3 && singular, "dim I(Z+2P)_4 = 3 with singular basis", point_to_json(p));
    }
    run.measured()["doublePoint"] = doubles;
    return run.finish();
}

// Structural hypothesis: |Z| = 2d+1, a d-rich line and a simple line that meet off Z.
inline bool two_and_four_hypothesis(const PointConfiguration &z, unsigned d) {
    if (z.size() != 2 * std::size_t{d} + 1)
        return false;
    const auto st = analyze_lines(z);
    for (const auto &rich : st.lines) {
        if (rich.points.size() != d)
            continue;
        for (const auto &simple : st.lines)
            if (simple.points.size() == 2 && !z.contains(meet(rich.line, simple.line)))
                return true;
    }
    return false;
}

inline ClaimResult check_two_and_four(const PointConfiguration &z, unsigned d, const GeneralPointStrategy &s) {
    detail::ClaimRun run("two-and-four", "single instance");
    if (!two_and_four_hypothesis(z, d)) {
        run.result().status = ClaimResult::Status::skipped;
        run.measured()["reason"] = "structural hypothesis not met";
        return run.finish();
    }
    const auto g = generic_dim(FatPointScheme(z), d - 1, d, s);
    run.measured()["genericDim"] = g.dim;
    run.require(g.dim == 0, "generic dim I(Z+(d-1)P)_d = 0", config_to_json(z));
    return run.finish();
}

// A random instance: d points on a line, the two points of a second line, and
// d-1 further points, all with small integer coordinates. Not checked here.
inline std::optional<PointConfiguration> two_and_four_candidate(unsigned d, std::uint64_t seed, std::uint64_t index,
                                                                long h = 12) {
    const FieldPtr f = rational_field();
    CounterRng rng(seed, streams::suite, 1000 * d + index);
    const auto rnd = [&] {
        while (true) {
            const long x = rng.uniform(-h, h), y = rng.uniform(-h, h), w = rng.uniform(-h, h);
            if (x || y || w)
                return ProjectivePoint::of(f, x, y, w);
        }
    };
    const auto a = rnd(), b = rnd();
    if (a == b)
        return std::nullopt;
    std::vector<ProjectivePoint> pts;
    for (unsigned k = 0; k < d; ++k) {
        const Scalar t(f, rng.uniform(-h, h)), u(f, rng.uniform(1, h));
        try {
            pts.emplace_back(u * a[0] + t * b[0], u * a[1] + t * b[1], u * a[2] + t * b[2]);
        } catch (const DegenerateInput &) {
            return std::nullopt;
        }
    }
    for (unsigned k = 0; k < d + 1; ++k)
        pts.push_back(rnd());
    try {
        return PointConfiguration(f, std::move(pts));
    } catch (const DegenerateInput &) {
        return std::nullopt;
    }
}

// At least `per_degree` structurally valid instances for each d in {3, 4}, plus
// the cubic frame of the seven-point configuration; invalid draws are skipped.
inline ClaimResult check_two_and_four_corpus(std::uint64_t seed, std::size_t per_degree = 100) {
    detail::ClaimRun run("two-and-four", "random instances per degree d in {3,4} and the seven-point cubic frame");
    const auto s = detail::strategy(seed, false);
    json per = json::object();
    for (unsigned d : {3u, 4u}) {
        std::size_t valid = 0, skipped = 0;
        for (std::uint64_t i = 0; valid < per_degree && i < 50 * per_degree; ++i) {
            const auto z = two_and_four_candidate(d, seed, i);
            if (!z) {
                ++skipped;
                continue;
            }
            const auto r = check_two_and_four(*z, d, s);
            if (r.status == ClaimResult::Status::skipped) {
                ++skipped;
                continue;
            }
            ++valid;
            run.require(r.passed(), "generic dim 0 for d = " + std::to_string(d), config_to_json(*z));
        }
        per[std::to_string(d)] = {{"valid", valid}, {"skipped", skipped}};
        run.require(valid >= per_degree, "enough valid instances for d = " + std::to_string(d));
    }
    run.measured()["instances"] = per;
    // the seven-point configuration: Z6 Z7 simple, Z1 Z2 Z3 a 3-rich line
    const auto fig = family(Family::figure2_cubic, {Scalar(rational_field(), 1)});
    const auto fr = check_two_and_four(fig, 3, s);
    run.measured()["sevenPointFrame"] = status_name(fr.status);
    run.require(fr.passed(), "seven-point frame has generic dim 0", config_to_json(fig));
    // the example quartic fails the hypothesis and is skipped
    const auto ex = check_two_and_four(example_quartic_config(), 4, s);
    run.measured()["exampleQuartic"] = status_name(ex.status);
    run.require(ex.status == ClaimResult::Status::skipped, "example quartic is filtered out");
    return run.finish();
}

// detect_unexpected(family(params), d) is false, except prop33-case3 at {a,b} = {-1,1}.
inline ClaimResult check_family_emptiness(Family id, const std::vector<Scalar> &params, unsigned d,
                                          const GeneralPointStrategy &s) {
    detail::ClaimRun run("family-emptiness", family_name(id));
    bool expect = false;
    DomainCheck check = DomainCheck::enforce;
    if (id == Family::prop33_case3 && params.size() == 2) {
        const Scalar one(params[0].field(), 1);
        const bool excluded = (params[0] == one && params[1] == -one) || (params[0] == -one && params[1] == one);
        expect = excluded;
        check = excluded ? DomainCheck::skip : DomainCheck::enforce;
    }
    const auto z = family(id, params, check);
    const auto r = detect_unexpected(z, d, s);
    json ps = json::array();
    for (const auto &p : params)
        ps.push_back(p.to_string());
    run.measured() = {{"family", family_name(id)}, {"params", ps},           {"degree", d},
                      {"dimZ", r.dim_z},           {"genericDim", r.generic_dim}, {"unexpected", r.unexpected}};
    run.require(r.unexpected == expect, expect ? "excluded case is unexpected" : "no unexpected curve",
                config_to_json(z));
    return run.finish();
}

inline ClaimResult check_family_emptiness_corpus(std::uint64_t seed, bool certify) {
    detail::ClaimRun run("family-emptiness", "prop31, prop33-case3 and prop33-first at listed parameters");
    const FieldPtr q = rational_field();
    const auto Q = [&](long n, long dd = 1) { return Scalar(q, mpq_class(n, dd)); };
    const FieldPtr f6 = cyclotomic_field(6);
    struct Case {
        Family id;
        std::vector<Scalar> params;
    };
    const std::vector<Case> cases{
        {Family::prop31, {Q(3), Q(5)}},
        {Family::prop31, {Q(-1, 2), Q(1, 4)}},
        {Family::prop31, {Q(2), Q(-3)}},
        {Family::prop31, {Q(-2), Q(1, 2)}},
        {Family::prop33_case3, {Q(2), Q(3)}},
        {Family::prop33_case3, {Q(3), Q(1, 3)}},
        {Family::prop33_case3, {Q(-1, 2), Q(-2)}},
        {Family::prop33_case3, {Q(-2), Q(-1, 2)}},
        {Family::prop33_case3, {Q(-1), Q(1)}},
        {Family::prop33_case3, {Q(1), Q(-1)}},
        {Family::prop33_first, {Q(2)}},
        {Family::prop33_first, {Q(-1)}},
        {Family::prop33_first, {primitive_root(f6)}},
    };
    json rows = json::array();
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const auto r = check_family_emptiness(cases[i].id, cases[i].params, 4, detail::strategy(seed + i, certify));
        rows.push_back(r.measured);
        run.require(r.passed(), "family case " + std::to_string(i), r.offending ? *r.offending : json());
    }
    run.measured()["cases"] = rows;
    return run.finish();
}

// No unexpected cubic on random seven-point sets (two coordinate heights),
// the seven-point configuration over Q and over Q(zeta_6), and no unexpected
// conic on random five-point sets.
inline ClaimResult check_cubic_nonexistence(std::uint64_t seed, std::size_t count = 500) {
    detail::ClaimRun run("cubic-nonexistence", "random 7-point configs (height 100 and 2), figure-2 cubic family, "
                                               "random 5-point configs for conics");
    const auto s = detail::strategy(seed, false);
    std::size_t checked = 0;
    for (std::size_t i = 0; i < count; ++i) {
        const auto z = random_config(7, i % 2 ? 2 : 100, seed * 1000003 + i);
        const auto r = detect_unexpected(z, 3, s);
        ++checked;
        run.require(!r.unexpected, "no unexpected cubic", config_to_json(z));
    }
    const FieldPtr f6 = cyclotomic_field(6);
    for (const Scalar &a : {Scalar(rational_field(), 1), Scalar(rational_field(), 2), primitive_root(f6)}) {
        const auto z = family(Family::figure2_cubic, {a});
        const auto r = detect_unexpected(z, 3, s);
        ++checked;
        run.measured()["figure2"][a.to_string() + " over " + a.field()->describe()] = r.unexpected;
        run.require(!r.unexpected, "figure-2 cubic family", config_to_json(z));
    }
    for (std::size_t i = 0; i < 10; ++i) {
        const auto z = random_config(5, 3, seed * 7919 + i);
        ++checked;
        run.require(!detect_unexpected(z, 2, s).unexpected, "no unexpected conic", config_to_json(z));
    }
    run.measured()["checked"] = checked;
    return run.finish();
}

// F3 combinatorics and absence of unexpected curves, F5 unexpected in degree 7.
inline ClaimResult check_fermat(std::uint64_t seed, bool certify) {
    detail::ClaimRun run("fermat", "dual Fermat configurations F3 and F5");
    const auto f3 = dual_fermat(3);
    const auto st = analyze_lines(f3);
    bool four_each = true;
    for (std::size_t i = 0; i < f3.size(); ++i)
        four_each = four_each && st.lines_through(i, 3) == 4;
    run.measured()["F3"] = {{"threeRich", st.count(3)},
                            {"simple", st.simple_count()},
                            {"atLeastFourRich", st.count_at_least(4)},
                            {"fourThreeRichPerPoint", four_each}};
    run.require(st.count(3) == 12 && st.simple_count() == 0 && st.count_at_least(4) == 0 && four_each,
                "F3 line counts");
    json degs = json::array();
    for (unsigned d = 2; d <= 4; ++d) {
        const auto r = detect_unexpected(f3, d, detail::strategy(seed, certify));
        degs.push_back({{"degree", d}, {"genericDim", r.generic_dim}, {"threshold", r.threshold}});
        run.require(!r.unexpected, "F3 not unexpected in degree " + std::to_string(d));
    }
    run.measured()["F3degrees"] = degs;
    const auto f5 = detect_unexpected(dual_fermat(5), 7, detail::strategy(seed, false));
    run.measured()["F5"] = {{"degree", 7}, {"genericDim", f5.generic_dim}, {"threshold", f5.threshold}};
    run.require(f5.unexpected, "F5 unexpected in degree 7");
    return run.finish();
}

// W5 = four general points and one more on a line through two of them.
inline ClaimResult check_w5(std::uint64_t seed, bool certify) {
    detail::ClaimRun run("w5-splitting", "w5(a) for a in {2, 3, -1}");
    json rows = json::array();
    for (long a : {2L, 3L, -1L}) {
        const auto z = family(Family::w5, {Scalar(rational_field(), a)});
        const auto st = splitting_type(z, detail::strategy(seed, certify));
        rows.push_back({{"a", a}, {"splitting", splitting_to_json(st)}});
        run.require(st.m.size() >= 3 && st.m[1] == 0 && st.m[2] == 2, "m(1) = 0, m(2) = 2", config_to_json(z));
        run.require(st.a == 2 && st.b == 2 && st.balanced, "splitting type (2,2)", config_to_json(z));
    }
    run.measured()["instances"] = rows;
    const auto ex = splitting_type(example_quartic_config(), detail::strategy(seed, false));
    run.measured()["exampleQuartic"] = splitting_to_json(ex);
    run.require(ex.a == 3 && ex.b == 5 && !ex.balanced, "example quartic splitting (3,5)");
    return run.finish();
}

inline ClaimResult check_dejonquieres(std::uint64_t seed, std::size_t count = 5) {
    detail::ClaimRun run("dejonquieres", "example quartic with seeded random P");
    const auto z = example_quartic_config();
    const FieldPtr f = z.field();
    CounterRng rng(seed, streams::suite, 3);
    json rows = json::array();
    for (std::size_t t = 0; t < count; ++t) {
        const auto p = detail::random_affine_point(rng, f, 1000);
        if (z.contains(p)) {
            --t;
            continue;
        }
        FatPointScheme x(f);
        x.add(p, 3);
        for (std::size_t i = 0; i < 6; ++i)
            x.add(z[i], 1);
        const auto basis = system_basis(x, 4);
        Matrix<Scalar> img(3, 3, Scalar(f));
        bool ok = basis.size() == 3;
        if (ok)
            for (std::size_t i = 0; i < 3; ++i) {
                const auto v = rational_map_image(basis, z[6 + i]);
                for (std::size_t c = 0; c < 3; ++c)
                    img(i, c) = v[c];
            }
        const Scalar det = ok ? det3(img) : Scalar(f, 1);
        // degree of the image of a general line: d^2 - m_P^2 - sum of simple base points
        const long image_degree = 4L * 4 - 3L * 3 - 6;
        rows.push_back({{"point", point_to_json(p)}, {"basisDim", basis.size()}, {"determinant", det.to_string()}});
        run.measured()["imageDegree"] = image_degree;
        run.require(ok, "basis of 3P + Z1 + ... + Z6 in degree 4 has dimension 3", point_to_json(p));
        run.require(det.is_zero(), "images of Z7, Z8, Z9 collinear", point_to_json(p));
        run.require(image_degree == 1, "degree bookkeeping");
    }
    run.measured()["instances"] = rows;
    return run.finish();
}

inline ClaimResult check_equivalence_variants() {
    detail::ClaimRun run("equivalence-variants", "three constructions of the example; example vs F3");
    const std::array<DiagonalPair, 3> pairs{DiagonalPair::z5_z6, DiagonalPair::z5_z7, DiagonalPair::z6_z7};
    json rows = json::array();
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) {
            const auto a = example_quartic_variant(pairs[i]), b = example_quartic_variant(pairs[j]);
            const auto r = projective_equivalent(a, b);
            rows.push_back({{"pair", {i, j}}, {"equivalent", r.equivalent}, {"frameTrials", r.frame_trials}});
            run.require(r.equivalent, "variants equivalent", {config_to_json(a), config_to_json(b)});
        }
    run.measured()["variants"] = rows;
    const auto f3 = dual_fermat(3);
    const auto r = projective_equivalent(embed(example_quartic_config(), f3.field()), f3);
    run.measured()["exampleVsF3"] = r.equivalent;
    run.require(!r.equivalent, "example not equivalent to F3");
    return run.finish();
}

struct SearchReport {
    std::size_t visited = 0;       // configurations meeting the constraint
    std::size_t fast_rejected = 0; // full rank mod p at the fixed sample
    std::size_t exact_checked = 0;
    std::vector<PointConfiguration> hits;
    std::vector<bool> equivalent_to_example;
    double seconds = 0;
};

// Exhaustive search of the grid for r-point configurations with an unexpected
// curve of degree d. Every configuration is first tested mod p at one fixed
// sample point P: full rank of the conditions of Z + (d-1)P proves generic
// dimension 0. The rest go through detect_unexpected. Rows are reduced
// incrementally along the lexicographic enumeration.
inline SearchReport search_grid(const SearchSpace &space, unsigned d, const GeneralPointStrategy &s,
                                const std::vector<PointConfiguration> &injected = {}) {
    space.validate();
    const auto start = std::chrono::steady_clock::now();
    const Grid grid(space.n);
    const std::size_t cols = monomial_count(d);
    const std::size_t m = grid.size(), r = space.r;
    const auto example = example_quartic_config();
    SearchReport rep;

    const auto exact = [&](const PointConfiguration &z) {
        ++rep.exact_checked;
        if (detect_unexpected(z, d, s).unexpected) {
            rep.hits.push_back(z);
            rep.equivalent_to_example.push_back(z.field() == example.field() &&
                                                projective_equivalent(example, z).equivalent);
        }
    };

    // fixed sample point for the mod-p filter; its rows seed the echelon form
    CounterRng rng(space.seed, streams::suite, 4);
    const std::uint64_t pu = modp::from_signed(rng.uniform(-1000000, 1000000));
    const std::uint64_t pv = modp::from_signed(rng.uniform(-1000000, 1000000));
    std::vector<std::uint64_t> p_rows;
    append_rows_mod_p(p_rows, pu, pv, 2, d - 1, d);
    std::vector<std::vector<std::uint64_t>> point_row(m);
    for (std::size_t i = 0; i < m; ++i) {
        const auto uv = detail::chart_mod_p(grid.points()[i], 2);
        append_rows_mod_p(point_row[i], uv->first, uv->second, 2, 1, d);
    }

    // echelon rows with a unit pivot; level k holds the state after k grid points
    struct Echelon {
        std::vector<std::vector<std::uint64_t>> rows;
        std::vector<std::size_t> pivots;
        bool reduce_and_add(std::vector<std::uint64_t> v) {
            for (std::size_t k = 0; k < rows.size(); ++k) {
                const std::uint64_t c = v[pivots[k]];
                if (c == 0)
                    continue;
                for (std::size_t j = 0; j < v.size(); ++j)
                    if (rows[k][j])
                        v[j] = modp::sub(v[j], modp::mul(c, rows[k][j]));
            }
            std::size_t p = 0;
            while (p < v.size() && v[p] == 0)
                ++p;
            if (p == v.size())
                return false;
            const std::uint64_t inv = modp::inverse(v[p]);
            for (auto &x : v)
                x = modp::mul(x, inv);
            rows.push_back(std::move(v));
            pivots.push_back(p);
            return true;
        }
    };
    std::vector<Echelon> level(r + 1);
    const std::size_t p_count = p_rows.size() / cols;
    for (std::size_t i = 0; i < p_count; ++i)
        level[0].reduce_and_add(std::vector<std::uint64_t>(p_rows.begin() + i * cols, p_rows.begin() + (i + 1) * cols));

    std::vector<std::size_t> idx(r);
    std::vector<unsigned> scratch;
    std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t depth, std::size_t from) {
        if (depth == r) {
            if (space.constraint == GridConstraint::four_rich_line && !grid.has_four_rich_line(idx, scratch))
                return;
            ++rep.visited;
            if (level[r].rows.size() == cols) {
                ++rep.fast_rejected;
                return;
            }
            exact(grid.config(idx));
            return;
        }
        for (std::size_t i = from; i + (r - depth) <= m; ++i) {
            idx[depth] = i;
            level[depth + 1] = level[depth];
            level[depth + 1].reduce_and_add(point_row[i]);
            walk(depth + 1, i + 1);
        }
    };
    if (r <= m)
        walk(0, 0);
    for (const auto &z : injected) {
        ++rep.visited;
        exact(z);
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

inline json search_report_to_json(const SearchReport &rep) {
    json hits = json::array();
    for (std::size_t i = 0; i < rep.hits.size(); ++i)
        hits.push_back({{"config", config_to_json(rep.hits[i])}, {"equivalentToExample", rep.equivalent_to_example[i]}});
    return {{"visited", rep.visited},
            {"fastRejected", rep.fast_rejected},
            {"exactChecked", rep.exact_checked},
            {"hitCount", rep.hits.size()},
            {"hits", hits},
            {"seconds", rep.seconds}};
}

// Uniqueness at desk scale: random nine-point sets have no unexpected quartic,
// every hit of the grid search with a 4-rich line is equivalent to the example,
// and the example injected into a stream is found exactly once.
inline ClaimResult check_uniqueness_search(std::uint64_t seed, unsigned grid_n = 4, std::size_t random_count = 200) {
    detail::ClaimRun run("uniqueness-search", "random 9-point configs (height 100); 9-point subsets of the [0," +
                                                  std::to_string(grid_n) +
                                                  "]^2 grid with a 4-rich line; example injected");
    const auto s = detail::strategy(seed, false);
    std::size_t random_hits = 0;
    for (std::size_t i = 0; i < random_count; ++i) {
        const auto z = random_config(9, 100, seed * 1000033 + i);
        const bool hit = detect_unexpected(z, 4, s).unexpected;
        random_hits += hit;
        run.require(!hit, "random configuration has no unexpected quartic", config_to_json(z));
    }
    run.measured()["random"] = {{"count", random_count}, {"hits", random_hits}};

    const auto grid = search_grid({grid_n, 9, GridConstraint::four_rich_line, seed}, 4, s);
    run.measured()["grid"] = search_report_to_json(grid);
    for (std::size_t i = 0; i < grid.hits.size(); ++i)
        run.require(grid.equivalent_to_example[i], "grid hit equivalent to the example", config_to_json(grid.hits[i]));

    // a small stream of random sets with the example (in a random frame) inserted
    std::vector<PointConfiguration> stream;
    for (std::size_t i = 0; i < 5; ++i)
        stream.push_back(random_config(9, 100, seed * 31 + 17 + i));
    CounterRng rng(seed, streams::transform, 0);
    Matrix<Scalar> t(3, 3, Scalar(rational_field()));
    do {
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                t(i, j) = Scalar(rational_field(), rng.uniform(-5, 5));
    } while (det3(t).is_zero());
    stream.insert(stream.begin() + 2, apply_transform(t, example_quartic_config()));
    const auto inj = search_grid({1, 9, GridConstraint::none, seed}, 4, s, stream);
    run.measured()["injected"] = {{"hitCount", inj.hits.size()},
                                  {"equivalent", inj.hits.size() == 1 && inj.equivalent_to_example[0]}};
    run.require(inj.hits.size() == 1 && inj.equivalent_to_example[0], "injected example found exactly once");
    return run.finish();
}

// Ten-point supersets Z + Q of the example (Q a grid point or a point on a
// 4-rich line) have no unexpected quartic; neither do its 8-point subsets.
inline ClaimResult check_superset_persistence(std::uint64_t seed, unsigned grid_n = 4) {
    detail::ClaimRun run("superset-persistence", "example plus one point of the [0," + std::to_string(grid_n) +
                                                     "]^2 grid or of a 4-rich line; 8-point subsets");
    const auto ex = example_quartic_config();
    const FieldPtr f = ex.field();
    const auto s = detail::strategy(seed, false);
    std::vector<ProjectivePoint> extra;
    for (unsigned x = 0; x <= grid_n; ++x)
        for (unsigned y = 0; y <= grid_n; ++y)
            extra.push_back(ProjectivePoint::of(f, x, y, 1));
    // points on the three 4-rich lines: y = 0, x = 0, z = 0
    for (long t : {2L, 3L, -5L}) {
        extra.push_back(ProjectivePoint::of(f, t, 0, 1));
        extra.push_back(ProjectivePoint::of(f, 0, t, 1));
        extra.push_back(ProjectivePoint::of(f, 1, t, 0));
    }
    std::size_t tested = 0;
    for (const auto &q : extra) {
        if (ex.contains(q))
            continue;
        const auto v = ex.with(q);
        ++tested;
        run.require(!detect_unexpected(v, 4, s).unexpected, "ten-point superset not unexpected", config_to_json(v));
    }
    std::size_t subsets = 0;
    for (std::size_t drop = 0; drop < ex.size(); ++drop) {
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < ex.size(); ++i)
            if (i != drop)
                keep.push_back(i);
        const auto v = ex.subset(keep);
        ++subsets;
        run.require(!detect_unexpected(v, 4, s).unexpected, "8-point subset not unexpected", config_to_json(v));
    }
    run.measured()["supersetsTested"] = tested;
    run.measured()["subsetsTested"] = subsets;
    return run.finish();
}

// Sampled and certified generic dims agree on random small instances, and
// dim >= edim for every system computed along the way.
inline ClaimResult check_oracle_coherence(std::uint64_t seed, std::size_t count = 50) {
    detail::ClaimRun run("oracle-coherence", "random small instances: 3-8 points of height 3, degree 2-5");
    CounterRng rng(seed, streams::suite, 5);
    std::size_t systems = 0, agree = 0;
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t r = static_cast<std::size_t>(rng.uniform(3, 8));
        const unsigned d = static_cast<unsigned>(rng.uniform(2, 5));
        const unsigned mult = static_cast<unsigned>(rng.uniform(1, d));
        const auto z = random_config(r, 3, seed * 7777 + i);
        const FatPointScheme base(z);
        const auto sampled = generic_dim(base, mult, d, detail::strategy(seed + i, false));
        const auto cert = generic_dim(base, mult, d, detail::strategy(seed + i, true));
        agree += sampled.dim == cert.dim;
        run.require(sampled.dim == cert.dim, "sampled and certified agree",
                    {{"config", config_to_json(z)}, {"degree", d}, {"multiplicity", mult}});
        const auto check_system = [&](const FatPointScheme &x) {
            const auto rep = dim_linear_system(x, d);
            ++systems;
            run.require(rep.dim >= rep.edim, "dim >= edim", {{"config", config_to_json(z)}, {"degree", d}});
        };
        check_system(base);
        for (const auto &smp : sampled.samples)
            check_system(base.plus(smp.point, mult));
    }
    run.measured()["instances"] = count;
    run.measured()["agreeing"] = agree;
    run.measured()["systemsChecked"] = systems;
    return run.finish();
}

struct SuiteOptions {
    std::uint64_t seed = 0;
    bool certify = false;
    unsigned grid_n = 4;
};

inline std::vector<std::string> suite_claim_ids() {
    return {"example-quartic", "hessian-certificate", "fermat",           "w5-splitting",
            "dejonquieres",    "equivalence-variants", "two-and-four",    "family-emptiness",
            "cubic-nonexistence", "uniqueness-search", "superset-persistence", "oracle-coherence"};
}

inline ClaimResult run_claim(const std::string &id, const SuiteOptions &o) {
    if (id == "example-quartic")
        return check_example_quartic(o.seed);
    if (id == "hessian-certificate")
        return check_hessian_certificate(o.seed);
    if (id == "fermat")
        return check_fermat(o.seed, o.certify);
    if (id == "w5-splitting")
        return check_w5(o.seed, o.certify);
    if (id == "dejonquieres")
        return check_dejonquieres(o.seed);
    if (id == "equivalence-variants")
        return check_equivalence_variants();
    if (id == "two-and-four")
        return check_two_and_four_corpus(o.seed);
    if (id == "family-emptiness")
        return check_family_emptiness_corpus(o.seed, o.certify);
    if (id == "cubic-nonexistence")
        return check_cubic_nonexistence(o.seed);
    if (id == "uniqueness-search")
        return check_uniqueness_search(o.seed, o.grid_n);
    if (id == "superset-persistence")
        return check_superset_persistence(o.seed, o.grid_n);
    if (id == "oracle-coherence")
        return check_oracle_coherence(o.seed);
    throw std::invalid_argument("unknown claim id \"" + id + "\"");
}

inline std::vector<ClaimResult> run_suite(const SuiteOptions &o,
                                          const std::function<void(const ClaimResult &)> &on_result = {}) {
    std::vector<ClaimResult> out;
    for (const auto &id : suite_claim_ids()) {
        out.push_back(run_claim(id, o));
        if (on_result)
            on_result(out.back());
    }
    return out;
}

inline json suite_to_json(const std::vector<ClaimResult> &results, const SuiteOptions &o) {
    json claims = json::array();
    bool all = true;
    for (const auto &r : results) {
        claims.push_back(claim_to_json(r));
        all = all && r.passed();
    }
    return {{"suite", "paper"},
            {"seed", o.seed},
            {"certify", o.certify},
            {"gridN", o.grid_n},
            {"passed", all},
            {"claims", claims}};
}

} // namespace fatpoints
