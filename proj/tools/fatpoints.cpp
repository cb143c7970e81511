// fatpoints: command-line front end for the library.
//
// Every subcommand prints JSON to stdout (or a table with --pretty). Errors go
// to stderr as {"error": {"code": ..., "message": ...}}.
// Exit codes: 0 success, 1 claim failure, 2 usage error, 3 input error.

#include <fatpoints/fatpoints.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace fatpoints;

namespace {

enum Exit { ok = 0, claim_failure = 1, usage = 2, input = 3 };

struct CliError {
    Exit exit;
    std::string code;
    std::string message;
};

int report_error(const CliError &e) {
    std::cerr << json{{"error", {{"code", e.code}, {"message", e.message}}}}.dump() << "\n";
    return e.exit;
}

struct Options {
    std::string input, input2, output = "-", family, suite = "paper", constraint = "four-rich-line";
    std::vector<std::string> params;
    unsigned degree = 4, max_degree = 6, samples = 3, n = 3, points = 9, grid = 4;
    long height = 1000, gen_height = 100;
    std::uint64_t seed = 0;
    bool certify = false, pretty = false;

    GeneralPointStrategy strategy() const {
        GeneralPointStrategy s;
        s.mode = certify ? GeneralPointStrategy::Mode::certified : GeneralPointStrategy::Mode::sampled;
        s.samples = samples;
        s.height = height;
        s.seed = seed;
        return s;
    }
};

std::string read_input(const std::string &path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in)
        throw CliError{input, "file", "cannot open " + path};
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const Options &o, const std::string &text) {
    if (o.output == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(o.output);
    if (!out)
        throw CliError{input, "file", "cannot write " + o.output};
    out << text;
}

void emit(const Options &o, const json &j, const std::string &table) {
    write_output(o, o.pretty ? table : j.dump(2) + "\n");
}

PointConfiguration load(const std::string &path) { return config_from_text(read_input(path)); }

std::string histogram_table(const LineStats &st) {
    std::ostringstream t;
    t << "points per line  lines\n";
    for (const auto &[k, n] : st.histogram())
        t << "  " << k << (k == 2 ? " (simple)" : k >= 3 ? " (" + std::to_string(k) + "-rich)" : "") << "  " << n
          << "\n";
    return t.str();
}

int cmd_analyze(const Options &o) {
    const auto z = load(o.input);
    const auto st = analyze_lines(z);
    json systems = json::array();
    std::ostringstream t;
    t << "field " << z.field()->describe() << ", " << z.size() << " points\n" << histogram_table(st);
    t << "degree  vdim  edim  dim  special\n";
    for (unsigned d = 1; d <= o.max_degree; ++d) {
        auto r = dim_linear_system(FatPointScheme(z), d);
        t << "  " << d << "  " << r.vdim << "  " << r.edim << "  " << r.dim << "  " << (r.special ? "yes" : "no")
          << "\n";
        r.basis.clear();
        auto j = linsys_report_to_json(r);
        j.erase("basis");
        systems.push_back(j);
    }
    emit(o, {{"field", field_to_json(*z.field())}, {"size", z.size()}, {"lines", line_stats_to_json(st)},
             {"systems", systems}},
         t.str());
    return ok;
}

int cmd_unexpected(const Options &o) {
    const auto z = load(o.input);
    const auto r = detect_unexpected(z, o.degree, o.strategy());
    std::ostringstream t;
    t << "degree " << r.degree << ": dim I(Z)_d = " << r.dim_z << ", generic dim I(Z+(d-1)P)_d = " << r.generic_dim
      << ", threshold " << r.threshold << (r.certified ? " (certified)" : " (sampled)") << "\n"
      << (r.unexpected ? "unexpected curve: yes\n" : "unexpected curve: no\n");
    if (r.witness)
        t << "witness at " << r.witness_point->to_string() << ": " << to_string(*r.witness) << "\n";
    emit(o, unexpected_report_to_json(r), t.str());
    return ok;
}

int cmd_splitting(const Options &o) {
    const auto z = load(o.input);
    const auto st = splitting_type(z, o.strategy());
    std::ostringstream t;
    t << "m(j):";
    for (auto v : st.m)
        t << " " << v;
    t << "\nsplitting type (" << st.a << "," << st.b << "), " << (st.balanced ? "balanced" : "unbalanced") << "\n";
    emit(o, splitting_to_json(st), t.str());
    return ok;
}

int cmd_gen(const Options &o) {
    PointConfiguration z = example_quartic_config();
    if (o.family == "random") {
        z = random_config(o.points, o.gen_height, o.seed);
    } else {
        const auto id = parse_family(o.family);
        if (!id)
            throw CliError{usage, "usage", "unknown family \"" + o.family + "\""};
        std::vector<Scalar> params;
        FieldPtr f = rational_field();
        if (*id == Family::fermat) {
            params.emplace_back(f, static_cast<long>(o.n));
        } else {
            for (const auto &p : o.params) {
                // "zeta_k" selects the primitive k-th root of unity
                if (p.rfind("zeta_", 0) == 0) {
                    const FieldPtr fk = cyclotomic_field(static_cast<unsigned>(std::stoul(p.substr(5))));
                    params.push_back(primitive_root(fk));
                } else {
                    params.push_back(Scalar::parse(f, p));
                }
            }
        }
        z = family(*id, params);
    }
    std::ostringstream t;
    for (const auto &p : z)
        t << p.to_string() << "\n";
    emit(o, config_to_json(z), t.str());
    return ok;
}

json matrix_to_json(const Matrix<Scalar> &m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(m(i, j).to_string());
        rows.push_back(row);
    }
    return rows;
}

int cmd_equiv(const Options &o) {
    auto a = load(o.input), b = load(o.input2);
    // a rational configuration is compared inside the other one's field
    if (a.field()->degree() == 1 && b.field()->degree() > 1)
        a = embed(a, b.field());
    else if (b.field()->degree() == 1 && a.field()->degree() > 1)
        b = embed(b, a.field());
    const auto r = projective_equivalent(a, b);
    json j{{"equivalent", r.equivalent}, {"frameTrials", r.frame_trials}};
    if (r.witness)
        j["witness"] = matrix_to_json(*r.witness);
    emit(o, j, std::string(r.equivalent ? "equivalent" : "not equivalent") + " (" + std::to_string(r.frame_trials) +
                   " frame trials)\n");
    return ok;
}

int cmd_search(const Options &o) {
    GridConstraint c = GridConstraint::none;
    if (o.constraint == "four-rich-line")
        c = GridConstraint::four_rich_line;
    else if (o.constraint != "none")
        throw CliError{usage, "usage", "unknown constraint \"" + o.constraint + "\""};
    const SearchSpace space{o.grid, o.points, c, o.seed};
    const auto rep = search_grid(space, o.degree, o.strategy());
    bool all_equivalent = true;
    for (bool e : rep.equivalent_to_example)
        all_equivalent = all_equivalent && e;
    std::ostringstream t;
    t << "visited " << rep.visited << ", rejected mod p " << rep.fast_rejected << ", exact " << rep.exact_checked
      << ", hits " << rep.hits.size() << "\n";
    for (std::size_t i = 0; i < rep.hits.size(); ++i)
        t << "hit " << i << (rep.equivalent_to_example[i] ? " equivalent to the example\n" : " NOT equivalent\n");
    json j = search_report_to_json(rep);
    j["allEquivalentToExample"] = all_equivalent;
    emit(o, j, t.str());
    return ok;
}

int cmd_verify(const Options &o) {
    if (o.suite != "paper")
        throw CliError{usage, "usage", "unknown suite \"" + o.suite + "\""};
    const SuiteOptions so{o.seed, o.certify, o.grid};
    const auto results = run_suite(so, [](const ClaimResult &r) {
        std::cerr << r.id << ": " << status_name(r.status) << " (" << r.runtime_seconds << " s)\n";
    });
    const json j = suite_to_json(results, so);
    std::ostringstream t;
    for (const auto &r : results)
        t << (r.passed() ? "PASS " : "FAIL ") << r.id << "  " << r.runtime_seconds << " s\n";
    emit(o, j, t.str());
    return j["passed"].get<bool>() ? ok : claim_failure;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Fat-point linear systems and unexpected plane curves"};
    app.require_subcommand(1);
    Options o;

    const auto strategy_flags = [&](CLI::App *c) {
        c->add_option("--samples", o.samples, "general-point samples")->check(CLI::Range(1u, 1000u));
        c->add_option("--height", o.height, "coordinate bound for samples")->check(CLI::Range(2L, 1000000000L));
        c->add_option("--seed", o.seed, "random seed");
        c->add_flag("--certify", o.certify, "certify the generic rank symbolically");
    };
    const auto common = [&](CLI::App *c) {
        c->add_flag("--pretty", o.pretty, "human-readable table instead of JSON");
        c->add_option("-o,--output", o.output, "output file (default stdout)");
    };

    auto *analyze = app.add_subcommand("analyze", "line statistics and dim I(Z)_d");
    analyze->add_option("config", o.input, "configuration JSON ('-' for stdin)")->required();
    analyze->add_option("--max-degree", o.max_degree, "largest degree to report")->check(CLI::Range(1u, 60u));
    common(analyze);

    auto *unexpected = app.add_subcommand("unexpected", "detect an unexpected curve of degree d");
    unexpected->add_option("config", o.input)->required();
    unexpected->add_option("-d,--degree", o.degree, "degree d >= 2")->check(CLI::Range(2u, 60u));
    strategy_flags(unexpected);
    common(unexpected);

    auto *splitting = app.add_subcommand("splitting", "generic multiplicity dimensions and splitting type");
    splitting->add_option("config", o.input)->required();
    strategy_flags(splitting);
    common(splitting);

    auto *gen = app.add_subcommand("gen", "emit a named, parametrized or random configuration");
    gen->add_option("family", o.family, "family name or 'random'")->required();
    gen->add_option("--param", o.params, "family parameter (rational or zeta_k), repeatable");
    gen->add_option("--n", o.n, "Fermat conductor")->check(CLI::Range(3u, 60u));
    gen->add_option("--points", o.points, "random: number of points")->check(CLI::Range(1u, 1000u));
    gen->add_option("--height", o.gen_height, "random: coordinate bound")->check(CLI::Range(1L, 1000000000L));
    gen->add_option("--seed", o.seed, "random: seed");
    common(gen);

    auto *equiv = app.add_subcommand("equiv", "decide projective equivalence of two configurations");
    equiv->add_option("config1", o.input)->required();
    equiv->add_option("config2", o.input2)->required();
    common(equiv);

    auto *search = app.add_subcommand("search", "exhaustive grid search for unexpected curves");
    search->add_option("--grid", o.grid, "grid side N (points [x,y,1], 0 <= x,y <= N)")->check(CLI::Range(1u, 10u));
    search->add_option("--points", o.points, "configuration size")->check(CLI::Range(3u, 100u));
    search->add_option("-d,--degree", o.degree, "degree d >= 2")->check(CLI::Range(2u, 20u));
    search->add_option("--constraint", o.constraint, "four-rich-line or none");
    strategy_flags(search);
    common(search);

    auto *verify = app.add_subcommand("verify", "run the claim suite");
    verify->add_option("--suite", o.suite, "suite name")->required();
    verify->add_option("--seed", o.seed, "suite seed");
    verify->add_flag("--certify", o.certify, "certified generic ranks where supported");
    verify->add_option("--grid", o.grid, "grid side for the searches")->check(CLI::Range(1u, 6u));
    common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        return report_error({usage, "usage", e.what()});
    }

    try {
        if (*analyze)
            return cmd_analyze(o);
        if (*unexpected)
            return cmd_unexpected(o);
        if (*splitting)
            return cmd_splitting(o);
        if (*gen)
            return cmd_gen(o);
        if (*equiv)
            return cmd_equiv(o);
        if (*search)
            return cmd_search(o);
        if (*verify)
            return cmd_verify(o);
    } catch (const CliError &e) {
        return report_error(e);
    } catch (const JsonSyntaxError &e) {
        return report_error({input, "json-syntax", e.what()});
    } catch (const InputError &e) {
        return report_error({input, "invalid-config", e.what()});
    } catch (const DomainError &e) {
        return report_error({input, "domain", e.what()});
    } catch (const ScalarParseError &e) {
        return report_error({input, "scalar-syntax", e.what()});
    } catch (const FieldMismatch &e) {
        return report_error({input, "field-mismatch", e.what()});
    } catch (const DegenerateInput &e) {
        return report_error({input, "degenerate", e.what()});
    } catch (const std::invalid_argument &e) {
        return report_error({input, "invalid-argument", e.what()});
    } catch (const std::exception &e) {
        return report_error({input, "internal", e.what()});
    }
    return usage;
}
