#pragma once

// JSON encodings of configurations and reports.
//
// Configuration: {"field": {"type": "rational"} | {"type": "cyclotomic", "n": N},
//                 "points": [[s, s, s], ...]} with scalars as strings in the
// field grammar (integers and integer-like JSON numbers are accepted too).

#include "field.hpp"
#include "geom.hpp"
#include "linsys.hpp"
#include "unexpected.hpp"

#include <json.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace fatpoints {

using json = nlohmann::json;

class InputError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Parse failure with a 1-based position in the input text.
class JsonSyntaxError : public InputError {
  public:
    JsonSyntaxError(const std::string &what, std::size_t line, std::size_t column)
        : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

  private:
    std::size_t line_, column_;
};

namespace detail {

inline std::pair<std::size_t, std::size_t> line_column(const std::string &text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

} // namespace detail

inline json parse_json_text(const std::string &text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        const auto [line, col] = detail::line_column(text, e.byte);
        // drop the library's own "[json.exception...] parse error at ...:" prefix
        std::string msg = e.what();
        if (const auto p = msg.find(": ", msg.find("parse error")); p != std::string::npos)
            msg = msg.substr(p + 2);
        throw JsonSyntaxError(msg, line, col);
    }
}

inline json field_to_json(const Field &f) {
    if (f.kind() == Field::Kind::rational)
        return {{"type", "rational"}};
    return {{"type", "cyclotomic"}, {"n", f.conductor()}};
}

inline FieldPtr field_from_json(const json &j) {
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
        throw InputError("field: expected an object with a string \"type\"");
    const std::string type = j["type"];
    if (type == "rational")
        return rational_field();
    if (type == "cyclotomic") {
        if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<long>() < 1)
            throw InputError("field: cyclotomic needs a positive integer \"n\"");
        return cyclotomic_field(j["n"].get<unsigned>());
    }
    throw InputError("field: unknown type \"" + type + "\"");
}

inline json scalar_to_json(const Scalar &s) { return s.to_string(); }

inline Scalar scalar_from_json(const json &j, const FieldPtr &f) {
    if (j.is_string()) {
        try {
            return Scalar::parse(f, j.get<std::string>());
        } catch (const ScalarParseError &e) {
            throw InputError(e.what());
        }
    }
    if (j.is_number_integer())
        return Scalar(f, j.get<long>());
    throw InputError("scalar: expected a string or an integer, got " + j.dump());
}

inline json point_to_json(const HomogeneousTriple &p) {
    return json::array({scalar_to_json(p[0]), scalar_to_json(p[1]), scalar_to_json(p[2])});
}

inline json config_to_json(const PointConfiguration &z) {
    json pts = json::array();
    for (const auto &p : z)
        pts.push_back(point_to_json(p));
    return {{"field", field_to_json(*z.field())}, {"points", pts}};
}

inline PointConfiguration config_from_json(const json &j) {
    if (!j.is_object())
        throw InputError("configuration: expected a JSON object");
    if (!j.contains("field"))
        throw InputError("configuration: missing \"field\"");
    if (!j.contains("points") || !j["points"].is_array())
        throw InputError("configuration: \"points\" must be an array");
    const FieldPtr f = field_from_json(j["field"]);
    if (j["points"].empty())
        throw InputError("configuration: \"points\" is empty");
    std::vector<ProjectivePoint> pts;
    std::size_t index = 0;
    for (const auto &p : j["points"]) {
        if (!p.is_array() || p.size() != 3)
            throw InputError("configuration: point " + std::to_string(index) + " must have three coordinates");
        try {
            pts.emplace_back(scalar_from_json(p[0], f), scalar_from_json(p[1], f), scalar_from_json(p[2], f));
        } catch (const DegenerateInput &e) {
            throw InputError("configuration: point " + std::to_string(index) + ": " + e.what());
        }
        ++index;
    }
    try {
        return PointConfiguration(f, std::move(pts));
    } catch (const DegenerateInput &e) {
        throw InputError(std::string("configuration: ") + e.what());
    }
}

inline PointConfiguration config_from_text(const std::string &text) { return config_from_json(parse_json_text(text)); }

inline json form_to_json(const Form<Scalar> &f) {
    json c = json::array();
    for (const auto &s : f.coefficients())
        c.push_back(scalar_to_json(s));
    return c;
}

inline json linsys_report_to_json(const LinearSystemReport &r) {
    json basis = json::array();
    for (const auto &f : r.basis)
        basis.push_back(form_to_json(f));
    return {{"degree", r.degree}, {"vdim", r.vdim},       {"edim", r.edim},
            {"dim", r.dim},       {"special", r.special}, {"basis", basis}};
}

inline json samples_to_json(const std::vector<PointSample> &samples) {
    json out = json::array();
    for (const auto &s : samples)
        out.push_back({{"point", point_to_json(s.point)}, {"dim", s.dim}});
    return out;
}

inline json unexpected_report_to_json(const UnexpectedCurveReport &r) {
    json j{{"degree", r.degree},
           {"dimZ", r.dim_z},
           {"genericDim", r.generic_dim},
           {"threshold", r.threshold},
           {"unexpected", r.unexpected},
           {"certified", r.certified},
           {"samples", samples_to_json(r.samples)}};
    if (r.witness) {
        j["witness"] = form_to_json(*r.witness);
        j["witnessPoint"] = point_to_json(*r.witness_point);
    }
    return j;
}

inline json line_stats_to_json(const LineStats &s) {
    json hist = json::object();
    for (const auto &[k, n] : s.histogram())
        hist[std::to_string(k)] = n;
    json lines = json::array();
    for (const auto &l : s.lines)
        if (l.points.size() >= 3)
            lines.push_back({{"line", point_to_json(l.line)}, {"points", l.points}});
    return {{"histogram", hist}, {"richLines", lines}};
}

inline json splitting_to_json(const SplittingType &st) {
    return {{"a", st.a}, {"b", st.b}, {"m", st.m}, {"balanced", st.balanced}};
}

} // namespace fatpoints
