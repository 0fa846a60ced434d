#ifndef CKPOLAR_SCENE_HPP
#define CKPOLAR_SCENE_HPP

// Scene files and JSON output. Needs nlohmann/json (json.hpp) on the include path.

#include <map>
#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "ckpolar/absolute_figure.hpp"

namespace ckpolar {

using Json = nlohmann::ordered_json;

struct Scene {
    AbsoluteFigure figure;
    std::map<std::string, Subspace> subspaces;
    std::map<std::string, Matrix> matrices;

    const Subspace& subspace(const std::string& name) const {
        auto it = subspaces.find(name);
        if (it == subspaces.end()) throw ValidationError("no subspace object named '" + name + "'");
        return it->second;
    }

    Point point(const std::string& name) const {
        const Subspace& s = subspace(name);
        if (s.dim() != 0) throw ValidationError("object '" + name + "' is not a point");
        return Point::from_subspace(s);
    }

    const Matrix& matrix(const std::string& name) const {
        auto it = matrices.find(name);
        if (it == matrices.end()) throw ValidationError("no matrix object named '" + name + "'");
        return it->second;
    }
};

namespace detail {

inline Rational json_rational(const Json& v, const std::string& locus) {
    if (v.is_string()) {
        try {
            return parse_rational(v.get<std::string>());
        } catch (const ParseError& e) {
            throw ParseError(locus + ": " + e.what());
        }
    }
    if (v.is_number_integer()) return Rational(v.dump(), 10);
    throw ParseError(locus + ": expected a rational as a \"p/q\" string or an integer");
}

inline const Json& json_field(const Json& obj, const char* key, const std::string& locus) {
    if (!obj.is_object()) throw ParseError(locus + ": expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(locus + ": missing field \"" + key + "\"");
    return *it;
}

inline const Json& json_array(const Json& v, const std::string& locus) {
    if (!v.is_array()) throw ParseError(locus + ": expected an array");
    return v;
}

inline std::vector<Vector> json_rows(const Json& v, const std::string& locus, std::size_t width) {
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < json_array(v, locus).size(); ++i) {
        const std::string row_locus = locus + "[" + std::to_string(i) + "]";
        const Json& row = json_array(v[i], row_locus);
        Vector out;
        for (std::size_t j = 0; j < row.size(); ++j)
            out.push_back(json_rational(row[j], row_locus + "[" + std::to_string(j) + "]"));
        if (out.size() != width)
            throw ValidationError(row_locus + ": expected " + std::to_string(width) + " entries, got " +
                                  std::to_string(out.size()));
        rows.push_back(std::move(out));
    }
    return rows;
}

inline Matrix json_square_matrix(const Json& v, const std::string& locus, std::size_t size) {
    const auto rows = json_rows(v, locus, size);
    if (rows.size() != size)
        throw ValidationError(locus + ": expected " + std::to_string(size) + " rows, got " + std::to_string(rows.size()));
    return Matrix::from_rows(rows, size);
}

inline Signature json_signature(const Json& v) {
    Signature sig;
    for (std::size_t i = 0; i < json_array(v, "signature").size(); ++i) {
        const std::string locus = "signature[" + std::to_string(i) + "]";
        const Json& b = json_array(v[i], locus);
        if (b.size() != 2 || !b[0].is_number_integer() || !b[1].is_number_integer())
            throw ParseError(locus + ": expected [n_i, q_i] with integer entries");
        sig.push_back({b[0].get<int>(), b[1].get<int>()});
    }
    return sig;
}

} // namespace detail

/// {"signature": [[n_i, q_i], ...], "basis_change": [[...]], "objects": {name: {"points": [[...]]} | {"matrix": [[...]]}}}
inline Scene parse_scene(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("scene: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("scene: top level must be an object");
    for (const auto& [key, value] : doc.items())
        if (key != "signature" && key != "basis_change" && key != "objects")
            throw ParseError("scene: unknown top-level field \"" + key + "\"");

    const Signature sig = detail::json_signature(detail::json_field(doc, "signature", "scene"));
    int size = 0;
    for (const auto& b : sig) size += b.size;
    std::optional<Matrix> t;
    if (doc.contains("basis_change")) {
        if (size <= 0) throw ValidationError("signature: block sizes must be positive");
        t = detail::json_square_matrix(doc["basis_change"], "basis_change", static_cast<std::size_t>(size));
    }
    std::optional<AbsoluteFigure> figure;
    try {
        figure.emplace(sig, t);
    } catch (const ConstructionError& e) {
        throw ValidationError(std::string("figure: ") + e.what());
    }
    Scene scene{*figure, {}, {}};
    const int n = scene.figure.n();
    const auto width = static_cast<std::size_t>(n + 1);
    if (!doc.contains("objects")) return scene;
    const Json& objects = doc["objects"];
    if (!objects.is_object()) throw ParseError("objects: expected an object");
    for (const auto& [name, entry] : objects.items()) {
        const std::string locus = "objects." + name;
        if (!entry.is_object() || entry.size() != 1)
            throw ParseError(locus + ": expected exactly one of \"points\" or \"matrix\"");
        if (entry.contains("points")) {
            const auto points = detail::json_rows(entry["points"], locus + ".points", width);
            for (std::size_t i = 0; i < points.size(); ++i)
                if (is_zero(points[i]))
                    throw ValidationError(locus + ".points[" + std::to_string(i) + "]: zero vector");
            scene.subspaces.emplace(name, Subspace::span(points, n));
        } else if (entry.contains("matrix")) {
            scene.matrices.emplace(name, detail::json_square_matrix(entry["matrix"], locus + ".matrix", width));
        } else {
            throw ParseError(locus + ": expected \"points\" or \"matrix\"");
        }
    }
    return scene;
}

inline Json to_json(const Rational& r) { return format_rational(r); }

inline Json to_json(const Vector& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(format_rational(x));
    return out;
}

inline Json to_json(const Matrix& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
    return out;
}

/// {"dim": d, "points": canonical basis}.
inline Json to_json(const Subspace& s) {
    Json out = Json::object();
    out["dim"] = s.dim();
    Json pts = Json::array();
    for (const auto& v : s.basis()) pts.push_back(to_json(v));
    out["points"] = std::move(pts);
    return out;
}

} // namespace ckpolar

#endif
