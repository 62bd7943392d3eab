#include "riemsol/manifest.hpp"

#include <set>

#include <json.hpp>

#include "riemsol/errors.hpp"

namespace riemsol {

namespace {

using json = nlohmann::json;

[[noreturn]] void schema_fail(const std::string& where, const std::string& what) {
    throw SchemaError(where + ": " + what);
}

void require_keys(const json& obj, const std::string& where,
                  const std::set<std::string>& required,
                  const std::set<std::string>& optional) {
    for (const auto& item : obj.items()) {
        if (!required.count(item.key()) && !optional.count(item.key())) {
            schema_fail(where, "unknown key \"" + item.key() + "\"");
        }
    }
    for (const auto& key : required) {
        if (!obj.contains(key)) schema_fail(where, "missing required key \"" + key + "\"");
    }
}

Rational rational_field(const json& node, const std::string& where) {
    if (!node.is_string()) {
        schema_fail(where, "rationals must be strings like \"-3/4\", not JSON numbers");
    }
    return parse_rational(node.get<std::string>());
}

Vec3 vec3_field(const json& node, const std::string& where) {
    if (!node.is_array() || node.size() != 3) {
        schema_fail(where, "expected an array of 3 rational strings");
    }
    Vec3 out;
    for (int i = 0; i < kDim; ++i) {
        out[i] = rational_field(node[static_cast<size_t>(i)],
                                where + "[" + std::to_string(i) + "]");
    }
    return out;
}

Mat3 rows3x3_field(const json& node, const std::string& where) {
    if (!node.is_array() || node.size() != 3) {
        schema_fail(where, "expected an array of 3 rows");
    }
    Mat3 out;
    for (int i = 0; i < kDim; ++i) {
        const Vec3 row = vec3_field(node[static_cast<size_t>(i)],
                                    where + "[" + std::to_string(i) + "]");
        for (int j = 0; j < kDim; ++j) out.at(i, j) = row[j];
    }
    return out;
}

int int_field(const json& node, const std::string& where) {
    if (!node.is_number_integer()) schema_fail(where, "expected an integer");
    return node.get<int>();
}

std::string name_field(const json& node, const std::string& where,
                       std::set<std::string>& seen) {
    if (!node.is_string() || node.get<std::string>().empty()) {
        schema_fail(where, "expected a non-empty string");
    }
    std::string name = node.get<std::string>();
    if (!seen.insert(name).second) schema_fail(where, "duplicate name \"" + name + "\"");
    return name;
}

const json& array_field(const json& obj, const std::string& key, const std::string& where) {
    const json& node = obj.at(key);
    if (!node.is_array()) schema_fail(where + "." + key, "expected an array");
    return node;
}

} // namespace

Manifest parse_manifest(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& err) {
        // nlohmann reports a byte offset; recover line and column from it.
        int line = 1;
        int column = 1;
        const size_t upto = std::min(err.byte, text.size());
        for (size_t p = 0; p < upto; ++p) {
            if (text[p] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError("malformed JSON at line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + err.what(),
                         line, column);
    }

    if (!doc.is_object()) throw SchemaError("manifest: top-level value must be an object");
    require_keys(doc, "manifest", {"brackets"},
                 {"dimension", "metric", "acm", "solitons", "gradient_solitons",
                  "collinear_checks"});

    Manifest out;
    if (doc.contains("dimension")) {
        out.dimension = int_field(doc["dimension"], "manifest.dimension");
        if (out.dimension != 3) {
            schema_fail("manifest.dimension", "must be 3, got " + std::to_string(out.dimension));
        }
    }

    size_t index = 0;
    for (const json& node : array_field(doc, "brackets", "manifest")) {
        const std::string where = "manifest.brackets[" + std::to_string(index++) + "]";
        if (!node.is_object()) schema_fail(where, "expected an object");
        require_keys(node, where, {"i", "j", "coeffs"}, {});
        BracketInput b;
        b.i = int_field(node["i"], where + ".i");
        b.j = int_field(node["j"], where + ".j");
        b.coeffs = vec3_field(node["coeffs"], where + ".coeffs");
        out.brackets.push_back(b);
    }

    if (doc.contains("metric")) {
        out.metric = rows3x3_field(doc["metric"], "manifest.metric");
    }

    if (doc.contains("acm")) {
        const json& node = doc["acm"];
        if (!node.is_object()) schema_fail("manifest.acm", "expected an object");
        require_keys(node, "manifest.acm", {"xi", "phi"}, {"eta"});
        AcmSpec acm;
        acm.xi = vec3_field(node["xi"], "manifest.acm.xi");
        // phi is given as 3 columns: phi[j] lists the components of phi(e_{j+1}).
        const Mat3 cols = rows3x3_field(node["phi"], "manifest.acm.phi");
        acm.phi = cols.transpose();
        if (node.contains("eta")) acm.eta = vec3_field(node["eta"], "manifest.acm.eta");
        out.acm = acm;
    }

    if (doc.contains("solitons")) {
        std::set<std::string> names;
        index = 0;
        for (const json& node : array_field(doc, "solitons", "manifest")) {
            const std::string where = "manifest.solitons[" + std::to_string(index++) + "]";
            if (!node.is_object()) schema_fail(where, "expected an object");
            require_keys(node, where, {"name", "potential", "lambda"}, {});
            SolitonSpec spec;
            spec.name = name_field(node["name"], where + ".name", names);
            spec.potential = vec3_field(node["potential"], where + ".potential");
            spec.lambda = rational_field(node["lambda"], where + ".lambda");
            out.solitons.push_back(std::move(spec));
        }
    }

    if (doc.contains("gradient_solitons")) {
        std::set<std::string> names;
        index = 0;
        for (const json& node : array_field(doc, "gradient_solitons", "manifest")) {
            const std::string where =
                "manifest.gradient_solitons[" + std::to_string(index++) + "]";
            if (!node.is_object()) schema_fail(where, "expected an object");
            require_keys(node, where, {"name", "potential_gradient", "lambda"}, {});
            GradientSolitonSpec spec;
            spec.name = name_field(node["name"], where + ".name", names);
            spec.potential_gradient =
                vec3_field(node["potential_gradient"], where + ".potential_gradient");
            spec.lambda = rational_field(node["lambda"], where + ".lambda");
            out.gradient_solitons.push_back(std::move(spec));
        }
    }

    if (doc.contains("collinear_checks")) {
        std::set<std::string> names;
        index = 0;
        for (const json& node : array_field(doc, "collinear_checks", "manifest")) {
            const std::string where =
                "manifest.collinear_checks[" + std::to_string(index++) + "]";
            if (!node.is_object()) schema_fail(where, "expected an object");
            require_keys(node, where, {"name", "c", "lambda"}, {});
            CollinearSpec spec;
            spec.name = name_field(node["name"], where + ".name", names);
            spec.c = rational_field(node["c"], where + ".c");
            spec.lambda = rational_field(node["lambda"], where + ".lambda");
            out.collinear_checks.push_back(std::move(spec));
        }
    }

    return out;
}

} // namespace riemsol
