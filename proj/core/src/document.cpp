#include "curvess/document.hpp"

#include "curvess/error.hpp"
#include "curvess/parse.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace curvess {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void schema_error(const std::string& path, const std::string& msg)
{
    throw Error(ErrorKind::Schema, (path.empty() ? std::string("document") : path) + ": " + msg);
}

std::string child(const std::string& path, const std::string& key)
{
    return path.empty() ? key : path + "." + key;
}

std::string index(const std::string& path, std::size_t i)
{
    return path + "[" + std::to_string(i) + "]";
}

void require_object(const json& j, const std::string& path, const std::set<std::string>& allowed)
{
    if (!j.is_object())
        schema_error(path, "expected an object");
    for (const auto& [key, value] : j.items())
        if (!allowed.count(key))
            schema_error(child(path, key), "unknown field");
}

const json& require_field(const json& j, const std::string& path, const std::string& key)
{
    auto it = j.find(key);
    if (it == j.end())
        schema_error(child(path, key), "missing required field");
    return *it;
}

std::string as_string(const json& j, const std::string& path)
{
    if (!j.is_string())
        schema_error(path, "expected a string");
    return j.get<std::string>();
}

std::size_t as_natural(const json& j, const std::string& path)
{
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
        schema_error(path, "expected a natural number");
    return j.get<std::size_t>();
}

std::vector<std::string> as_string_list(const json& j, const std::string& path)
{
    if (!j.is_array())
        schema_error(path, "expected an array of strings");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(as_string(j[i], index(path, i)));
    return out;
}

std::optional<std::string> optional_string(const json& j, const std::string& path, const std::string& key)
{
    auto it = j.find(key);
    if (it == j.end())
        return std::nullopt;
    return as_string(*it, child(path, key));
}

AssertedData parse_asserted(const json& j, const std::string& path)
{
    require_object(j, path, {"delta", "r", "provenance"});
    AssertedData a;
    a.delta = as_natural(require_field(j, path, "delta"), child(path, "delta"));
    a.r = as_natural(require_field(j, path, "r"), child(path, "r"));
    if (a.r == 0)
        schema_error(child(path, "r"), "branch count must be positive");
    a.provenance = as_string(require_field(j, path, "provenance"), child(path, "provenance"));
    return a;
}

SingularityDocument parse_singularity(const json& j, const std::string& path)
{
    if (!j.is_object())
        schema_error(path, "expected an object");
    SingularityDocument s;
    s.kind = as_string(require_field(j, path, "kind"), child(path, "kind"));
    s.label = optional_string(j, path, "label");
    if (s.kind == "plane") {
        require_object(j, path, {"kind", "label", "f", "variables", "weights", "branches", "asserted"});
        s.f = as_string(require_field(j, path, "f"), child(path, "f"));
        s.variables = as_string_list(require_field(j, path, "variables"), child(path, "variables"));
        if (s.variables.size() != 2)
            schema_error(child(path, "variables"), "a plane singularity needs exactly two variables");
        if (auto it = j.find("weights"); it != j.end()) {
            const auto w = as_string_list(*it, child(path, "weights"));
            if (w.size() != 2)
                schema_error(child(path, "weights"), "expected two rationals");
            s.weights = std::array<std::string, 2>{w[0], w[1]};
        }
        if (auto it = j.find("branches"); it != j.end()) {
            const std::string bpath = child(path, "branches");
            if (!it->is_array())
                schema_error(bpath, "expected an array");
            for (std::size_t i = 0; i < it->size(); ++i) {
                const json& b = (*it)[i];
                const std::string p = index(bpath, i);
                require_object(b, p, {"images", "equation"});
                BranchDocument bd;
                bd.images = as_string_list(require_field(b, p, "images"), child(p, "images"));
                if (bd.images.size() != 2)
                    schema_error(child(p, "images"), "expected one image per variable");
                bd.equation = optional_string(b, p, "equation");
                s.branches.push_back(std::move(bd));
            }
        }
    } else if (s.kind == "lci") {
        require_object(j, path, {"kind", "label", "variables", "equations", "parametrization", "asserted", "lci"});
        s.variables = as_string_list(require_field(j, path, "variables"), child(path, "variables"));
        if (s.variables.size() < 2)
            schema_error(child(path, "variables"), "expected at least two variables");
        s.equations = as_string_list(require_field(j, path, "equations"), child(path, "equations"));
        if (auto it = j.find("parametrization"); it != j.end()) {
            s.parametrization = as_string_list(*it, child(path, "parametrization"));
            if (s.parametrization->size() != s.variables.size())
                schema_error(child(path, "parametrization"), "expected one image per variable");
        }
        if (auto it = j.find("lci"); it != j.end()) {
            if (!it->is_boolean())
                schema_error(child(path, "lci"), "expected a boolean");
            s.lci = it->get<bool>();
        }
    } else {
        schema_error(child(path, "kind"), "expected \"plane\" or \"lci\"");
    }
    if (auto it = j.find("asserted"); it != j.end())
        s.asserted = parse_asserted(*it, child(path, "asserted"));
    return s;
}

template <typename F>
auto with_path(const std::string& path, F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const SyntaxError& e) {
        throw SyntaxError(e.kind(), e.position(), path + ": " + e.detail());
    } catch (const Error& e) {
        throw Error(e.kind(), path + ": " + e.what());
    }
}

Poly parse_in(const std::string& text, const VarList& vars, const std::string& path)
{
    return with_path(path, [&] { return parse_poly(text, vars); });
}

BranchParam parse_images(const std::vector<std::string>& images, const std::string& path)
{
    const VarList t{"t"};
    std::vector<Poly> polys;
    for (std::size_t i = 0; i < images.size(); ++i)
        polys.push_back(parse_in(images[i], t, index(path, i)));
    return with_path(path, [&] { return BranchParam(std::move(polys)); });
}

} // namespace

CurveDocument parse_curve_document(std::string_view json_text)
{
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw SyntaxError(ErrorKind::Syntax, e.byte, std::string("malformed JSON: ") + e.what());
    }
    require_object(root, "", {"label", "genus", "notes", "singularities"});
    CurveDocument doc;
    doc.label = as_string(require_field(root, "", "label"), "label");
    doc.genus = as_natural(require_field(root, "", "genus"), "genus");
    doc.notes = optional_string(root, "", "notes").value_or("");
    const json& sings = require_field(root, "", "singularities");
    if (!sings.is_array())
        schema_error("singularities", "expected an array");
    for (std::size_t i = 0; i < sings.size(); ++i)
        doc.singularities.push_back(parse_singularity(sings[i], index("singularities", i)));
    return doc;
}

CurveDocument load_curve_document(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::Io, "cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad())
        throw Error(ErrorKind::Io, "cannot read '" + path.string() + "'");
    return parse_curve_document(ss.str());
}

std::string serialize(const CurveDocument& doc)
{
    ordered_json root;
    root["label"] = doc.label;
    root["genus"] = doc.genus;
    if (!doc.notes.empty())
        root["notes"] = doc.notes;
    root["singularities"] = ordered_json::array();
    for (const SingularityDocument& s : doc.singularities) {
        ordered_json j;
        j["kind"] = s.kind;
        if (s.label)
            j["label"] = *s.label;
        if (s.kind == "plane") {
            j["f"] = s.f;
            j["variables"] = s.variables;
            if (s.weights)
                j["weights"] = *s.weights;
            if (!s.branches.empty()) {
                j["branches"] = ordered_json::array();
                for (const BranchDocument& b : s.branches) {
                    ordered_json bj;
                    bj["images"] = b.images;
                    if (b.equation)
                        bj["equation"] = *b.equation;
                    j["branches"].push_back(std::move(bj));
                }
            }
        } else {
            j["variables"] = s.variables;
            j["equations"] = s.equations;
            if (s.parametrization)
                j["parametrization"] = *s.parametrization;
            if (s.lci)
                j["lci"] = *s.lci;
        }
        if (s.asserted) {
            ordered_json a;
            a["delta"] = s.asserted->delta;
            a["r"] = s.asserted->r;
            a["provenance"] = s.asserted->provenance;
            j["asserted"] = std::move(a);
        }
        root["singularities"].push_back(std::move(j));
    }
    return root.dump(2) + "\n";
}

ParsedCurve parse_curve(const CurveDocument& doc)
{
    ParsedCurve out;
    out.document = doc;
    for (std::size_t i = 0; i < doc.singularities.size(); ++i) {
        const SingularityDocument& s = doc.singularities[i];
        const std::string path = index("singularities", i);
        const VarList vars = with_path(child(path, "variables"), [&] {
            std::string joined;
            for (const auto& v : s.variables)
                joined += (joined.empty() ? "" : ",") + v;
            return parse_var_list(joined);
        });

        auto make_plane = [&](Poly f, std::optional<Weights> weights, std::vector<BranchData> branches,
                              const std::string& default_label) {
            const std::string label = s.label.value_or(default_label);
            return with_path(path, [&] {
                return PlaneSingularity(std::move(f), std::move(weights), std::move(branches), label);
            });
        };

        Geometry geometry = [&]() -> Geometry {
            if (s.kind == "plane") {
                Poly f = parse_in(s.f, vars, child(path, "f"));
                std::optional<Weights> weights;
                if (s.weights)
                    weights = with_path(child(path, "weights"), [&] {
                        return Weights{parse_rational((*s.weights)[0]), parse_rational((*s.weights)[1])};
                    });
                std::vector<BranchData> branches;
                for (std::size_t b = 0; b < s.branches.size(); ++b) {
                    const std::string bpath = index(child(path, "branches"), b);
                    BranchData bd{parse_images(s.branches[b].images, child(bpath, "images")), std::nullopt};
                    if (s.branches[b].equation)
                        bd.equation = parse_in(*s.branches[b].equation, vars, child(bpath, "equation"));
                    branches.push_back(std::move(bd));
                }
                return make_plane(std::move(f), std::move(weights), std::move(branches), s.f);
            }
            std::vector<Poly> eqs;
            for (std::size_t k = 0; k < s.equations.size(); ++k)
                eqs.push_back(parse_in(s.equations[k], vars, index(child(path, "equations"), k)));
            std::optional<BranchParam> param;
            if (s.parametrization)
                param = parse_images(*s.parametrization, child(path, "parametrization"));
            if (vars.size() == 2 && eqs.size() == 1) {
                std::vector<BranchData> branches;
                if (param)
                    branches.push_back({*param, std::nullopt});
                return make_plane(std::move(eqs.front()), std::nullopt, std::move(branches),
                                  s.equations.front());
            }
            std::string default_label = "lci germ (";
            for (std::size_t k = 0; k < s.equations.size(); ++k)
                default_label += (k ? ", " : "") + s.equations[k];
            default_label += ")";
            return with_path(path, [&] {
                return LciPresentation(vars, std::move(eqs), std::move(param),
                                       s.label.value_or(default_label));
            });
        }();
        ParsedSingularity ps{"", std::move(geometry), s.asserted, s.lci};
        ps.label = std::visit([](const auto& g) { return g.label(); }, ps.geometry);
        out.singularities.push_back(std::move(ps));
    }
    return out;
}

ParsedCurve load_curve(const std::filesystem::path& path)
{
    return parse_curve(load_curve_document(path));
}

} // namespace curvess
