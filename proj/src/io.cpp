#include "borelres/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace borelres {

std::string indexed(const Monomial& m)
{
    return to_string(m, MonomialStyle::Indexed);
}

Json complex_to_json(const LabeledComplex& x)
{
    Json j;
    j["vars"] = x.vars();
    Json vertices = Json::array();
    for (std::size_t v = 0; v < x.vertex_count(); ++v)
        vertices.push_back({{"id", v}, {"label", indexed(x.vertex_labels()[v])}});
    j["vertices"] = std::move(vertices);
    Json cells = Json::array();
    for (const auto& c : x.cells()) {
        Json facets = Json::array();
        for (const auto& f : c.facets)
            facets.push_back(Json::array({f.facet, x.has_incidence() ? f.sign : 0}));
        cells.push_back({{"id", c.id},
                         {"dim", c.dim},
                         {"vertices", c.vertices},
                         {"label", indexed(c.label)},
                         {"facets", std::move(facets)}});
    }
    j["cells"] = std::move(cells);
    return j;
}

namespace {

[[noreturn]] void reject(const std::string& why)
{
    throw std::invalid_argument("complex import: " + why);
}

const Json& field(const Json& obj, const char* key)
{
    if (!obj.is_object() || !obj.contains(key))
        reject(std::string("missing field '") + key + "'");
    return obj.at(key);
}

std::size_t as_index(const Json& v, const char* what)
{
    if (!v.is_number_integer() || v.get<long long>() < 0)
        reject(std::string(what) + " must be a non-negative integer");
    return v.get<std::size_t>();
}

}  // namespace

LabeledComplex complex_from_json(const Json& j)
{
    const std::size_t n = as_index(field(j, "vars"), "vars");
    if (n == 0)
        reject("vars must be at least 1");

    std::map<std::size_t, Monomial> vertex_label;
    std::set<Monomial> seen_labels;
    const Json& vertices = field(j, "vertices");
    if (!vertices.is_array())
        reject("vertices must be an array");
    for (const auto& v : vertices) {
        const std::size_t id = as_index(field(v, "id"), "vertex id");
        const Json& label = field(v, "label");
        if (!label.is_string())
            reject("vertex label must be a string");
        Monomial m = parse_monomial(label.get<std::string>(), n);
        if (!seen_labels.insert(m).second)
            reject("duplicate vertex label " + indexed(m));
        if (!vertex_label.emplace(id, m).second)
            reject("duplicate vertex id " + std::to_string(id));
    }

    ComplexBuilder builder(n);
    std::map<std::size_t, ComplexBuilder::ProtoId> proto_of;
    std::map<std::size_t, std::vector<std::size_t>> vertex_set_of;
    bool all_signed = true;
    const Json& cells = field(j, "cells");
    if (!cells.is_array())
        reject("cells must be an array");
    for (const auto& c : cells) {
        const std::size_t id = as_index(field(c, "id"), "cell id");
        if (proto_of.count(id))
            reject("duplicate cell id " + std::to_string(id));
        const Json& dim_json = field(c, "dim");
        if (!dim_json.is_number_integer() || dim_json.get<long>() < 0)
            reject("cell dim must be a non-negative integer");
        const int dim = dim_json.get<int>();
        std::vector<std::size_t> vs;
        for (const auto& v : field(c, "vertices")) {
            const std::size_t vid = as_index(v, "cell vertex");
            if (!vertex_label.count(vid))
                reject("cell " + std::to_string(id) + " uses unknown vertex " + std::to_string(vid));
            vs.push_back(vid);
        }
        std::sort(vs.begin(), vs.end());
        if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
            reject("cell " + std::to_string(id) + " repeats a vertex");
        const Json& label_json = field(c, "label");
        if (!label_json.is_string())
            reject("cell label must be a string");
        const Monomial label = parse_monomial(label_json.get<std::string>(), n);

        std::vector<Incidence> facets;
        std::set<std::size_t> facet_vertices;
        for (const auto& f : field(c, "facets")) {
            if (!f.is_array() || f.size() != 2)
                reject("facet entries must be [id, sign] pairs");
            const std::size_t fid = as_index(f[0], "facet id");
            if (!f[1].is_number_integer())
                reject("facet sign must be an integer");
            const int sign = f[1].get<int>();
            if (sign < -1 || sign > 1)
                reject("facet sign must be -1, 0 or +1");
            all_signed &= sign != 0;
            auto it = proto_of.find(fid);
            if (it == proto_of.end())
                reject("cell " + std::to_string(id) + " has dangling facet " + std::to_string(fid));
            facets.push_back({it->second, sign});
            const auto& fv = vertex_set_of.at(fid);
            facet_vertices.insert(fv.begin(), fv.end());
        }

        Monomial expected(n);
        for (std::size_t v : vs)
            expected = lcm(expected, vertex_label.at(v));
        if (label != expected)
            reject("cell " + std::to_string(id) + " label is not the lcm of its vertices");

        ComplexBuilder::ProtoId proto;
        if (dim == 0) {
            if (vs.size() != 1 || !facets.empty())
                reject("0-cell " + std::to_string(id) + " must have one vertex and no facets");
            proto = builder.vertex(vertex_label.at(vs.front()));
        }
        else {
            if (std::vector<std::size_t>(facet_vertices.begin(), facet_vertices.end()) != vs)
                reject("cell " + std::to_string(id) + " vertices differ from the union of its facets");
            try {
                proto = builder.cell(dim, std::move(facets));
            }
            catch (const std::exception& e) {
                reject(e.what());
            }
        }
        proto_of.emplace(id, proto);
        vertex_set_of.emplace(id, std::move(vs));
    }
    if (proto_of.size() < vertex_label.size())
        reject("every vertex needs a 0-cell");

    LabeledComplex x;
    try {
        x = builder.finish(all_signed);
    }
    catch (const std::exception& e) {
        reject(e.what());
    }
    if (x.vertex_count() != vertex_label.size())
        reject("every vertex needs a 0-cell");
    if (auto bad = diamond_violation(x))
        reject(*bad);
    return x;
}

std::string export_json(const LabeledComplex& x)
{
    return complex_to_json(x).dump(2) + "\n";
}

LabeledComplex import_json(std::string_view text)
{
    Json j;
    try {
        j = Json::parse(text);
    }
    catch (const Json::parse_error& e) {
        throw std::invalid_argument(std::string("complex import: ") + e.what());
    }
    return complex_from_json(j);
}

void write_text_file(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text))
        throw std::runtime_error("cannot write " + path.string());
}

std::string read_text_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::invalid_argument("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

IdealSpec parse_ideal_spec(std::string_view text, std::size_t n)
{
    IdealSpec spec;
    auto strip = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
            s.remove_prefix(1);
        return s;
    };
    text = strip(text);
    if (text.starts_with("borel:")) {
        text.remove_prefix(6);
    }
    else if (text.starts_with("mono:")) {
        spec.kind = IdealSpec::Kind::Mono;
        text.remove_prefix(5);
    }
    spec.gens = parse_monomial_list(text, n);
    if (spec.gens.empty())
        throw std::invalid_argument("ideal spec has no generators");
    return spec;
}

Json report_to_json(const VerificationReport& report)
{
    Json checks = Json::array();
    for (const auto& c : report.checks) {
        Json entry;
        entry["name"] = c.name;
        entry["status"] = c.passed ? "pass" : "fail";
        if (c.degree)
            entry["degree"] = indexed(*c.degree);
        if (!c.passed && !c.homology.empty()) {
            Json h = Json::object();
            for (std::size_t k = 0; k < c.homology.size(); ++k)
                if (c.homology[k] != 0)
                    h[std::to_string(static_cast<long>(k) - 1)] = c.homology[k];
            entry["reduced_homology"] = std::move(h);
        }
        if (!c.detail.empty())
            entry["detail"] = c.detail;
        checks.push_back(std::move(entry));
    }
    Json j;
    j["field"] = report.field.to_string();
    j["passed"] = report.passed();
    j["checks"] = std::move(checks);
    return j;
}

}  // namespace borelres
