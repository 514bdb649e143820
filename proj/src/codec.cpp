#include "lbcolor/codec.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>

namespace lbcolor {

namespace {

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const Json& field(const Json& doc, const char* key) {
    auto it = doc.find(key);
    if (it == doc.end()) throw InstanceError(key, "missing field");
    return *it;
}

std::int64_t integer(const Json& v, const std::string& path) {
    if (!v.is_number_integer()) throw InstanceError(path, "expected an integer");
    return v.get<std::int64_t>();
}

int small_int(const Json& v, const std::string& path) {
    const auto x = integer(v, path);
    if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max())
        throw InstanceError(path, "integer out of range");
    return static_cast<int>(x);
}

const Json& array(const Json& v, const std::string& path) {
    if (!v.is_array()) throw InstanceError(path, "expected an array");
    return v;
}

std::vector<std::int64_t> integers(const Json& v, const std::string& path) {
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i < array(v, path).size(); ++i) out.push_back(integer(v[i], at(path, i)));
    return out;
}

std::vector<std::vector<std::int64_t>> matrix(const Json& v, const std::string& path) {
    std::vector<std::vector<std::int64_t>> out;
    for (std::size_t i = 0; i < array(v, path).size(); ++i) out.push_back(integers(v[i], at(path, i)));
    return out;
}

std::pair<int, int> pair_of(const Json& v, const std::string& path) {
    if (!v.is_array() || v.size() != 2) throw InstanceError(path, "expected a pair");
    return {small_int(v[0], at(path, 0)), small_int(v[1], at(path, 1))};
}

}  // namespace

Instance instance_from_json(const Json& doc) {
    if (!doc.is_object()) throw InstanceError("document", "expected a JSON object");
    Instance inst;

    const Json& mode = field(doc, "mode");
    if (mode == "vertex") inst.mode = Mode::vertex;
    else if (mode == "edge") inst.mode = Mode::edge;
    else throw InstanceError("mode", "unknown mode " + mode.dump());

    inst.n = small_int(field(doc, "n"), "n");
    inst.k = small_int(field(doc, "k"), "k");
    inst.p = small_int(field(doc, "p"), "p");
    const Json& edges = array(field(doc, "edges"), "edges");
    for (std::size_t i = 0; i < edges.size(); ++i) inst.edges.push_back(pair_of(edges[i], at("edges", i)));

    for (std::size_t e = 0; e < array(field(doc, "part_of"), "part_of").size(); ++e)
        inst.part_of.push_back(small_int(doc["part_of"][e], at("part_of", e)) - 1);
    inst.weight = integers(field(doc, "weight"), "weight");
    inst.bounds = matrix(field(doc, "bounds"), "bounds");

    const Json& allowed = array(field(doc, "allowed"), "allowed");
    for (std::size_t e = 0; e < allowed.size(); ++e) {
        const std::string path = at("allowed", e);
        auto& list = inst.allowed.emplace_back();
        for (std::size_t j = 0; j < array(allowed[e], path).size(); ++j) {
            const int c = small_int(allowed[e][j], at(path, j));
            if (c < 1 || c > inst.k) throw InstanceError(at(path, j), "color out of range (colors are 1..k)");
            list.push_back(c - 1);
        }
        std::sort(list.begin(), list.end());
    }

    if (auto it = doc.find("profit"); it != doc.end() && !it->is_null()) inst.profit = matrix(*it, "profit");

    if (auto it = doc.find("decomposition"); it != doc.end() && !it->is_null()) {
        const Json& d = *it;
        if (!d.is_object()) throw InstanceError("decomposition", "expected an object");
        DecompositionSpec spec;
        const Json& bags = array(field(d, "bags"), "decomposition.bags");
        for (std::size_t i = 0; i < bags.size(); ++i) {
            const std::string path = at("decomposition.bags", i);
            auto& bag = spec.bags.emplace_back();
            for (std::size_t j = 0; j < array(bags[i], path).size(); ++j) bag.push_back(small_int(bags[i][j], at(path, j)));
        }
        if (auto te = d.find("tree_edges"); te != d.end()) {
            for (std::size_t i = 0; i < array(*te, "decomposition.tree_edges").size(); ++i)
                spec.tree_edges.push_back(pair_of((*te)[i], at("decomposition.tree_edges", i)));
        }
        if (auto r = d.find("root"); r != d.end()) spec.root = small_int(*r, "decomposition.root");
        inst.decomposition = std::move(spec);
    }

    validate_instance(inst);
    if (inst.decomposition) {
        const auto& spec = *inst.decomposition;
        for (std::size_t i = 0; i < spec.bags.size(); ++i)
            for (std::size_t j = 0; j < spec.bags[i].size(); ++j)
                if (spec.bags[i][j] < 0 || spec.bags[i][j] >= inst.n)
                    throw InstanceError(at(at("decomposition.bags", i), j), "vertex out of range");
        for (std::size_t i = 0; i < spec.tree_edges.size(); ++i) {
            auto [a, b] = spec.tree_edges[i];
            const int nb = static_cast<int>(spec.bags.size());
            if (a < 0 || a >= nb || b < 0 || b >= nb)
                throw InstanceError(at("decomposition.tree_edges", i), "bag index out of range");
        }
        if (!spec.bags.empty() && (spec.root < 0 || spec.root >= static_cast<int>(spec.bags.size())))
            throw InstanceError("decomposition.root", "bag index out of range");
    }
    return inst;
}

Json instance_to_json(const Instance& inst) {
    Json doc;
    doc["mode"] = inst.mode == Mode::vertex ? "vertex" : "edge";
    doc["n"] = inst.n;
    doc["edges"] = Json::array();
    for (auto [u, v] : inst.edges) doc["edges"].push_back({u, v});
    doc["k"] = inst.k;
    doc["p"] = inst.p;
    doc["part_of"] = Json::array();
    for (int h : inst.part_of) doc["part_of"].push_back(h + 1);
    doc["weight"] = inst.weight;
    doc["bounds"] = inst.bounds;
    doc["allowed"] = Json::array();
    for (const auto& list : inst.allowed) {
        Json row = Json::array();
        for (int c : list) row.push_back(c + 1);
        doc["allowed"].push_back(std::move(row));
    }
    if (inst.profit) doc["profit"] = *inst.profit;
    if (inst.decomposition) {
        Json d;
        d["bags"] = inst.decomposition->bags;
        d["tree_edges"] = Json::array();
        for (auto [a, b] : inst.decomposition->tree_edges) d["tree_edges"].push_back({a, b});
        d["root"] = inst.decomposition->root;
        doc["decomposition"] = std::move(d);
    }
    return doc;
}

Json parse_json(std::istream& in) {
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InstanceError("document", std::string("malformed JSON: ") + e.what());
    }
}

Json parse_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InstanceError("document", "cannot open " + path);
    return parse_json(in);
}

Instance read_instance(std::istream& in) { return instance_from_json(parse_json(in)); }

Instance read_instance_file(const std::string& path) { return instance_from_json(parse_json_file(path)); }

void write_instance(std::ostream& out, const Instance& inst) { out << instance_to_json(inst).dump(2) << '\n'; }

Coloring coloring_from_json(const Json& doc) {
    const Json* body = &doc;
    if (doc.is_object() && !doc.contains("color_of") && doc.contains("witness")) body = &doc["witness"];
    if (!body->is_object() || !body->contains("color_of") || !(*body)["color_of"].is_array())
        throw StructuralError("coloring document needs a \"color_of\" array");
    Coloring col;
    for (const auto& c : (*body)["color_of"]) {
        if (!c.is_number_integer()) throw StructuralError("colors must be integers");
        const auto x = c.get<std::int64_t>();
        if (x < 1 || x > std::numeric_limits<int>::max()) throw StructuralError("colors are 1-based positive integers");
        col.color_of.push_back(static_cast<int>(x) - 1);
    }
    return col;
}

Json coloring_to_json(const Coloring& col) {
    Json doc;
    doc["color_of"] = Json::array();
    for (int c : col.color_of) doc["color_of"].push_back(c + 1);
    return doc;
}

Json outcome_to_json(const SolveOutcome& out) {
    Json doc;
    doc["status"] = to_string(out.status);
    doc["witness"] = out.witness ? coloring_to_json(*out.witness) : Json(nullptr);
    doc["objective"] = out.objective ? Json(*out.objective) : Json(nullptr);
    return doc;
}

}  // namespace lbcolor
