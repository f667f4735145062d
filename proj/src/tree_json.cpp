#include "moduli/tree_json.hpp"

#include <string>

namespace moduli {

namespace {

using nlohmann::json;

json vertices_json(int count) {
    json out = json::array();
    for (int v = 0; v < count; ++v) out.push_back(v);
    return out;
}

json edges_json(const std::vector<std::pair<int, int>>& edges) {
    json out = json::array();
    for (auto [u, v] : edges) out.push_back(json::array({u, v}));
    return out;
}

int require_int(const json& j, const char* what) {
    if (!j.is_number_integer()) throw DomainError(std::string("tree json: ") + what +
                                                  " must be an integer");
    return j.get<int>();
}

std::vector<std::pair<int, int>> parse_edges(const json& j) {
    if (!j.is_array()) throw DomainError("tree json: 'edges' must be an array");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2)
            throw DomainError("tree json: each edge must be a pair of vertices");
        edges.emplace_back(require_int(e[0], "edge endpoint"), require_int(e[1], "edge endpoint"));
    }
    return edges;
}

int parse_vertex_count(const json& j) {
    if (!j.contains("vertices") || !j["vertices"].is_array())
        throw DomainError("tree json: missing 'vertices' array");
    int count = static_cast<int>(j["vertices"].size());
    for (int v = 0; v < count; ++v)
        if (require_int(j["vertices"][static_cast<std::size_t>(v)], "vertex id") != v)
            throw DomainError("tree json: vertices must be listed as 0..n-1");
    return count;
}

// keys "1".."n" -> value, densely
std::vector<int> parse_labeled_map(const json& j, const char* what) {
    if (!j.is_object()) throw DomainError(std::string("tree json: '") + what +
                                          "' must be an object keyed by labels");
    std::vector<int> out(j.size(), -1);
    for (auto it = j.begin(); it != j.end(); ++it) {
        int label = 0;
        try {
            label = std::stoi(it.key());
        } catch (...) {
            throw DomainError(std::string("tree json: bad label key in '") + what + "'");
        }
        if (label < 1 || label > static_cast<int>(j.size()))
            throw DomainError(std::string("tree json: labels in '") + what +
                              "' must be 1..count");
        out[static_cast<std::size_t>(label - 1)] = require_int(it.value(), what);
    }
    return out;
}

}  // namespace

nlohmann::json tree_to_json(const ComplexStableTree& t) {
    json j;
    j["vertices"] = vertices_json(t.vertex_count());
    j["edges"] = edges_json(t.edges());
    json leaves = json::object();
    for (int label = 1; label <= t.leaf_count(); ++label)
        leaves[std::to_string(label)] = t.leaf_vertex(label);
    j["leaves"] = leaves;
    return j;
}

nlohmann::json tree_to_json(const RealStableTree& t) {
    json j;
    j["vertices"] = vertices_json(t.vertex_count());
    j["edges"] = edges_json(t.edges());
    j["leaves"] = json::object();
    json real;
    json inv = json::object();
    for (int v = 0; v < t.vertex_count(); ++v) inv[std::to_string(v)] = t.involution(v);
    real["involution"] = inv;
    json rl = json::object();
    for (int label = 1; label <= t.real_count(); ++label)
        rl[std::to_string(label)] = t.real_leaf_vertex(label);
    real["realLeaves"] = rl;
    json pairs = json::object();
    for (int label = 1; label <= t.pair_count(); ++label)
        pairs[std::to_string(label)] = json{{"plus", t.pair_plus_vertex(label)},
                                            {"minus", t.pair_minus_vertex(label)}};
    real["pairs"] = pairs;
    j["real"] = real;
    return j;
}

bool json_is_real_tree(const nlohmann::json& j) { return j.is_object() && j.contains("real"); }

ComplexStableTree complex_tree_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw DomainError("tree json: expected an object");
    int nverts = parse_vertex_count(j);
    auto edges = parse_edges(j.value("edges", json::array()));
    if (!j.contains("leaves")) throw DomainError("tree json: missing 'leaves'");
    auto leaves = parse_labeled_map(j["leaves"], "leaves");
    return ComplexStableTree::make(static_cast<int>(leaves.size()), nverts, std::move(edges),
                                   std::move(leaves));
}

RealStableTree real_tree_from_json(const nlohmann::json& j) {
    if (!json_is_real_tree(j)) throw DomainError("tree json: missing 'real' member");
    int nverts = parse_vertex_count(j);
    auto edges = parse_edges(j.value("edges", json::array()));
    const json& real = j["real"];
    if (!real.contains("involution"))
        throw DomainError("tree json: missing 'real.involution'");
    std::vector<int> inv(static_cast<std::size_t>(nverts), -1);
    for (auto it = real["involution"].begin(); it != real["involution"].end(); ++it) {
        int v = 0;
        try {
            v = std::stoi(it.key());
        } catch (...) {
            throw DomainError("tree json: bad vertex key in involution");
        }
        if (v < 0 || v >= nverts) throw DomainError("tree json: involution vertex out of range");
        inv[static_cast<std::size_t>(v)] = require_int(it.value(), "involution image");
    }
    for (int v : inv)
        if (v < 0) throw DomainError("tree json: involution must cover every vertex");

    std::vector<int> reals;
    if (real.contains("realLeaves")) reals = parse_labeled_map(real["realLeaves"], "realLeaves");

    std::vector<std::pair<int, int>> pairs;
    if (real.contains("pairs")) {
        const json& pj = real["pairs"];
        if (!pj.is_object()) throw DomainError("tree json: 'pairs' must be an object");
        pairs.resize(pj.size(), {-1, -1});
        for (auto it = pj.begin(); it != pj.end(); ++it) {
            int label = 0;
            try {
                label = std::stoi(it.key());
            } catch (...) {
                throw DomainError("tree json: bad pair label");
            }
            if (label < 1 || label > static_cast<int>(pj.size()))
                throw DomainError("tree json: pair labels must be 1..count");
            const json& pv = it.value();
            if (!pv.is_object() || !pv.contains("plus") || !pv.contains("minus"))
                throw DomainError("tree json: each pair needs 'plus' and 'minus' vertices");
            pairs[static_cast<std::size_t>(label - 1)] = {require_int(pv["plus"], "pair vertex"),
                                                          require_int(pv["minus"], "pair vertex")};
        }
    }
    return RealStableTree::make(nverts, std::move(edges), std::move(inv), std::move(reals),
                                std::move(pairs));
}

}  // namespace moduli
