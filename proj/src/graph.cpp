#include "fpoly/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "fpoly/errors.hpp"
#include "fpoly/rng.hpp"

namespace fpoly {

void MarkedGraph::validate() const {
    if (n < 1) throw SchemaError("graph needs at least one vertex");
    if (marked.empty() || static_cast<int>(marked.size()) > n) {
        throw SchemaError("need 1 <= m <= n marked vertices");
    }
    std::set<int> seen;
    for (int v : marked) {
        if (v < 1 || v > n) throw SchemaError("marked vertex " + std::to_string(v) + " out of range");
        if (!seen.insert(v).second) throw SchemaError("marked vertices must be distinct");
    }
    std::set<std::string> names;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge& e = edges[i];
        if (e.u < 1 || e.u > n || e.v < 1 || e.v > n) throw SchemaError("edge endpoint out of range");
        if (e.u == e.v) throw SchemaError("self-loops are not allowed");
        if (e.var != static_cast<EdgeVar>(i)) throw SchemaError("edge variables must be 0,1,2,... in list order");
        if (!names.insert(e.name).second) throw SchemaError("duplicate edge name '" + e.name + "'");
    }
}

std::vector<std::string> MarkedGraph::var_names() const {
    std::vector<std::string> out;
    out.reserve(edges.size());
    for (const Edge& e : edges) out.push_back(e.name);
    return out;
}

MarkedGraph MarkedGraph::complete(int n, std::vector<int> marked) {
    MarkedGraph g;
    g.n = n;
    g.marked = std::move(marked);
    EdgeVar var = 0;
    for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) {
            g.edges.push_back({u, v, var++, "e" + std::to_string(u) + std::to_string(v)});
        }
    }
    g.validate();
    return g;
}

MarkedGraph MarkedGraph::normalized() const {
    std::vector<int> perm(static_cast<std::size_t>(n) + 1, 0);
    int next = 0;
    for (int v : marked) perm[v] = ++next;
    for (int v = 1; v <= n; ++v) {
        if (perm[v] == 0) perm[v] = ++next;
    }
    MarkedGraph g;
    g.n = n;
    g.marked.resize(marked.size());
    for (std::size_t i = 0; i < marked.size(); ++i) g.marked[i] = static_cast<int>(i) + 1;
    g.edges = edges;
    for (Edge& e : g.edges) {
        e.u = perm[e.u];
        e.v = perm[e.v];
    }
    return g;
}

std::string MarkedGraph::to_json() const {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["marked"] = marked;
    nlohmann::ordered_json es = nlohmann::ordered_json::array();
    for (const Edge& e : edges) {
        es.push_back(nlohmann::ordered_json::array({e.u, e.v, e.name}));
    }
    j["edges"] = es;
    return j.dump();
}

MarkedGraph MarkedGraph::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("bad graph JSON: ") + e.what());
    }
    MarkedGraph g;
    try {
        g.n = j.at("n").get<int>();
        g.marked = j.at("marked").get<std::vector<int>>();
        EdgeVar var = 0;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 3) throw SchemaError("edge must be [u, v, name]");
            g.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>(), var++, e.at(2).get<std::string>()});
        }
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("bad graph JSON: ") + e.what());
    }
    g.validate();
    return g;
}

MarkedGraph random_connected_graph(Rng& rng, int n, int m, int extra_edges) {
    MarkedGraph g;
    g.n = n;
    for (int v = 1; v <= m; ++v) g.marked.push_back(v);
    EdgeVar var = 0;
    auto add_edge = [&](int u, int v) {
        if (u > v) std::swap(u, v);
        g.edges.push_back({u, v, var, "e" + std::to_string(var)});
        ++var;
    };
    for (int v = 2; v <= n; ++v) {
        add_edge(static_cast<int>(rng.int_in(1, v - 1)), v);
    }
    for (int i = 0; i < extra_edges; ++i) {
        int u = static_cast<int>(rng.int_in(1, n));
        int v = static_cast<int>(rng.int_in(1, n - 1));
        if (v >= u) ++v;
        add_edge(u, v);
    }
    g.validate();
    return g;
}

}  // namespace fpoly
