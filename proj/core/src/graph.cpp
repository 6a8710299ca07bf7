#include "nested/graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "nested/error.hpp"

namespace nested {

const char* graph_mode_name(GraphMode m) {
    return m == GraphMode::VertexGraph ? "vertex" : "cell";
}

namespace {

struct DisjointSet {
    std::vector<std::size_t> parent;

    explicit DisjointSet(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

std::vector<Cell> descendants(const Cell& root, unsigned n_parts, unsigned level) {
    std::vector<Cell> cells{root};
    for (unsigned m = 0; m < level; ++m) {
        std::vector<Cell> next;
        next.reserve(cells.size() * n_parts);
        for (const Cell& c : cells)
            for (Cell& child : subdivide(c, n_parts)) next.push_back(std::move(child));
        cells = std::move(next);
    }
    return cells;
}

void check_size_guard(unsigned n_parts, unsigned level) {
    if (level < 1)
        throw Error(Errc::SizeLimitExceeded, "level must be at least 1");
    if (static_cast<double>(level) * std::log2(static_cast<double>(n_parts)) > 24.0)
        throw Error(Errc::SizeLimitExceeded,
                    "level " + std::to_string(level) + " exceeds the size guard for " +
                        std::to_string(n_parts) + " parts");
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out.push_back(c);
        }
    }
    return out;
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

} // namespace

LevelGraph build_graph(const SpaceSpec& spec, const Cell& root, unsigned level,
                       GraphMode mode, std::size_t depth, std::size_t cap) {
    check_size_guard(spec.n_parts, level);

    LevelGraph g;
    g.mode = mode;
    g.level = level;
    g.root = root;
    g.n_parts = spec.n_parts;

    const std::vector<Cell> cells = descendants(root, spec.n_parts, level);

    // Corner classes per cell, with one closure per distinct corner address.
    std::map<Address, Address> corner_rep;           // corner -> representative
    std::map<Address, EquivalenceClass> rep_class;   // representative -> class
    std::vector<std::vector<Address>> cell_reps(cells.size());
    for (std::size_t ci = 0; ci < cells.size(); ++ci) {
        std::set<Address> reps;
        for (const Tail& tail : spec.side_tails(cells[ci].word.back())) {
            const Address corner = scale(Address(cells[ci].word, tail), cells[ci].scale);
            if (!spec.contains(corner)) continue;
            auto it = corner_rep.find(corner);
            if (it == corner_rep.end()) {
                EquivalenceClass cls = class_members(corner, spec, depth, cap);
                for (const Address& m : cls.members) corner_rep.emplace(m, cls.representative);
                it = corner_rep.find(corner);
                rep_class.emplace(cls.representative, std::move(cls));
            }
            reps.insert(it->second);
        }
        cell_reps[ci].assign(reps.begin(), reps.end());
    }

    std::set<std::pair<std::size_t, std::size_t>> edges;
    if (mode == GraphMode::VertexGraph) {
        std::map<Address, std::size_t> rep_id;
        for (const auto& [rep, cls] : rep_class) {
            const std::size_t id = rep_id.size();
            rep_id.emplace(rep, id);
            GraphNode node;
            node.id = id;
            node.repr = format_address(rep, spec.n_parts);
            for (const Address& m : cls.members)
                node.members.push_back(format_address(m, spec.n_parts));
            g.nodes.push_back(std::move(node));
        }
        for (const auto& reps : cell_reps)
            for (std::size_t i = 0; i < reps.size(); ++i)
                for (std::size_t j = i + 1; j < reps.size(); ++j)
                    edges.emplace(rep_id.at(reps[i]), rep_id.at(reps[j]));
    } else {
        for (std::size_t ci = 0; ci < cells.size(); ++ci) {
            GraphNode node;
            node.id = ci;
            node.repr = format_cell(cells[ci], spec.n_parts);
            g.nodes.push_back(std::move(node));
        }
        std::map<Address, std::vector<std::size_t>> rep_cells;
        for (std::size_t ci = 0; ci < cells.size(); ++ci)
            for (const Address& rep : cell_reps[ci]) rep_cells[rep].push_back(ci);
        for (const auto& [rep, ids] : rep_cells)
            for (std::size_t i = 0; i < ids.size(); ++i)
                for (std::size_t j = i + 1; j < ids.size(); ++j)
                    edges.emplace(ids[i], ids[j]);
    }
    g.edges.assign(edges.begin(), edges.end());
    return g;
}

Connectivity graph_connected(const LevelGraph& g) {
    DisjointSet dsu(g.nodes.size());
    for (const auto& [i, j] : g.edges) dsu.unite(i, j);
    std::set<std::size_t> roots;
    for (std::size_t i = 0; i < g.nodes.size(); ++i) roots.insert(dsu.find(i));
    Connectivity c;
    c.components = roots.size();
    c.connected = roots.size() <= 1;
    return c;
}

std::vector<std::size_t> node_degrees(const LevelGraph& g) {
    std::vector<std::size_t> deg(g.nodes.size(), 0);
    for (const auto& [i, j] : g.edges) {
        ++deg[i];
        ++deg[j];
    }
    return deg;
}

std::string to_dot(const LevelGraph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (const GraphNode& n : g.nodes)
        out << "v" << n.id << " [label=\"" << n.repr << "\"]\n";
    for (const auto& [i, j] : g.edges) out << "v" << i << " -- v" << j << "\n";
    out << "}\n";
    return out.str();
}

std::string to_json(const LevelGraph& g) {
    std::ostringstream out;
    out << "{\n";
    out << "  \"mode\": \"" << graph_mode_name(g.mode) << "\",\n";
    out << "  \"level\": " << g.level << ",\n";
    out << "  \"nodes\": [\n";
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        const GraphNode& n = g.nodes[i];
        out << "    {\"id\": " << n.id << ", \"repr\": \"" << json_escape(n.repr)
            << "\", \"members\": [";
        for (std::size_t m = 0; m < n.members.size(); ++m) {
            if (m) out << ", ";
            out << '"' << json_escape(n.members[m]) << '"';
        }
        out << "]}" << (i + 1 < g.nodes.size() ? "," : "") << "\n";
    }
    out << "  ],\n";
    out << "  \"edges\": [";
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        if (e) out << ", ";
        out << "[" << g.edges[e].first << ", " << g.edges[e].second << "]";
    }
    out << "]\n}\n";
    return out.str();
}

std::string to_graphml(const LevelGraph& g) {
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n";
    out << "  <key id=\"label\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n";
    out << "  <graph id=\"G\" edgedefault=\"undirected\">\n";
    for (const GraphNode& n : g.nodes)
        out << "    <node id=\"v" << n.id << "\"><data key=\"label\">" << xml_escape(n.repr)
            << "</data></node>\n";
    for (const auto& [i, j] : g.edges)
        out << "    <edge source=\"v" << i << "\" target=\"v" << j << "\"/>\n";
    out << "  </graph>\n</graphml>\n";
    return out.str();
}

std::string to_csv(const LevelGraph& g) {
    std::ostringstream out;
    for (const auto& [i, j] : g.edges) out << i << "," << j << "\n";
    return out.str();
}

} // namespace nested
