#include "graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace hudg {

std::string label_to_string(const VertexLabel& v) {
    switch (v.role) {
        case Role::plain: return "plain";
        case Role::a: return "a" + std::to_string(v.index);
        case Role::b: return "b" + std::to_string(v.index);
        case Role::c: return "c" + std::to_string(v.index);
    }
    throw std::logic_error("unknown role");
}

VertexLabel label_from_string(const std::string& s) {
    if (s == "plain")
        return VertexLabel{};
    if (s.size() < 2)
        throw std::invalid_argument("bad vertex label: " + s);
    Role role;
    switch (s[0]) {
        case 'a': role = Role::a; break;
        case 'b': role = Role::b; break;
        case 'c': role = Role::c; break;
        default: throw std::invalid_argument("bad vertex label: " + s);
    }
    const int index = std::stoi(s.substr(1));
    if (index < 1)
        throw std::invalid_argument("vertex label index must be positive: " + s);
    return VertexLabel{role, index};
}

void LabeledGraph::add_edge(int u, int v) {
    if (u == v)
        throw std::invalid_argument("self-loops are not allowed");
    if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices())
        throw std::out_of_range("edge endpoint out of range");
    if (u > v)
        std::swap(u, v);
    const auto e = std::make_pair(u, v);
    const auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it != edges.end() && *it == e)
        throw std::invalid_argument("duplicate edge");
    edges.insert(it, e);
}

bool LabeledGraph::adjacent(int u, int v) const {
    if (u == v)
        return false;
    if (u > v)
        std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

int LabeledGraph::find(Role role, int index) const {
    for (int i = 0; i < num_vertices(); ++i)
        if (labels[i].role == role && labels[i].index == index)
            return i;
    return -1;
}

LabeledGraph complete_graph(int n) {
    LabeledGraph g;
    for (int i = 0; i < n; ++i)
        g.add_vertex();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

LabeledGraph star_graph(int leaves) {
    LabeledGraph g;
    for (int i = 0; i < leaves + 1; ++i)
        g.add_vertex();
    for (int i = 1; i <= leaves; ++i)
        g.add_edge(0, i);
    return g;
}

}  // namespace hudg
