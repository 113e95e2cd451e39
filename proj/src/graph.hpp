#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hudg {

enum class Role : std::uint8_t { plain, a, b, c };

struct VertexLabel {
    Role role = Role::plain;
    int index = 0;  // 1-based within the role, 0 for plain vertices
};

std::string label_to_string(const VertexLabel& v);
VertexLabel label_from_string(const std::string& s);

// Undirected graph with role-labeled vertices; no loops, no multi-edges.
struct LabeledGraph {
    std::vector<VertexLabel> labels;
    std::vector<std::pair<int, int>> edges;  // normalized u < v, sorted

    int num_vertices() const { return static_cast<int>(labels.size()); }
    std::size_t num_edges() const { return edges.size(); }

    void add_vertex(VertexLabel label = {}) { labels.push_back(label); }
    void add_edge(int u, int v);
    bool adjacent(int u, int v) const;

    // -1 when no vertex carries the label.
    int find(Role role, int index) const;
};

LabeledGraph complete_graph(int n);
LabeledGraph star_graph(int leaves);

}  // namespace hudg
