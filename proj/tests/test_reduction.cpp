#include <doctest.h>

#include <set>
#include <utility>

#include "arrangement.hpp"
#include "reduction.hpp"

using namespace hudg;

namespace {

CombinatorialDescription description_from_strings(int n, const std::vector<std::string>& cells) {
    CombinatorialDescription d;
    d.n = n;
    for (const auto& s : cells) d.cells.push_back(sign_vector_from_string(s));
    return d;
}

// Independent adjacency oracle: decide each vertex pair directly from the
// labels and the description, without touching the builder's edge list.
bool oracle_adjacent(const CombinatorialDescription& d, const VertexLabel& u,
                     const VertexLabel& v) {
    if (u.role == v.role) return u.index != v.index;  // cliques on A, B, C
    const auto cross = [&](const VertexLabel& ab, const VertexLabel& c) {
        const int8_t s = d.cells[static_cast<std::size_t>(c.index - 1)]
                                [static_cast<std::size_t>(ab.index - 1)];
        return ab.role == Role::a ? s < 0 : s > 0;
    };
    if (u.role == Role::c && v.role != Role::c) return cross(v, u);
    if (v.role == Role::c && u.role != Role::c) return cross(u, v);
    return false;  // a-b pairs
}

std::set<std::pair<int, int>> oracle_edges(const CombinatorialDescription& canon,
                                           const LabeledGraph& g) {
    std::set<std::pair<int, int>> out;
    for (int u = 0; u < g.num_vertices(); ++u)
        for (int v = u + 1; v < g.num_vertices(); ++v)
            if (oracle_adjacent(canon, g.labels[u], g.labels[v])) out.emplace(u, v);
    return out;
}

}  // namespace

TEST_CASE("gadget for a single line") {
    const auto d = description_from_strings(1, {"-", "+"});
    const LabeledGraph g = build_gd(d);
    CHECK(g.num_vertices() == 4);  // a1, b1, c1, c2
    CHECK(g.num_edges() == 3);     // c1-c2, a1-c1, b1-c2
    CHECK(g.adjacent(g.find(Role::c, 1), g.find(Role::c, 2)));
    CHECK(g.adjacent(g.find(Role::a, 1), g.find(Role::c, 1)));
    CHECK(g.adjacent(g.find(Role::b, 1), g.find(Role::c, 2)));
    CHECK_FALSE(g.adjacent(g.find(Role::a, 1), g.find(Role::b, 1)));
}

TEST_CASE("gadget for two crossing lines") {
    const auto d = description_from_strings(2, {"--", "-+", "+-", "++"});
    const LabeledGraph g = build_gd(d);
    CHECK(g.num_vertices() == 8);
    // 2*C(2,2) + C(4,2) + 2*4 = 1 + 1 + 6 + 8
    CHECK(g.num_edges() == 16);

    // cell 2 has sign vector "-+": line 1 negative, line 2 positive
    const int c2 = g.find(Role::c, 2);
    CHECK(g.adjacent(g.find(Role::a, 1), c2));
    CHECK(g.adjacent(g.find(Role::b, 2), c2));
    CHECK_FALSE(g.adjacent(g.find(Role::b, 1), c2));
    CHECK_FALSE(g.adjacent(g.find(Role::a, 2), c2));
}

TEST_CASE("gadget edges match the independent oracle") {
    for (int n = 1; n <= 6; ++n)
        for (std::uint64_t seed = 11; seed <= 14; ++seed) {
            const auto lines = random_simple_arrangement(n, seed);
            CombinatorialDescription d = enumerate_cells(lines).description;
            const LabeledGraph g = build_gd(d);

            const int m = static_cast<int>(simple_cell_count(n));
            CHECK(g.num_vertices() == 2 * n + m);
            const std::size_t expected_edges =
                static_cast<std::size_t>(n) * (n - 1) +
                static_cast<std::size_t>(m) * (m - 1) / 2 +
                static_cast<std::size_t>(n) * static_cast<std::size_t>(m);
            CHECK(g.num_edges() == expected_edges);

            canonicalize(d);
            const auto want = oracle_edges(d, g);
            const std::set<std::pair<int, int>> got(g.edges.begin(), g.edges.end());
            CHECK(got == want);
        }
}

TEST_CASE("gadget vertex order is a block layout") {
    const auto lines = random_simple_arrangement(3, 7);
    const LabeledGraph g = build_gd(enumerate_cells(lines).description);
    for (int i = 0; i < 3; ++i) {
        CHECK(g.labels[i].role == Role::a);
        CHECK(g.labels[i].index == i + 1);
        CHECK(g.labels[3 + i].role == Role::b);
        CHECK(g.labels[3 + i].index == i + 1);
    }
    for (int j = 0; j < 7; ++j) {
        CHECK(g.labels[6 + j].role == Role::c);
        CHECK(g.labels[6 + j].index == j + 1);
    }
}

TEST_CASE("non-simple descriptions are rejected") {
    // wrong cell count
    CHECK_THROWS_AS(build_gd(description_from_strings(2, {"--", "++"})), std::invalid_argument);
    // duplicate cell
    CHECK_THROWS_AS(build_gd(description_from_strings(1, {"-", "-"})), std::invalid_argument);
    // zero entry
    CHECK_THROWS_AS(build_gd(description_from_strings(1, {"0", "+"})), std::invalid_argument);
}

TEST_CASE("builder canonicalizes cell order") {
    const auto sorted = build_gd(description_from_strings(1, {"-", "+"}));
    const auto reversed = build_gd(description_from_strings(1, {"+", "-"}));
    CHECK(sorted.edges == reversed.edges);
    for (int i = 0; i < sorted.num_vertices(); ++i) {
        CHECK(sorted.labels[i].role == reversed.labels[i].role);
        CHECK(sorted.labels[i].index == reversed.labels[i].index);
    }
}
