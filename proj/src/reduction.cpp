#include "reduction.hpp"

#include <algorithm>

namespace hudg {

LabeledGraph build_gd(const CombinatorialDescription& d) {
    CombinatorialDescription desc = d;
    canonicalize(desc);
    if (!desc.is_simple())
        throw std::invalid_argument(
            "description is not simple: need 1 + n(n+1)/2 distinct zero-free cells");

    const int n = desc.n;
    const int m = static_cast<int>(desc.cells.size());

    LabeledGraph g;
    for (int i = 1; i <= n; ++i)
        g.add_vertex(VertexLabel{Role::a, i});
    for (int i = 1; i <= n; ++i)
        g.add_vertex(VertexLabel{Role::b, i});
    for (int j = 1; j <= m; ++j)
        g.add_vertex(VertexLabel{Role::c, j});

    const auto a_of = [&](int i) { return i; };          // i in 0..n-1
    const auto b_of = [&](int i) { return n + i; };
    const auto c_of = [&](int j) { return 2 * n + j; };  // j in 0..m-1

    for (int i = 0; i < n; ++i)
        for (int k = i + 1; k < n; ++k) {
            g.add_edge(a_of(i), a_of(k));
            g.add_edge(b_of(i), b_of(k));
        }
    for (int j = 0; j < m; ++j)
        for (int k = j + 1; k < m; ++k)
            g.add_edge(c_of(j), c_of(k));
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < n; ++i)
            g.add_edge(desc.cells[j][i] < 0 ? a_of(i) : b_of(i), c_of(j));
    return g;
}

}  // namespace hudg
