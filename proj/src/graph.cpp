#include "specdl/graph.hpp"

#include <bit>
#include <string>

namespace specdl {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
    if (n < 1) throw range_error("graph order must be >= 1");
    rows_.assign(static_cast<size_t>(n_) * words_, 0);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw range_error("edge endpoint out of range: (" + std::to_string(u) + "," +
                          std::to_string(v) + ") with n=" + std::to_string(n_));
    if (u == v) throw range_error("self-loops are not allowed");
    if (has_edge(u, v)) throw range_error("duplicate edge (" + std::to_string(u) + "," +
                                          std::to_string(v) + ")");
    mutable_row(u)[v >> 6] |= 1ull << (v & 63);
    mutable_row(v)[u >> 6] |= 1ull << (u & 63);
    ++m_;
}

int Graph::degree(int v) const {
    int d = 0;
    const std::uint64_t* r = row(v);
    for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (has_edge(u, v)) out.emplace_back(u, v);
    return out;
}

std::uint64_t Graph::edge_mask() const {
    if (n_ > 11) throw range_error("edge_mask only defined for n <= 11");
    std::uint64_t mask = 0;
    int idx = 0;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v, ++idx)
            if (has_edge(u, v)) mask |= 1ull << idx;
    return mask;
}

Graph Graph::from_edge_mask(int n, std::uint64_t mask) {
    Graph g(n);
    int idx = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++idx)
            if ((mask >> idx) & 1u) g.add_edge(u, v);
    return g;
}

Graph delete_edge(const Graph& g, std::pair<int, int> e) {
    auto [u, v] = e;
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.has_edge(u, v))
        throw range_error("delete_edge: edge (" + std::to_string(u) + "," + std::to_string(v) +
                          ") not present");
    Graph out(g.order());
    for (auto [a, b] : g.edges())
        if (!((a == u && b == v) || (a == v && b == u))) out.add_edge(a, b);
    return out;
}

bool is_connected(const Graph& g) {
    const int n = g.order();
    const int w = g.words();
    std::vector<std::uint64_t> visited(w, 0), frontier(w, 0);
    visited[0] = frontier[0] = 1ull;
    int seen = 1;
    while (true) {
        std::vector<std::uint64_t> next(w, 0);
        for (int word = 0; word < w; ++word) {
            std::uint64_t f = frontier[word];
            while (f) {
                int v = word * 64 + std::countr_zero(f);
                f &= f - 1;
                const std::uint64_t* r = g.row(v);
                for (int k = 0; k < w; ++k) next[k] |= r[k];
            }
        }
        int grew = 0;
        for (int k = 0; k < w; ++k) {
            next[k] &= ~visited[k];
            grew += std::popcount(next[k]);
            visited[k] |= next[k];
        }
        if (grew == 0) break;
        seen += grew;
        frontier = next;
    }
    return seen == n;
}

Graph graph_union(const Graph& a, const Graph& b) {
    Graph g(a.order() + b.order());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(u + a.order(), v + a.order());
    return g;
}

Graph graph_join(const Graph& a, const Graph& b) {
    Graph g = graph_union(a, b);
    for (int u = 0; u < a.order(); ++u)
        for (int v = 0; v < b.order(); ++v) g.add_edge(u, a.order() + v);
    return g;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(const Graph& g) {
    const int n = g.order();
    std::vector<int> color(n, -1);
    std::vector<int> queue;
    queue.reserve(n);
    color[0] = 0;
    queue.push_back(0);
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int u = queue[qi];
        for (int v = 0; v < n; ++v) {
            if (!g.has_edge(u, v)) continue;
            if (color[v] < 0) {
                color[v] = 1 - color[u];
                queue.push_back(v);
            } else if (color[v] == color[u]) {
                return std::nullopt;
            }
        }
    }
    std::pair<std::vector<int>, std::vector<int>> parts;
    for (int v = 0; v < n; ++v) {
        if (color[v] < 0) throw domain_error("bipartition requires a connected graph");
        (color[v] == 0 ? parts.first : parts.second).push_back(v);
    }
    return parts;
}

} // namespace specdl
