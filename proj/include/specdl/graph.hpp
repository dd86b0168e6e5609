#ifndef SPECDL_GRAPH_HPP
#define SPECDL_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "specdl/errors.hpp"

namespace specdl {

// Simple undirected graph on 0-indexed vertices, adjacency stored as one
// bitset row per vertex. Treated as immutable by every analysis routine;
// add_edge() exists for builders and parsers.
class Graph {
public:
    explicit Graph(int n);

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    int size() const { return m_; }
    int words() const { return words_; }

    bool has_edge(int u, int v) const {
        return (row(u)[v >> 6] >> (v & 63)) & 1u;
    }

    void add_edge(int u, int v);

    int degree(int v) const;

    const std::uint64_t* row(int v) const { return rows_.data() + static_cast<size_t>(v) * words_; }

    std::vector<std::pair<int, int>> edges() const;

    // Edge bitmask in lexicographic (i,j) i<j order; only valid for n <= 11.
    std::uint64_t edge_mask() const;
    static Graph from_edge_mask(int n, std::uint64_t mask);

    bool operator==(const Graph& o) const { return n_ == o.n_ && rows_ == o.rows_; }
    bool operator!=(const Graph& o) const { return !(*this == o); }

private:
    std::uint64_t* mutable_row(int v) { return rows_.data() + static_cast<size_t>(v) * words_; }

    int n_{0};
    int words_{0};
    int m_{0};
    std::vector<std::uint64_t> rows_;
};

// New graph with edge e removed; throws range_error if e is absent.
Graph delete_edge(const Graph& g, std::pair<int, int> e);

bool is_connected(const Graph& g);

// Disjoint union, vertices of b shifted by a.order().
Graph graph_union(const Graph& a, const Graph& b);

// Join: union plus all cross edges.
Graph graph_join(const Graph& a, const Graph& b);

// 2-coloring of a connected graph: vertex lists of the two color classes,
// or nullopt if an odd cycle exists.
std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(const Graph& g);

} // namespace specdl

#endif
