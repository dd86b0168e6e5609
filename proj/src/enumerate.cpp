#include "specdl/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "specdl/graph_io.hpp"

namespace specdl {

int worker_count() {
    if (const char* env = std::getenv("SPECDL_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return std::min(v, 64);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace {

// Backtracking minimization of the column-major edge bit string. Vertices
// are placed one position at a time; placing position p appends the p bits
// towards the already-placed vertices (most significant first), so a prefix
// larger than the best known value prunes the whole branch.
struct CanonicalSearch {
    int n;
    std::array<std::uint8_t, 8> adj{};
    std::array<int, 8> perm{};
    std::uint8_t used = 0;
    std::uint64_t best = ~0ull;
    int total_bits = 0;

    void run(int p, std::uint64_t value, int bits) {
        if (p == n) {
            best = std::min(best, value);
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used & (1u << v)) continue;
            std::uint64_t extended = value;
            for (int i = 0; i < p; ++i)
                extended = (extended << 1) | ((adj[v] >> perm[i]) & 1u);
            int ebits = bits + p;
            if (extended > (best >> (total_bits - ebits))) continue;
            perm[p] = v;
            used |= std::uint8_t(1u << v);
            run(p + 1, extended, ebits);
            used &= std::uint8_t(~(1u << v));
        }
    }
};

std::uint64_t canonical_colmajor_value(const Graph& g) {
    const int n = g.order();
    if (n > 8) throw range_error("canonical form supports n <= 8");
    CanonicalSearch search;
    search.n = n;
    search.total_bits = n * (n - 1) / 2;
    for (auto [u, v] : g.edges()) {
        search.adj[u] |= std::uint8_t(1u << v);
        search.adj[v] |= std::uint8_t(1u << u);
    }
    if (search.total_bits == 0) return 0;
    search.run(0, 0, 0);
    return search.best;
}

} // namespace

std::uint64_t canonical_edge_mask(const Graph& g) {
    // Convert the canonical column-major bit string back to the (i,j)
    // lexicographic mask layout used by Graph::from_edge_mask.
    const int n = g.order();
    std::uint64_t value = canonical_colmajor_value(g);
    int total_bits = n * (n - 1) / 2;
    std::uint64_t mask = 0;
    int bit = total_bits;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            --bit;
            if ((value >> bit) & 1u) {
                int idx = 0;
                for (int a = 0; a < n; ++a)
                    for (int b = a + 1; b < n; ++b, ++idx)
                        if (a == i && b == j) mask |= 1ull << idx;
            }
        }
    return mask;
}

std::string canonical_graph6(const Graph& g) {
    // The canonical bit string is already in graph6's column-major order.
    const int n = g.order();
    std::uint64_t value = canonical_colmajor_value(g);
    int bits = n * (n - 1) / 2;
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    for (int start = 0; start < bits; start += 6) {
        int group = 0;
        for (int k = 0; k < 6; ++k) {
            group <<= 1;
            int pos = start + k;
            if (pos < bits) group |= (value >> (bits - 1 - pos)) & 1u;
        }
        out.push_back(static_cast<char>(group + 63));
    }
    return out;
}

std::optional<Graph> ConnectedGraphStream::next() {
    const std::uint64_t limit = 1ull << scan_.bits;
    while (cursor_ < limit) {
        std::uint64_t mask = cursor_++;
        if (!scan_.connected(mask)) continue;
        Graph g = Graph::from_edge_mask(scan_.n, mask);
        if (iso_free_) {
            if (!seen_.insert(canonical_edge_mask(g)).second) continue;
        }
        return g;
    }
    return std::nullopt;
}

long long count_connected(int n, bool iso_free) {
    ConnectedGraphStream stream(n, iso_free);
    long long count = 0;
    while (stream.next()) ++count;
    return count;
}

} // namespace specdl
