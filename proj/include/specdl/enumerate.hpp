#ifndef SPECDL_ENUMERATE_HPP
#define SPECDL_ENUMERATE_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "specdl/graph.hpp"

namespace specdl {

// Worker count for parallel sweeps: SPECDL_THREADS if set, else hardware.
int worker_count();

// Edge mask of the canonical relabeling (the one minimizing the column-major
// edge bit string over all vertex orders); n <= 8. Isomorphic graphs map to
// the same value.
std::uint64_t canonical_edge_mask(const Graph& g);

// graph6 string of the canonical relabeling; stable isomorphism key.
std::string canonical_graph6(const Graph& g);

namespace detail {

struct MaskScanner {
    explicit MaskScanner(int n_) : n(n_) {
        if (n < 1 || n > 8) throw range_error("enumeration supports 1 <= n <= 8");
        int idx = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v, ++idx) ends[idx] = {u, v};
        bits = n * (n - 1) / 2;
    }

    bool connected(std::uint64_t mask) const {
        std::array<std::uint16_t, 8> adj{};
        std::uint64_t m = mask;
        while (m) {
            int e = std::countr_zero(m);
            m &= m - 1;
            adj[ends[e].first] |= std::uint16_t(1u << ends[e].second);
            adj[ends[e].second] |= std::uint16_t(1u << ends[e].first);
        }
        std::uint16_t visited = 1, frontier = 1;
        while (frontier) {
            std::uint16_t next = 0, f = frontier;
            while (f) {
                int v = std::countr_zero(f);
                f &= std::uint16_t(f - 1);
                next |= adj[v];
            }
            next &= std::uint16_t(~visited);
            visited |= next;
            frontier = next;
        }
        return visited == std::uint16_t((1u << n) - 1);
    }

    int n;
    int bits;
    std::array<std::pair<int, int>, 32> ends{};
};

} // namespace detail

// Applies f to every labeled simple connected graph of order n exactly once,
// in increasing edge-mask order.
template <class F>
void for_each_connected(int n, F&& f) {
    detail::MaskScanner scan(n);
    const std::uint64_t limit = 1ull << scan.bits;
    for (std::uint64_t mask = 0; mask < limit; ++mask)
        if (scan.connected(mask)) f(Graph::from_edge_mask(n, mask));
}

// Strided partition of the mask space across workers; f receives
// (worker_id, graph). Each worker sees its masks in increasing order, so
// per-worker accumulation is deterministic for a fixed worker count.
template <class F>
void scan_connected_parallel(int n, int workers, F&& f) {
    if (workers <= 1) {
        for_each_connected(n, [&](const Graph& g) { f(0, g); });
        return;
    }
    detail::MaskScanner scan(n);
    const std::uint64_t limit = 1ull << scan.bits;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::uint64_t mask = w; mask < limit; mask += workers)
                if (scan.connected(mask)) f(w, Graph::from_edge_mask(n, mask));
        });
    }
    for (auto& t : pool) t.join();
}

// Stream view of the connected graphs of order n (1 <= n <= 8). With
// iso_free, isomorphic duplicates are suppressed via canonical-form hashing.
class ConnectedGraphStream {
public:
    explicit ConnectedGraphStream(int n, bool iso_free = false)
        : scan_(n), iso_free_(iso_free) {}

    std::optional<Graph> next();

private:
    detail::MaskScanner scan_;
    bool iso_free_;
    std::uint64_t cursor_{0};
    std::unordered_set<std::uint64_t> seen_;
};

// Convenience used by tests and the CLI.
long long count_connected(int n, bool iso_free = false);

} // namespace specdl

#endif
