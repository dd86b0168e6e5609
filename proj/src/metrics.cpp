#include "specdl/metrics.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <queue>

namespace specdl {

long long DistanceData::min_transmission() const {
    return *std::min_element(tr.begin(), tr.end());
}

DistanceData apsp(const Graph& g) {
    const int n = g.order();
    const int w = g.words();
    DistanceData dd;
    dd.n = n;
    dd.dist.assign(static_cast<size_t>(n) * n, 0);
    dd.tr.assign(n, 0);

    std::vector<std::uint64_t> visited(w), frontier(w), next(w);
    for (int s = 0; s < n; ++s) {
        std::fill(visited.begin(), visited.end(), 0);
        std::fill(frontier.begin(), frontier.end(), 0);
        visited[s >> 6] = frontier[s >> 6] = 1ull << (s & 63);
        int seen = 1, level = 0;
        while (true) {
            std::fill(next.begin(), next.end(), 0);
            for (int word = 0; word < w; ++word) {
                std::uint64_t f = frontier[word];
                while (f) {
                    int v = word * 64 + std::countr_zero(f);
                    f &= f - 1;
                    const std::uint64_t* r = g.row(v);
                    for (int k = 0; k < w; ++k) next[k] |= r[k];
                }
            }
            ++level;
            int grew = 0;
            for (int k = 0; k < w; ++k) {
                next[k] &= ~visited[k];
                visited[k] |= next[k];
                std::uint64_t b = next[k];
                grew += std::popcount(b);
                while (b) {
                    int v = k * 64 + std::countr_zero(b);
                    b &= b - 1;
                    dd.dist[static_cast<size_t>(s) * n + v] = level;
                }
            }
            if (grew == 0) break;
            seen += grew;
            frontier = next;
        }
        if (seen != n) throw disconnected_error("distances undefined: graph is disconnected");
    }

    for (int i = 0; i < n; ++i) {
        long long t = 0;
        for (int j = 0; j < n; ++j) {
            int d = dd.at(i, j);
            t += d;
            dd.diameter = std::max(dd.diameter, d);
        }
        dd.tr[i] = t;
        dd.wiener += t;
    }
    dd.wiener /= 2;
    return dd;
}

SymMatrix distance_matrix(const DistanceData& dd) {
    SymMatrix m(dd.n);
    for (int i = 0; i < dd.n; ++i)
        for (int j = i + 1; j < dd.n; ++j) m.set(i, j, dd.at(i, j));
    return m;
}

SymMatrix distance_laplacian(const DistanceData& dd) {
    SymMatrix m(dd.n);
    for (int i = 0; i < dd.n; ++i) {
        m.set(i, i, static_cast<double>(dd.tr[i]));
        for (int j = i + 1; j < dd.n; ++j) m.set(i, j, -static_cast<double>(dd.at(i, j)));
    }
    return m;
}

SymMatrix distance_laplacian(const Graph& g) { return distance_laplacian(apsp(g)); }

SymMatrix laplacian(const Graph& g) {
    const int n = g.order();
    SymMatrix m(n);
    for (int i = 0; i < n; ++i) m.set(i, i, g.degree(i));
    for (auto [u, v] : g.edges()) m.set(u, v, -1.0);
    return m;
}

namespace {

// Max clique via branch and bound with a greedy coloring bound.
struct CliqueSolver {
    const std::vector<std::uint64_t>& adj;
    int best = 0;

    void expand(std::uint64_t cand, int size) {
        if (cand == 0) {
            best = std::max(best, size);
            return;
        }
        // Greedy-color the candidates; color number bounds the clique growth.
        std::vector<std::pair<int, int>> order; // (vertex, color)
        order.reserve(std::popcount(cand));
        std::uint64_t rem = cand;
        int color = 0;
        while (rem) {
            ++color;
            std::uint64_t avail = rem;
            while (avail) {
                int v = std::countr_zero(avail);
                avail &= ~(adj[v] | (1ull << v));
                rem &= ~(1ull << v);
                order.emplace_back(v, color);
            }
        }
        std::uint64_t p = cand;
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            auto [v, c] = order[i];
            if (size + c <= best) return;
            expand(p & adj[v], size + 1);
            p &= ~(1ull << v);
        }
    }
};

bool removal_disconnects(const Graph& g, std::uint64_t removed) {
    const int n = g.order();
    const std::uint64_t all = (n == 64) ? ~0ull : ((1ull << n) - 1);
    std::uint64_t alive = all & ~removed;
    int alive_count = std::popcount(alive);
    if (alive_count <= 1) return false;
    int start = std::countr_zero(alive);
    std::uint64_t visited = 1ull << start, frontier = visited;
    while (frontier) {
        std::uint64_t next = 0, f = frontier;
        while (f) {
            int v = std::countr_zero(f);
            f &= f - 1;
            next |= g.row(v)[0];
        }
        next &= alive & ~visited;
        visited |= next;
        frontier = next;
    }
    return visited != alive;
}

bool is_complete_graph(const Graph& g) {
    long long n = g.order();
    return g.size() == n * (n - 1) / 2;
}

// Unit-vertex-capacity flow network for internally disjoint s-t paths.
// Node 2v = in(v), 2v+1 = out(v); all arcs explicit with residuals.
struct VertexFlow {
    struct Arc {
        int to, rev, cap;
    };
    std::vector<std::vector<Arc>> arcs;
    int nodes;

    explicit VertexFlow(int n) : arcs(2 * n), nodes(2 * n) {}

    void add(int from, int to, int cap) {
        arcs[from].push_back({to, static_cast<int>(arcs[to].size()), cap});
        arcs[to].push_back({from, static_cast<int>(arcs[from].size()) - 1, 0});
    }

    bool bfs_augment(int s, int t) {
        std::vector<int> prev_node(nodes, -1), prev_arc(nodes, -1);
        std::queue<int> q;
        q.push(s);
        prev_node[s] = s;
        while (!q.empty() && prev_node[t] < 0) {
            int u = q.front();
            q.pop();
            for (size_t i = 0; i < arcs[u].size(); ++i) {
                const Arc& a = arcs[u][i];
                if (a.cap > 0 && prev_node[a.to] < 0) {
                    prev_node[a.to] = u;
                    prev_arc[a.to] = static_cast<int>(i);
                    q.push(a.to);
                }
            }
        }
        if (prev_node[t] < 0) return false;
        for (int v = t; v != s; v = prev_node[v]) {
            Arc& a = arcs[prev_node[v]][prev_arc[v]];
            a.cap -= 1;
            arcs[a.to][a.rev].cap += 1;
        }
        return true;
    }

    std::vector<bool> residual_reachable(int s) const {
        std::vector<bool> seen(nodes, false);
        std::queue<int> q;
        q.push(s);
        seen[s] = true;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (const Arc& a : arcs[u])
                if (a.cap > 0 && !seen[a.to]) {
                    seen[a.to] = true;
                    q.push(a.to);
                }
        }
        return seen;
    }
};

// Max internally-disjoint s-t paths; optionally stops early once >= limit.
int st_vertex_flow(const Graph& g, int s, int t, int limit, std::vector<int>* cut_out) {
    const int n = g.order();
    const int big = n + 1;
    VertexFlow net(n);
    for (int v = 0; v < n; ++v) net.add(2 * v, 2 * v + 1, (v == s || v == t) ? big : 1);
    for (auto [u, v] : g.edges()) {
        net.add(2 * u + 1, 2 * v, big);
        net.add(2 * v + 1, 2 * u, big);
    }
    int flow = 0;
    while ((cut_out || flow < limit) && net.bfs_augment(2 * s + 1, 2 * t)) ++flow;
    if (cut_out) {
        auto seen = net.residual_reachable(2 * s + 1);
        cut_out->clear();
        for (int v = 0; v < n; ++v)
            if (seen[2 * v] && !seen[2 * v + 1]) cut_out->push_back(v);
    }
    return flow;
}

} // namespace

int independence_number(const Graph& g) {
    const int n = g.order();
    if (n > 32) throw range_error("independence_number: exact search limited to n <= 32");
    // Maximum independent set of g = maximum clique of the complement.
    std::vector<std::uint64_t> comp(n);
    const std::uint64_t all = (n == 64) ? ~0ull : ((1ull << n) - 1);
    for (int v = 0; v < n; ++v) comp[v] = all & ~(g.row(v)[0] | (1ull << v));
    CliqueSolver solver{comp};
    solver.expand(all, 0);
    return solver.best;
}

int vertex_connectivity_flow(const Graph& g) {
    const int n = g.order();
    if (n < 2) throw domain_error("vertex connectivity requires n >= 2");
    if (!is_connected(g)) throw disconnected_error("vertex connectivity requires a connected graph");
    if (is_complete_graph(g)) return n - 1;
    int best = n - 1;
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t)
            if (!g.has_edge(s, t)) best = std::min(best, st_vertex_flow(g, s, t, best, nullptr));
    return best;
}

int vertex_connectivity_subsets(const Graph& g) {
    const int n = g.order();
    if (n < 2) throw domain_error("vertex connectivity requires n >= 2");
    if (n > 12) throw range_error("vertex_connectivity_subsets limited to n <= 12");
    if (!is_connected(g)) throw disconnected_error("vertex connectivity requires a connected graph");
    if (is_complete_graph(g)) return n - 1;
    int best = n - 1;
    for (std::uint64_t removed = 1; removed < (1ull << n); ++removed) {
        int size = std::popcount(removed);
        if (size >= best) continue;
        if (removal_disconnects(g, removed)) best = size;
    }
    return best;
}

int vertex_connectivity(const Graph& g) {
    return g.order() <= 12 ? vertex_connectivity_subsets(g) : vertex_connectivity_flow(g);
}

std::vector<int> min_vertex_cut(const Graph& g) {
    const int n = g.order();
    if (!is_connected(g)) throw disconnected_error("min_vertex_cut requires a connected graph");
    if (is_complete_graph(g)) throw domain_error("min_vertex_cut: complete graph has no cut");
    int best = n - 1;
    std::pair<int, int> best_pair{-1, -1};
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t)
            if (!g.has_edge(s, t)) {
                int f = st_vertex_flow(g, s, t, best, nullptr);
                if (f < best) {
                    best = f;
                    best_pair = {s, t};
                }
            }
    std::vector<int> cut;
    st_vertex_flow(g, best_pair.first, best_pair.second, n, &cut);
    return cut;
}

} // namespace specdl
