#ifndef SPECDL_METRICS_HPP
#define SPECDL_METRICS_HPP

#include <vector>

#include "specdl/graph.hpp"
#include "specdl/matrix.hpp"

namespace specdl {

// Shortest-path data of a connected graph, all integer arithmetic.
struct DistanceData {
    int n{0};
    std::vector<int> dist;       // flat n*n, dist[i*n+j]
    std::vector<long long> tr;   // transmissions
    long long wiener{0};
    int diameter{0};

    int at(int i, int j) const { return dist[static_cast<size_t>(i) * n + j]; }
    long long min_transmission() const;
};

// BFS from every vertex; throws domain_error if g is disconnected.
DistanceData apsp(const Graph& g);

SymMatrix distance_matrix(const DistanceData& dd);
SymMatrix distance_laplacian(const Graph& g);
SymMatrix distance_laplacian(const DistanceData& dd);
SymMatrix laplacian(const Graph& g);

// Exact maximum independent set size via branch and bound on complement
// cliques with a greedy coloring bound; n <= 32.
int independence_number(const Graph& g);

// kappa(G); n-1 for complete graphs by convention. Dispatches to the subset
// search for small n and to max-flow otherwise; both are exposed for
// cross-checking.
int vertex_connectivity(const Graph& g);
int vertex_connectivity_flow(const Graph& g);
int vertex_connectivity_subsets(const Graph& g); // n <= 12

// One minimum vertex cut of a connected non-complete graph.
std::vector<int> min_vertex_cut(const Graph& g);

} // namespace specdl

#endif
