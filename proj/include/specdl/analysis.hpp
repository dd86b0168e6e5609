#ifndef SPECDL_ANALYSIS_HPP
#define SPECDL_ANALYSIS_HPP

#include "specdl/eigen.hpp"
#include "specdl/energy.hpp"
#include "specdl/graph.hpp"
#include "specdl/metrics.hpp"

namespace specdl {

// Everything the theorem checks need about one connected graph, computed
// once so exhaustive sweeps do not repeat eigensolves.
struct GraphAnalysis {
    Graph g;
    DistanceData dd;
    Spectrum dl;  // distance Laplacian spectrum, descending
    Spectrum lap; // Laplacian spectrum, descending
    int sigma{0};
    int t_param{0};
    double dle_value{0};
    double le_value{0};

    int n() const { return g.order(); }
    long long m() const { return g.size(); }
    double avg_transmission() const { return 2.0 * dd.wiener / n(); }
    double avg_degree() const { return 2.0 * m() / n(); }
};

GraphAnalysis analyze(const Graph& g);

} // namespace specdl

#endif
