#include "specdl/analysis.hpp"

namespace specdl {

GraphAnalysis analyze(const Graph& g) {
    GraphAnalysis a{g, apsp(g), {}, {}, 0, 0, 0, 0};
    a.dl = sym_eigenvalues(distance_laplacian(a.dd));
    a.lap = sym_eigenvalues(laplacian(g));
    a.sigma = sigma_count(a.dl, a.avg_transmission());
    a.t_param = sigma_count(a.lap, a.avg_degree());
    a.dle_value = dle(a.dl, a.dd.wiener, a.n());
    a.le_value = le(a.lap, a.m(), a.n());
    return a;
}

} // namespace specdl
