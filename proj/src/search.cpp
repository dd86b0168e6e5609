#include "specdl/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "specdl/eigen.hpp"
#include "specdl/energy.hpp"
#include "specdl/enumerate.hpp"
#include "specdl/family.hpp"
#include "specdl/metrics.hpp"
#include "specdl/theorems.hpp"

namespace specdl {

std::string ClassSpec::name() const {
    switch (kind) {
    case Kind::all: return "all";
    case Kind::bipartite: return "bipartite";
    case Kind::independence: return "independence:alpha=" + std::to_string(alpha);
    case Kind::connectivity: return "connectivity:k=" + std::to_string(k);
    }
    return "?";
}

namespace {

constexpr double kCoarseMargin = 1e-6;
constexpr double kTieTol = 1e-9;

double dle_of(const Graph& g, double tol_scale) {
    DistanceData dd = apsp(g);
    Spectrum s = sym_eigenvalues(distance_laplacian(dd), tol_scale, 200);
    return dle(s, dd.wiener, g.order());
}

bool in_class(const ClassSpec& cls, const Graph& g) {
    switch (cls.kind) {
    case ClassSpec::Kind::all: return true;
    case ClassSpec::Kind::bipartite: return bipartition(g).has_value();
    case ClassSpec::Kind::independence: return independence_number(g) == cls.alpha;
    case ClassSpec::Kind::connectivity:
        return g.order() >= 2 && vertex_connectivity(g) == cls.k;
    }
    return false;
}

void validate_class(const ClassSpec& cls, int n) {
    if (cls.kind == ClassSpec::Kind::independence && (cls.alpha < 1 || cls.alpha > n - 1))
        throw range_error("independence class: alpha must be in 1..n-1");
    if (cls.kind == ClassSpec::Kind::connectivity && (cls.k < 1 || cls.k > n - 1))
        throw range_error("connectivity class: k must be in 1..n-1");
}

} // namespace

namespace {

// Shared scan for both extremes; sign = +1 minimizes, -1 maximizes.
ExtremalResult extremal_scan(const ClassSpec& cls, int n, int workers, bool allow_large,
                             double sign) {
    if (n < 3 || n > 8) throw range_error("extremal scan: 3 <= n <= 8");
    if (n == 8 && !allow_large)
        throw range_error("extremal scan: n = 8 scans 2^28 masks; pass allow_large");
    validate_class(cls, n);
    if (workers <= 0) workers = worker_count();

    struct Local {
        double min = std::numeric_limits<double>::infinity();
        std::vector<std::pair<std::uint64_t, double>> candidates;
        long long scanned = 0;
    };
    std::vector<Local> locals(workers);

    scan_connected_parallel(n, workers, [&](int w, const Graph& g) {
        Local& loc = locals[w];
        if (!in_class(cls, g)) return;
        ++loc.scanned;
        double v = sign * dle_of(g, 1e-12);
        if (v < loc.min) loc.min = v;
        if (v <= loc.min + kCoarseMargin) loc.candidates.emplace_back(g.edge_mask(), v);
    });

    ExtremalResult result;
    result.cls = cls;
    result.n = n;
    double coarse_min = std::numeric_limits<double>::infinity();
    for (const auto& loc : locals) {
        coarse_min = std::min(coarse_min, loc.min);
        result.graphs_scanned += loc.scanned;
    }
    if (result.graphs_scanned == 0)
        throw domain_error("class " + cls.name() + " is empty at n = " + std::to_string(n));

    // Refine every coarse candidate at tight tolerance; keep genuine ties.
    std::vector<std::pair<std::uint64_t, double>> refined;
    for (const auto& loc : locals)
        for (auto [mask, v] : loc.candidates)
            if (v <= coarse_min + kCoarseMargin)
                refined.emplace_back(mask,
                                     sign * dle_of(Graph::from_edge_mask(n, mask), 1e-15));
    double true_min = std::numeric_limits<double>::infinity();
    for (auto [mask, v] : refined) true_min = std::min(true_min, v);

    std::set<std::string> canon;
    for (auto [mask, v] : refined)
        if (v <= true_min + kTieTol) canon.insert(canonical_graph6(Graph::from_edge_mask(n, mask)));
    result.min_dle = sign * true_min;
    result.minimizer_graph6.assign(canon.begin(), canon.end());
    return result;
}

} // namespace

ExtremalResult max_dle_over_class(const ClassSpec& cls, int n, int workers, bool allow_large) {
    ExtremalResult result = extremal_scan(cls, n, workers, allow_large, -1.0);
    result.evidence_only = true;
    return result;
}

ExtremalResult min_dle_over_class(const ClassSpec& cls, int n, int workers, bool allow_large) {
    ExtremalResult result = extremal_scan(cls, n, workers, allow_large, +1.0);

    // Compare with the predicted extremal family.
    switch (cls.kind) {
    case ClassSpec::Kind::bipartite: {
        Graph predicted = build(FamilySpec{FamilyKind::complete_bipartite, n, n / 2,
                                           n - n / 2, 0, 0, 0, {}});
        result.matches_predicted_family =
            result.minimizer_graph6 == std::vector<std::string>{canonical_graph6(predicted)};
        break;
    }
    case ClassSpec::Kind::independence: {
        Graph predicted =
            build(FamilySpec{FamilyKind::complete_split, n, 0, 0, n - cls.alpha, 0, 0, {}});
        result.matches_predicted_family =
            result.minimizer_graph6 == std::vector<std::string>{canonical_graph6(predicted)};
        break;
    }
    case ClassSpec::Kind::connectivity: {
        if (cls.k == n - 1) {
            Graph kn = build(FamilySpec{FamilyKind::complete, n, 0, 0, 0, 0, 0, {}});
            result.matches_predicted_family =
                result.minimizer_graph6 == std::vector<std::string>{canonical_graph6(kn)};
            result.witness_t = 1;
            break;
        }
        std::set<std::string> family;
        std::vector<std::pair<std::string, int>> family_t;
        for (int t = 1; t <= (n - cls.k) / 2; ++t) {
            Graph fam =
                build(FamilySpec{FamilyKind::connectivity_family, n, 0, 0, t, cls.k, 0, {}});
            std::string c = canonical_graph6(fam);
            family.insert(c);
            family_t.emplace_back(c, t);
        }
        result.matches_predicted_family = !result.minimizer_graph6.empty();
        for (const auto& m : result.minimizer_graph6)
            if (!family.count(m)) result.matches_predicted_family = false;
        if (result.matches_predicted_family)
            for (const auto& [c, t] : family_t)
                if (c == result.minimizer_graph6.front()) result.witness_t = t;
        break;
    }
    case ClassSpec::Kind::all: {
        Graph kn = build(FamilySpec{FamilyKind::complete, n, 0, 0, 0, 0, 0, {}});
        result.matches_predicted_family =
            result.minimizer_graph6 == std::vector<std::string>{canonical_graph6(kn)};
        break;
    }
    }
    return result;
}

SigmaCensus sigma_census(int n, int workers) {
    if (n < 3 || n > 7) throw range_error("sigma_census: 3 <= n <= 7");
    if (workers <= 0) workers = worker_count();

    struct Local {
        std::vector<long long> histogram;
        std::vector<std::uint64_t> ones, nm2, nm1;
        long long scanned = 0;
        long long tr_regular = 0;
        long long tr_regular_match = 0;
    };
    std::vector<Local> locals(workers);
    for (auto& loc : locals) loc.histogram.assign(n, 0);

    scan_connected_parallel(n, workers, [&](int w, const Graph& g) {
        Local& loc = locals[w];
        ++loc.scanned;
        DistanceData dd = apsp(g);
        Spectrum dl = sym_eigenvalues(distance_laplacian(dd));
        int sigma = sigma_count(dl, 2.0 * dd.wiener / n);
        loc.histogram[sigma] += 1;
        if (sigma == 1) loc.ones.push_back(g.edge_mask());
        if (sigma == n - 2) loc.nm2.push_back(g.edge_mask());
        if (sigma == n - 1) loc.nm1.push_back(g.edge_mask());

        bool tr_regular = true;
        for (int v = 1; v < n; ++v)
            if (dd.tr[v] != dd.tr[0]) tr_regular = false;
        if (tr_regular) {
            ++loc.tr_regular;
            Spectrum dist = sym_eigenvalues(distance_matrix(dd));
            if (sigma == n - positive_inertia(dist)) ++loc.tr_regular_match;
        }
    });

    SigmaCensus census;
    census.n = n;
    census.histogram.assign(n, 0);
    auto dedupe = [&](const std::vector<std::uint64_t> Local::* member) {
        std::set<std::string> canon;
        for (const auto& loc : locals)
            for (std::uint64_t mask : loc.*member)
                canon.insert(canonical_graph6(Graph::from_edge_mask(n, mask)));
        return std::vector<std::string>(canon.begin(), canon.end());
    };
    for (const auto& loc : locals) {
        census.graphs_scanned += loc.scanned;
        census.transmission_regular_count += loc.tr_regular;
        census.transmission_regular_sigma_matches += loc.tr_regular_match;
        for (int s = 0; s < n; ++s) census.histogram[s] += loc.histogram[s];
    }
    census.sigma_one = dedupe(&Local::ones);
    census.sigma_n_minus_2 = dedupe(&Local::nm2);
    census.sigma_n_minus_1 = dedupe(&Local::nm1);
    return census;
}

} // namespace specdl
