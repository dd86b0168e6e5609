#ifndef SPECDL_THEOREMS_HPP
#define SPECDL_THEOREMS_HPP

#include <string>
#include <utility>
#include <vector>

#include "specdl/analysis.hpp"
#include "specdl/family.hpp"

namespace specdl {

enum class TheoremId {
    edge_monotonicity,
    dle_via_sk_identity,
    brouwer,
    sandwich_upper,
    sandwich_lower,
    sigma_t_relation,
    second_smallest_bound,
    wiener_lower_bound,
    bipartite_bound,
    independence_bound,
    connectivity_bound,
    eigenvalue_floor,
    integral_family,
};

std::string theorem_name(TheoremId id);

// Absolute tolerance for equality detection on the energy scale.
inline constexpr double tol_eq = 1e-7;

// One evaluated bound instance, orientation normalized so that the claim is
// always lhs >= rhs. printed_rhs carries the flattened closed form quoted
// for the bound when one exists; printed_form_differs flags a mismatch with
// the spectral-sum value (the authoritative rhs).
struct BoundCheck {
    TheoremId theorem{};
    std::string case_label;
    double lhs{0};
    double rhs{0};
    bool holds{false};
    bool equality{false};
    bool equality_predicted{false};
    bool applicable{true};
    double printed_rhs{0};
    bool has_printed_form{false};
    bool printed_form_differs{false};
    int index{-1}; // per-index checks (monotonicity, floors)
};

// Structural recognizers used for equality predictions; exact, no tolerance.
bool is_complete_bipartite_graph(const Graph& g);
bool is_complete_split_graph(const Graph& g, int t);
bool is_connectivity_family_graph(const Graph& g, int k, int t);

// rho_i^L(g-e) >= rho_i^L(g) for every index; throws domain_error when g-e
// is disconnected.
std::vector<BoundCheck> check_edge_monotonicity(const GraphAnalysis& a, std::pair<int, int> e);

// Identity DLE = 2(sigma(2m/n + 2) - 2m + S_{n-sigma-1}); diameter 2, n >= 3.
BoundCheck check_thm_dle_via_sk(const GraphAnalysis& a);

// S_k <= m + C(k+1,2) for 1 <= k <= n.
BoundCheck check_brouwer(const GraphAnalysis& a, int k);

// DLE <= LE + 4(sigma - m/n) and DLE >= LE - 2(2m/n - 2(n-1) + 2t);
// diameter 2, n >= 3.
std::pair<BoundCheck, BoundCheck> check_sandwich(const GraphAnalysis& a);

// sigma >= n - (t+1); diameter 2, n >= 3.
BoundCheck check_sigma_t_relation(const GraphAnalysis& a);

// rho^L_{n-1} <= n/(n-1) Tr_min; equality iff some vertex has transmission n-1.
BoundCheck check_second_smallest_bound(const GraphAnalysis& a);

// DLE >= 8W/n - 2n Tr_min/(n-1); equality iff sigma = n-2 and Tr_min = n-1.
BoundCheck check_wiener_lower_bound(const GraphAnalysis& a);

// Bipartite lower bound with case selection on (a, b); equality iff K_{a,b}.
BoundCheck check_bipartite_bound(const GraphAnalysis& a);

// Independence-number lower bound; equality iff CS_{t,n-t}.
BoundCheck check_independence_bound(const GraphAnalysis& a);

// Vertex-connectivity lower bound, rhs from spectral sums of the extremal
// family. Evaluated for every admissible t; the returned check carries the
// binding (smallest) rhs. connectivity_bound_table exposes all of them.
BoundCheck check_connectivity_bound(const GraphAnalysis& a);
std::vector<BoundCheck> connectivity_bound_table(const GraphAnalysis& a);

// Per-index eigenvalue floors from the bipartite and connectivity families.
std::vector<BoundCheck> check_eigenvalue_floor_corollaries(const GraphAnalysis& a);

// All numeric D^L eigenvalues of the built join within 1e-6 of integers.
BoundCheck check_integral_family(const FamilySpec& spec);

// Graph-input conveniences.
std::vector<BoundCheck> check_edge_monotonicity(const Graph& g, std::pair<int, int> e);

} // namespace specdl

#endif
