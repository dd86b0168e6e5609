#ifndef SPECDL_FAMILY_HPP
#define SPECDL_FAMILY_HPP

#include <string>
#include <vector>

#include "specdl/graph.hpp"

namespace specdl {

enum class FamilyKind {
    complete,            // K_n
    path,                // P_n
    cycle,               // C_n
    star,                // K_{1,n-1}
    complete_bipartite,  // K_{a,b}
    complete_split,      // CS_{t,n-t}: clique t joined to independent n-t
    pineapple,           // PA_{n,p}: K_{n-p} plus p pendants at one clique vertex
    s_plus,              // star K_{1,n-1} plus one edge between two leaves
    connectivity_family, // K_k v (K_t u K_{n-k-t})
    join,                // parts[0] v (parts[1] u parts[2] u ...)
};

// Parametrized graph family. Which of a,b,t,k,p are meaningful depends on
// kind; n is always the total order (derived for join/complete_bipartite).
struct FamilySpec {
    FamilyKind kind{FamilyKind::complete};
    int n{0};
    int a{0}, b{0};
    int t{0}, k{0}, p{0};
    std::vector<FamilySpec> parts; // join only; parts[0] joined to the union of the rest

    int order() const;
};

// Builds the named graph; throws range_error naming the violated constraint.
Graph build(const FamilySpec& spec);

// Mini-grammar: name:p1,p2,...
//   complete:n | path:n | cycle:n | star:n | complete_bipartite:a,b
//   complete_split:t,n | pineapple:n,p | s_plus:n | connectivity_family:n,k,t
//   join:<spec>|<spec>+<spec>[+...]   ('|' separates the joined side, '+' the union)
FamilySpec parse_family_spec(const std::string& text);

std::string family_name(const FamilySpec& spec);

} // namespace specdl

#endif
