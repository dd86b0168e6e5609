#ifndef SPECDL_SEARCH_HPP
#define SPECDL_SEARCH_HPP

#include <string>
#include <vector>

#include "specdl/graph.hpp"

namespace specdl {

// Which slice of the connected graphs of order n a scan covers.
struct ClassSpec {
    enum class Kind { all, bipartite, independence, connectivity };
    Kind kind{Kind::all};
    int alpha{0}; // independence number (independence class)
    int k{0};     // vertex connectivity (connectivity class)

    std::string name() const;
};

struct ExtremalResult {
    ClassSpec cls;
    int n{0};
    std::vector<std::string> minimizer_graph6; // canonical forms, sorted, deduped
    double min_dle{0};
    bool matches_predicted_family{false};
    int witness_t{-1}; // connectivity class: t of the minimizing family member
    long long graphs_scanned{0};
    bool evidence_only{false}; // maximizer runs carry no predicted family
};

// Scans every labeled connected graph of order n (3 <= n <= 8; n = 8 only
// with allow_large) restricted to the class, and returns all DLE minimizers
// up to isomorphism. Two-stage comparison: candidates within 1e-6 of the
// running minimum are kept, then re-solved at tight tolerance and filtered
// at 1e-9 so reported ties are genuine. Deterministic for any worker count.
ExtremalResult min_dle_over_class(const ClassSpec& cls, int n, int workers = 0,
                                  bool allow_large = false);

// Maximizer analog, reported purely as empirical evidence (no extremal
// family is asserted); result.evidence_only is set and the minimizer fields
// hold the maximizing graphs and maximum energy.
ExtremalResult max_dle_over_class(const ClassSpec& cls, int n, int workers = 0,
                                  bool allow_large = false);

struct SigmaCensus {
    int n{0};
    std::vector<long long> histogram; // histogram[s] = #graphs with sigma = s
    std::vector<std::string> sigma_one;          // canonical graph6, sigma = 1
    std::vector<std::string> sigma_n_minus_2;    // sigma = n-2
    std::vector<std::string> sigma_n_minus_1;    // sigma = n-1
    long long graphs_scanned{0};
    long long transmission_regular_count{0};
    long long transmission_regular_sigma_matches{0}; // sigma == n - gamma(D)
};

// Distribution of sigma over all labeled connected graphs of order n
// (3 <= n <= 7), plus the sigma = n - gamma check on transmission-regular
// graphs.
SigmaCensus sigma_census(int n, int workers = 0);

} // namespace specdl

#endif
