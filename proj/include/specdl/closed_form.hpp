#ifndef SPECDL_CLOSED_FORM_HPP
#define SPECDL_CLOSED_FORM_HPP

#include <optional>
#include <utility>
#include <vector>

#include "specdl/eigen.hpp"
#include "specdl/family.hpp"
#include "specdl/rational.hpp"

namespace specdl {

// Exact spectrum as (value, multiplicity) pairs in descending value order.
// For a distance-Laplacian spectrum, sum() equals 2W.
struct AnalyticSpectrum {
    struct Entry {
        Frac value;
        int multiplicity;
    };

    std::vector<Entry> entries;

    int order() const;
    Frac sum() const;
    Frac u_k(int k) const; // sum of the k largest values, u_0 = 0
    std::vector<double> expand() const;
    Spectrum to_spectrum() const;

    static AnalyticSpectrum from_entries(std::vector<Entry> e);
};

// D^L(K_n) = {n^[n-1], 0}.
AnalyticSpectrum dl_spectrum_complete(int n);

// D^L(K_{a,b}) = {(2n-a)^[b-1], (2n-b)^[a-1], n, 0}, n = a+b.
AnalyticSpectrum dl_spectrum_complete_bipartite(int a, int b);

// D^L(CS_{t,n-t}) = {(2n-t)^[n-t-1], n^[t], 0}.
AnalyticSpectrum dl_spectrum_complete_split(int t, int n);

// D^L of G0 v (G1 u G2) from the parts' D^L spectra: nonzero eigenvalues
// shift by n1+n2 / n0+2n2 / n0+2n1, plus the quotient roots {2n-n0, n} and 0.
// Valid when every part has diameter <= 2 (each part's distance Laplacian
// must act like 2n_i - Laplacian on vectors orthogonal to the ones vector).
AnalyticSpectrum dl_spectrum_join(const AnalyticSpectrum& s0, const AnalyticSpectrum& s1,
                                  const AnalyticSpectrum& s2, int n0, int n1, int n2);

// Numeric variant of the join composition, same preconditions.
std::vector<double> dl_spectrum_join(const std::vector<double>& s0,
                                     const std::vector<double>& s1,
                                     const std::vector<double>& s2, int n0, int n1, int n2);

// The quotient eigenvalues {2n-n0, n} and the monic quadratic they satisfy,
// x^2 - (3n-n0) x + n(2n-n0), for symbolic verification.
std::pair<Frac, Frac> join_quotient_roots(int n, int n0);
Frac join_quotient_poly(const Frac& x, int n, int n0);

// D^L(K_k v (K_t u K_{n-k-t})) = {2n-k, (2n-t-k)^[t-1], (n+t)^[n-t-k-1], n^[k], 0}.
AnalyticSpectrum dl_spectrum_connectivity_family(int n, int k, int t);

// Diameter-2 transform: rho^L_i = 2n - mu_{n-i} for i < n, plus 0. The caller
// certifies the graph has diameter exactly 2.
AnalyticSpectrum dl_from_laplacian_diam2(const AnalyticSpectrum& laplacian, int n);
std::vector<double> dl_from_laplacian_diam2(const std::vector<double>& mu_descending, int n);

// Exact D^L spectrum for the family specs that have one (complete, star,
// complete bipartite, complete split, the connectivity family, and joins of
// such parts); nullopt otherwise.
std::optional<AnalyticSpectrum> analytic_dl(const FamilySpec& spec);

} // namespace specdl

#endif
