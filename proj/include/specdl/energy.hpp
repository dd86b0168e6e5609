#ifndef SPECDL_ENERGY_HPP
#define SPECDL_ENERGY_HPP

#include <string>

#include "specdl/closed_form.hpp"
#include "specdl/eigen.hpp"
#include "specdl/graph.hpp"
#include "specdl/rational.hpp"

namespace specdl {

// Comparison slack for counting eigenvalues against a threshold; sigma is
// integer-valued, so boundary cases must not flip on float noise.
inline double threshold_tolerance(double threshold) {
    return 1e-9 * std::max(1.0, std::abs(threshold));
}

// Sum of |rho^L_i - 2W/n| over a distance-Laplacian spectrum.
double dle(const Spectrum& dl_spectrum, long long wiener, int n);

// Sum of |mu_i - 2m/n| over a Laplacian spectrum.
double le(const Spectrum& lap_spectrum, long long m, int n);

// Sum of |rho^D_i| over a distance spectrum.
double de(const Spectrum& dist_spectrum);

// Count of values >= threshold - tol; used for sigma (D^L vs 2W/n) and for
// t (Laplacian vs 2m/n). Spectrum must be descending.
int sigma_count(const Spectrum& s, double threshold);

// Strict variant (> threshold + tol); the sigma/t corollary counts this way.
int sigma_count_strict(const Spectrum& s, double threshold);

// Partial sums of the k largest values; u_0 = 0. s_k is the Laplacian-side
// name for the same sum.
double u_k(const Spectrum& s, int k);
double s_k(const Spectrum& s, int k);

// 2 max_j (U_j - 2jW/n); must agree with dle() on any D^L spectrum.
double dle_via_max(const Spectrum& dl_spectrum, long long wiener, int n);

// Trace norm of D^L - (2W/n) I, via a fresh eigensolve of the shifted
// matrix; equals dle() for every connected graph.
double trace_norm_deviation(const Graph& g);

// Exact-rational path for analytic integer spectra. The threshold for a
// D^L spectrum is sum/order = 2W/n, compared by cross-multiplication.
Frac dle_exact(const AnalyticSpectrum& s);
int sigma_count_exact(const AnalyticSpectrum& s, const Frac& threshold);
int sigma_exact(const AnalyticSpectrum& s);

// Per-graph energy summary.
struct EnergyReport {
    int n{0};
    long long m{0};
    long long wiener{0};
    double dle{0}, le{0}, de{0};
    int sigma{0};
    int t_param{0};
    double avg_transmission{0}; // 2W/n
    double avg_degree{0};       // 2m/n
    bool exact{false};          // true when an analytic D^L spectrum backed dle/sigma
    std::string dle_exact_str;  // rational form when exact
};

EnergyReport compute_energy_report(const Graph& g);

} // namespace specdl

#endif
