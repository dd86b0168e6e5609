#include "specdl/energy.hpp"

#include <algorithm>
#include <cmath>

#include "specdl/metrics.hpp"

namespace specdl {

double dle(const Spectrum& dl_spectrum, long long wiener, int n) {
    const double avg = 2.0 * wiener / n;
    double s = 0.0;
    for (double v : dl_spectrum.values) s += std::abs(v - avg);
    return s;
}

double le(const Spectrum& lap_spectrum, long long m, int n) {
    const double avg = 2.0 * m / n;
    double s = 0.0;
    for (double v : lap_spectrum.values) s += std::abs(v - avg);
    return s;
}

double de(const Spectrum& dist_spectrum) {
    double s = 0.0;
    for (double v : dist_spectrum.values) s += std::abs(v);
    return s;
}

int sigma_count(const Spectrum& s, double threshold) {
    const double tol = threshold_tolerance(threshold);
    int count = 0;
    for (double v : s.values)
        if (v >= threshold - tol) ++count;
    return count;
}

int sigma_count_strict(const Spectrum& s, double threshold) {
    const double tol = threshold_tolerance(threshold);
    int count = 0;
    for (double v : s.values)
        if (v > threshold + tol) ++count;
    return count;
}

double u_k(const Spectrum& s, int k) {
    if (k < 0 || k > s.size())
        throw range_error("u_k: k out of range 0.." + std::to_string(s.size()));
    double sum = 0.0;
    for (int i = 0; i < k; ++i) sum += s[i];
    return sum;
}

double s_k(const Spectrum& s, int k) { return u_k(s, k); }

double dle_via_max(const Spectrum& dl_spectrum, long long wiener, int n) {
    const double step = 2.0 * wiener / n;
    double best = 0.0, partial = 0.0;
    for (int j = 1; j <= dl_spectrum.size(); ++j) {
        partial += dl_spectrum[j - 1];
        best = std::max(best, partial - j * step);
    }
    return 2.0 * best;
}

double trace_norm_deviation(const Graph& g) {
    DistanceData dd = apsp(g);
    SymMatrix m = distance_laplacian(dd);
    m.add_diagonal(-2.0 * dd.wiener / dd.n);
    Spectrum shifted = sym_eigenvalues(m);
    double s = 0.0;
    for (double v : shifted.values) s += std::abs(v);
    return s;
}

Frac dle_exact(const AnalyticSpectrum& s) {
    const Frac avg = s.sum() / Frac(s.order());
    Frac total;
    for (const auto& e : s.entries) total = total + (e.value - avg).abs() * Frac(e.multiplicity);
    return total;
}

int sigma_count_exact(const AnalyticSpectrum& s, const Frac& threshold) {
    int count = 0;
    for (const auto& e : s.entries)
        if (e.value >= threshold) count += e.multiplicity;
    return count;
}

int sigma_exact(const AnalyticSpectrum& s) {
    return sigma_count_exact(s, s.sum() / Frac(s.order()));
}

EnergyReport compute_energy_report(const Graph& g) {
    DistanceData dd = apsp(g);
    Spectrum dl = sym_eigenvalues(distance_laplacian(dd));
    Spectrum lap = sym_eigenvalues(laplacian(g));
    Spectrum dist = sym_eigenvalues(distance_matrix(dd));

    EnergyReport r;
    r.n = g.order();
    r.m = g.size();
    r.wiener = dd.wiener;
    r.avg_transmission = 2.0 * dd.wiener / r.n;
    r.avg_degree = 2.0 * r.m / r.n;
    r.dle = dle(dl, dd.wiener, r.n);
    r.le = le(lap, r.m, r.n);
    r.de = de(dist);
    r.sigma = sigma_count(dl, r.avg_transmission);
    r.t_param = sigma_count(lap, r.avg_degree);
    return r;
}

} // namespace specdl
