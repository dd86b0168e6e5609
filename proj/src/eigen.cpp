#include "specdl/eigen.hpp"

#include <algorithm>
#include <cmath>

#include "specdl/errors.hpp"

namespace specdl {

double Spectrum::sum() const {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
}

Spectrum Spectrum::from_values(std::vector<double> v, Source s) {
    std::sort(v.begin(), v.end(), std::greater<>());
    return Spectrum{std::move(v), s};
}

namespace {

double off_diagonal_norm(const std::vector<double>& a, int n) {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double v = a[static_cast<size_t>(i) * n + j];
            s += 2.0 * v * v;
        }
    return std::sqrt(s);
}

} // namespace

Spectrum sym_eigenvalues(const SymMatrix& m, double tol_scale, int max_sweeps) {
    const int n = m.order();
    if (n < 1) throw range_error("sym_eigenvalues: order must be >= 1");
    std::vector<double> a = m.data();
    auto at = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };

    const double tol = tol_scale * std::max(m.frobenius_norm(), 1e-300);
    double off = off_diagonal_norm(a, n);
    int sweeps = 0;
    while (off > tol) {
        if (sweeps++ >= max_sweeps)
            throw convergence_error("Jacobi eigensolver did not converge, residual " +
                                        std::to_string(off),
                                    off);
        // Skip rotations whose pivot is negligible this sweep.
        const double skip = off / (static_cast<double>(n) * n);
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = at(p, q);
                if (std::abs(apq) <= skip * 1e-3) continue;
                double app = at(p, p), aqq = at(q, q);
                double theta = (aqq - app) / (2.0 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;

                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    double akp = at(k, p), akq = at(k, q);
                    at(k, p) = at(p, k) = c * akp - s * akq;
                    at(k, q) = at(q, k) = s * akp + c * akq;
                }
                at(p, p) = app - t * apq;
                at(q, q) = aqq + t * apq;
                at(p, q) = at(q, p) = 0.0;
            }
        }
        off = off_diagonal_norm(a, n);
    }

    std::vector<double> vals(n);
    for (int i = 0; i < n; ++i) vals[i] = at(i, i);
    return Spectrum::from_values(std::move(vals), Spectrum::Source::numeric);
}

int positive_inertia(const Spectrum& s, double tol_zero) {
    if (tol_zero < 0) tol_zero = default_zero_tol(s.size());
    int count = 0;
    for (double v : s.values)
        if (v > tol_zero) ++count;
    return count;
}

bool spectra_equal(const Spectrum& a, const Spectrum& b, double tol) {
    if (a.size() != b.size())
        throw range_error("spectra_equal: length mismatch " + std::to_string(a.size()) + " vs " +
                          std::to_string(b.size()));
    for (int i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > tol) return false;
    return true;
}

} // namespace specdl
