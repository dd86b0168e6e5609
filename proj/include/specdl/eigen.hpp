#ifndef SPECDL_EIGEN_HPP
#define SPECDL_EIGEN_HPP

#include <vector>

#include "specdl/matrix.hpp"

namespace specdl {

// Real eigenvalues sorted descending, following the usual indexing
// rho_1 >= ... >= rho_n.
struct Spectrum {
    enum class Source { numeric, analytic };

    std::vector<double> values;
    Source source{Source::numeric};

    int size() const { return static_cast<int>(values.size()); }
    double operator[](int i) const { return values[i]; }
    double sum() const;

    static Spectrum from_values(std::vector<double> v, Source s = Source::numeric);
};

// All eigenvalues of a symmetric matrix via cyclic Jacobi rotations. Sweeps
// run until the off-diagonal Frobenius norm drops below
// tol_scale * ||m||_F (default 1e-12); throws convergence_error (carrying
// the residual) after max_sweeps.
Spectrum sym_eigenvalues(const SymMatrix& m, double tol_scale = 1e-12, int max_sweeps = 100);

// Default tolerance for classifying an eigenvalue of D^L as zero; entries
// grow with n, so the tolerance scales with n. Overridable at call sites.
inline double default_zero_tol(int n) { return 1e-7 * n; }

// Count of eigenvalues > +tol_zero; tol_zero < 0 means default_zero_tol(n).
int positive_inertia(const Spectrum& s, double tol_zero = -1.0);

// Elementwise |a_i - b_i| <= tol on the sorted lists; throws range_error on
// length mismatch.
bool spectra_equal(const Spectrum& a, const Spectrum& b, double tol);

} // namespace specdl

#endif
