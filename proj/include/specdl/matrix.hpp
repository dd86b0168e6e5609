#ifndef SPECDL_MATRIX_HPP
#define SPECDL_MATRIX_HPP

#include <cmath>
#include <vector>

namespace specdl {

// Dense real symmetric matrix; symmetry is maintained by construction
// (set() writes the mirrored entry too).
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, 0.0) {}

    int order() const { return n_; }

    double operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    void set(int i, int j, double v) {
        a_[static_cast<size_t>(i) * n_ + j] = v;
        a_[static_cast<size_t>(j) * n_ + i] = v;
    }

    void add_diagonal(double v) {
        for (int i = 0; i < n_; ++i) a_[static_cast<size_t>(i) * n_ + i] += v;
    }

    double trace() const {
        double s = 0.0;
        for (int i = 0; i < n_; ++i) s += (*this)(i, i);
        return s;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (double v : a_) s += v * v;
        return std::sqrt(s);
    }

    std::vector<double>& data() { return a_; }
    const std::vector<double>& data() const { return a_; }

private:
    int n_{0};
    std::vector<double> a_;
};

} // namespace specdl

#endif
