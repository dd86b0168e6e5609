#ifndef SPECDL_RATIONAL_HPP
#define SPECDL_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <string>

#include "specdl/errors.hpp"

namespace specdl {

// Exact rational with 64-bit numerator/denominator. All quantities in this
// project are small (eigenvalues <= 2n, 2W <= n^3), so intermediates fit
// comfortably after gcd reduction; products are taken in __int128 first.
class Frac {
public:
    Frac() = default;
    Frac(long long v) : num_(v), den_(1) {}
    Frac(long long n, long long d) : num_(n), den_(d) { normalize(); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend Frac operator+(const Frac& a, const Frac& b) {
        return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Frac operator-(const Frac& a, const Frac& b) {
        return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Frac operator*(const Frac& a, const Frac& b) {
        return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Frac operator/(const Frac& a, const Frac& b) {
        if (b.num_ == 0) throw range_error("Frac: division by zero");
        return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }
    Frac operator-() const { Frac r; r.num_ = -num_; r.den_ = den_; return r; }

    Frac abs() const { return num_ < 0 ? -*this : *this; }

    friend bool operator==(const Frac& a, const Frac& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Frac& a, const Frac& b) { return !(a == b); }
    friend bool operator<(const Frac& a, const Frac& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator>(const Frac& a, const Frac& b) { return b < a; }
    friend bool operator<=(const Frac& a, const Frac& b) { return !(b < a); }
    friend bool operator>=(const Frac& a, const Frac& b) { return !(a < b); }

private:
    using i128 = __int128;

    static Frac make(i128 n, i128 d) {
        if (d < 0) { n = -n; d = -d; }
        i128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        Frac r;
        r.num_ = static_cast<long long>(n);
        r.den_ = static_cast<long long>(d);
        return r;
    }

    static i128 gcd128(i128 a, i128 b) {
        while (b != 0) { i128 t = a % b; a = b; b = t; }
        return a == 0 ? 1 : a;
    }

    void normalize() {
        if (den_ == 0) throw range_error("Frac: zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    long long num_{0};
    long long den_{1};
};

} // namespace specdl

#endif
