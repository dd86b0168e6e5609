#include "specdl/closed_form.hpp"

#include <algorithm>

#include "specdl/errors.hpp"

namespace specdl {

int AnalyticSpectrum::order() const {
    int total = 0;
    for (const auto& e : entries) total += e.multiplicity;
    return total;
}

Frac AnalyticSpectrum::sum() const {
    Frac s;
    for (const auto& e : entries) s = s + e.value * Frac(e.multiplicity);
    return s;
}

Frac AnalyticSpectrum::u_k(int k) const {
    if (k < 0 || k > order())
        throw range_error("u_k: k out of range 0.." + std::to_string(order()));
    Frac s;
    int left = k;
    for (const auto& e : entries) {
        int take = std::min(left, e.multiplicity);
        s = s + e.value * Frac(take);
        left -= take;
        if (left == 0) break;
    }
    return s;
}

std::vector<double> AnalyticSpectrum::expand() const {
    std::vector<double> out;
    out.reserve(order());
    for (const auto& e : entries)
        for (int i = 0; i < e.multiplicity; ++i) out.push_back(e.value.value());
    return out;
}

Spectrum AnalyticSpectrum::to_spectrum() const {
    return Spectrum::from_values(expand(), Spectrum::Source::analytic);
}

AnalyticSpectrum AnalyticSpectrum::from_entries(std::vector<Entry> e) {
    std::sort(e.begin(), e.end(),
              [](const Entry& a, const Entry& b) { return b.value < a.value; });
    // Merge equal values so multiplicities are well defined.
    std::vector<Entry> merged;
    for (const auto& entry : e) {
        if (entry.multiplicity == 0) continue;
        if (entry.multiplicity < 0) throw range_error("multiplicities must be >= 1");
        if (!merged.empty() && merged.back().value == entry.value)
            merged.back().multiplicity += entry.multiplicity;
        else
            merged.push_back(entry);
    }
    return AnalyticSpectrum{std::move(merged)};
}

AnalyticSpectrum dl_spectrum_complete(int n) {
    if (n < 1) throw range_error("dl_spectrum_complete: n >= 1");
    if (n == 1) return AnalyticSpectrum::from_entries({{Frac(0), 1}});
    return AnalyticSpectrum::from_entries({{Frac(n), n - 1}, {Frac(0), 1}});
}

AnalyticSpectrum dl_spectrum_complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw range_error("dl_spectrum_complete_bipartite: a,b >= 1");
    int n = a + b;
    return AnalyticSpectrum::from_entries({{Frac(2 * n - a), b - 1},
                                           {Frac(2 * n - b), a - 1},
                                           {Frac(n), 1},
                                           {Frac(0), 1}});
}

AnalyticSpectrum dl_spectrum_complete_split(int t, int n) {
    if (t < 1 || t > n - 1) throw range_error("dl_spectrum_complete_split: 1 <= t <= n-1");
    return AnalyticSpectrum::from_entries(
        {{Frac(2 * n - t), n - t - 1}, {Frac(n), t}, {Frac(0), 1}});
}

AnalyticSpectrum dl_spectrum_join(const AnalyticSpectrum& s0, const AnalyticSpectrum& s1,
                                  const AnalyticSpectrum& s2, int n0, int n1, int n2) {
    if (s0.order() != n0 || s1.order() != n1 || s2.order() != n2)
        throw range_error("dl_spectrum_join: spectrum length does not match its order");
    const int n = n0 + n1 + n2;
    std::vector<AnalyticSpectrum::Entry> out;
    auto shift_nonzero = [&](const AnalyticSpectrum& s, long long shift) {
        for (const auto& e : s.entries)
            if (e.value != Frac(0)) out.push_back({e.value + Frac(shift), e.multiplicity});
    };
    shift_nonzero(s0, n1 + n2);
    shift_nonzero(s1, n0 + 2LL * n2);
    shift_nonzero(s2, n0 + 2LL * n1);
    auto roots = join_quotient_roots(n, n0);
    out.push_back({roots.first, 1});
    out.push_back({roots.second, 1});
    out.push_back({Frac(0), 1});
    return AnalyticSpectrum::from_entries(std::move(out));
}

std::vector<double> dl_spectrum_join(const std::vector<double>& s0,
                                     const std::vector<double>& s1,
                                     const std::vector<double>& s2, int n0, int n1, int n2) {
    if (static_cast<int>(s0.size()) != n0 || static_cast<int>(s1.size()) != n1 ||
        static_cast<int>(s2.size()) != n2)
        throw range_error("dl_spectrum_join: spectrum length does not match its order");
    const int n = n0 + n1 + n2;
    std::vector<double> out;
    out.reserve(n);
    // The zero eigenvalue of a connected part is its smallest; drop one per part.
    auto shift_all_but_min = [&](const std::vector<double>& s, double shift) {
        if (s.empty()) return;
        size_t min_idx = 0;
        for (size_t i = 1; i < s.size(); ++i)
            if (s[i] < s[min_idx]) min_idx = i;
        for (size_t i = 0; i < s.size(); ++i)
            if (i != min_idx) out.push_back(s[i] + shift);
    };
    shift_all_but_min(s0, n1 + n2);
    shift_all_but_min(s1, n0 + 2.0 * n2);
    shift_all_but_min(s2, n0 + 2.0 * n1);
    out.push_back(2.0 * n - n0);
    out.push_back(n);
    out.push_back(0.0);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::pair<Frac, Frac> join_quotient_roots(int n, int n0) {
    return {Frac(2LL * n - n0), Frac(n)};
}

Frac join_quotient_poly(const Frac& x, int n, int n0) {
    return x * x - Frac(3LL * n - n0) * x + Frac(n) * Frac(2LL * n - n0);
}

AnalyticSpectrum dl_spectrum_connectivity_family(int n, int k, int t) {
    if (k < 1 || k > n - 2)
        throw range_error("dl_spectrum_connectivity_family: 1 <= k <= n-2");
    if (t < 1 || t > (n - k) / 2)
        throw range_error("dl_spectrum_connectivity_family: 1 <= t <= floor((n-k)/2)");
    return AnalyticSpectrum::from_entries({{Frac(2 * n - k), 1},
                                           {Frac(2 * n - t - k), t - 1},
                                           {Frac(n + t), n - t - k - 1},
                                           {Frac(n), k},
                                           {Frac(0), 1}});
}

AnalyticSpectrum dl_from_laplacian_diam2(const AnalyticSpectrum& laplacian, int n) {
    if (laplacian.order() != n)
        throw range_error("dl_from_laplacian_diam2: spectrum length != n");
    std::vector<AnalyticSpectrum::Entry> out;
    // Map the n-1 largest Laplacian eigenvalues; the smallest (0) is replaced
    // by the fixed 0 of the distance Laplacian.
    int remaining = n - 1;
    for (const auto& e : laplacian.entries) {
        int take = std::min(remaining, e.multiplicity);
        if (take > 0) out.push_back({Frac(2LL * n) - e.value, take});
        remaining -= take;
        if (remaining == 0) break;
    }
    out.push_back({Frac(0), 1});
    return AnalyticSpectrum::from_entries(std::move(out));
}

std::vector<double> dl_from_laplacian_diam2(const std::vector<double>& mu_descending, int n) {
    if (static_cast<int>(mu_descending.size()) != n)
        throw range_error("dl_from_laplacian_diam2: spectrum length != n");
    std::vector<double> out;
    out.reserve(n);
    for (int i = 0; i < n - 1; ++i) out.push_back(2.0 * n - mu_descending[i]);
    out.push_back(0.0);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::optional<AnalyticSpectrum> analytic_dl(const FamilySpec& spec) {
    switch (spec.kind) {
    case FamilyKind::complete: return dl_spectrum_complete(spec.n);
    case FamilyKind::star: return dl_spectrum_complete_bipartite(1, spec.n - 1);
    case FamilyKind::complete_bipartite:
        return dl_spectrum_complete_bipartite(spec.a, spec.b);
    case FamilyKind::complete_split: return dl_spectrum_complete_split(spec.t, spec.n);
    case FamilyKind::connectivity_family:
        return dl_spectrum_connectivity_family(spec.n, spec.k, spec.t);
    case FamilyKind::join: {
        // The join theorem composes exactly G0 v (G1 u G2), and its shifts
        // presume parts of diameter <= 2; the closed-form parts all qualify.
        if (spec.parts.size() != 3) return std::nullopt;
        std::vector<AnalyticSpectrum> parts;
        for (const auto& p : spec.parts) {
            if (p.kind == FamilyKind::join) return std::nullopt;
            auto s = analytic_dl(p);
            if (!s) return std::nullopt;
            parts.push_back(std::move(*s));
        }
        return dl_spectrum_join(parts[0], parts[1], parts[2], parts[0].order(),
                                parts[1].order(), parts[2].order());
    }
    default: return std::nullopt;
    }
}

} // namespace specdl
