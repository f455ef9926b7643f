#pragma once

// Brute-force reference implementations of the similarity measures, written
// directly against raw grade vectors. Tests compare the library against
// these; nothing here may call the library's measure code.

#include <cassert>
#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

namespace oracle {

struct Fou {
    std::vector<double> lower;
    std::vector<double> upper;
};

inline double zeng_li(const Fou& a, const Fou& b) {
    std::size_t n = a.lower.size();
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += std::fabs(a.lower[i] - b.lower[i]);
        acc += std::fabs(a.upper[i] - b.upper[i]);
    }
    return 1.0 - acc / (2.0 * static_cast<double>(n));
}

inline double jaccard(const Fou& a, const Fou& b) {
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < a.lower.size(); ++i) {
        num += (a.upper[i] < b.upper[i] ? a.upper[i] : b.upper[i]);
        num += (a.lower[i] < b.lower[i] ? a.lower[i] : b.lower[i]);
        den += (a.upper[i] > b.upper[i] ? a.upper[i] : b.upper[i]);
        den += (a.lower[i] > b.lower[i] ? a.lower[i] : b.lower[i]);
    }
    if (den == 0.0) return 1.0;
    return num / den;
}

inline std::pair<double, double> gorzalczany(const Fou& a, const Fou& b) {
    double peak_min_lower = 0.0, peak_a_lower = 0.0;
    double peak_min_upper = 0.0, peak_a_upper = 0.0;
    for (std::size_t i = 0; i < a.lower.size(); ++i) {
        double ml = a.lower[i] < b.lower[i] ? a.lower[i] : b.lower[i];
        double mu = a.upper[i] < b.upper[i] ? a.upper[i] : b.upper[i];
        if (ml > peak_min_lower) peak_min_lower = ml;
        if (mu > peak_min_upper) peak_min_upper = mu;
        if (a.lower[i] > peak_a_lower) peak_a_lower = a.lower[i];
        if (a.upper[i] > peak_a_upper) peak_a_upper = a.upper[i];
    }
    double s1 = peak_a_lower == 0.0 ? 0.0 : peak_min_lower / peak_a_lower;
    double s2 = peak_a_upper == 0.0 ? 0.0 : peak_min_upper / peak_a_upper;
    if (s1 > s2) std::swap(s1, s2);
    return {s1, s2};
}

inline double tnorm_apply(char kind, double x, double y) {
    if (kind == 'm') return x < y ? x : y;
    if (kind == 'p') return x * y;
    assert(kind == 'l');
    double v = x + y - 1.0;
    return v > 0.0 ? v : 0.0;
}

inline std::pair<double, double> bustince(const Fou& a, const Fou& b, char tnorm) {
    auto inclusion = [](const Fou& p, const Fou& q, bool optimistic) {
        double inf = 1.0;
        for (std::size_t i = 0; i < p.lower.size(); ++i) {
            double tl = 1.0 - p.lower[i] + q.lower[i];
            double tu = 1.0 - p.upper[i] + q.upper[i];
            double t = optimistic ? (tl > tu ? tl : tu) : (tl < tu ? tl : tu);
            if (t > 1.0) t = 1.0;
            if (t < inf) inf = t;
        }
        return inf;
    };
    double lo = tnorm_apply(tnorm, inclusion(a, b, false), inclusion(b, a, false));
    double hi = tnorm_apply(tnorm, inclusion(a, b, true), inclusion(b, a, true));
    return {lo, hi};
}

}  // namespace oracle
