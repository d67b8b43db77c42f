#pragma once

// Candidate dual polynomial for THR_t, measured but never asserted:
//
//     T = {k^2 - l^2 : 0 <= k <= floor(sqrt(n-t)), 0 <= l <= floor(sqrt t)}
//     p(x) = Π_{i ∈ {0..n} \ T} (x - t - i),   q(k) = (-1)^k p(k).
//
// Only elements of T inside {0..n} change the index set, so T is clipped;
// the raw set is kept for the report. p is not normalised since the
// certifying ratio does not depend on scale.

#include "dualpoly/combinatorics.hpp"
#include "dualpoly/sympoly.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dualpoly {

struct DifferenceSet {
    std::vector<std::int64_t> raw; // ascending, may contain negatives
    std::vector<int> clipped;      // raw ∩ {0..n}
};

struct ThresholdReport {
    int n = 0;
    int t = 0;
    DifferenceSet T;
    SinglePoly p = SinglePoly::zero(1);
    SinglePoly q = SinglePoly::zero(1);
    int degree_p = 0;
    int phd = 0;
    Rat pairing;                   // q · THR_t
    Rat norm;                      // ||q||_1
    int orientation = 0;           // sign s such that s·q pairs positively; 0 if q·THR_t = 0
    std::optional<Rat> ratio_best; // ||q||_1 / |q·THR_t|; absent when undefined
    bool squares_only = false;     // t = 0: T is the plain squares, unlike the OR support
    std::string verdict;
};

inline void require_threshold_domain(int n, int t)
{
    if (n < 1 || t < 0 || t > n)
        throw std::invalid_argument("threshold candidate needs n >= 1 and 0 <= t <= n (got n=" + std::to_string(n)
                                    + ", t=" + std::to_string(t) + ")");
}

inline DifferenceSet build_T(int n, int t)
{
    require_threshold_domain(n, t);
    const std::int64_t kmax = isqrt(n - t);
    const std::int64_t lmax = isqrt(t);
    DifferenceSet s;
    for (std::int64_t k = 0; k <= kmax; ++k)
        for (std::int64_t l = 0; l <= lmax; ++l)
            s.raw.push_back(k * k - l * l);
    std::sort(s.raw.begin(), s.raw.end());
    s.raw.erase(std::unique(s.raw.begin(), s.raw.end()), s.raw.end());
    for (auto v : s.raw)
        if (v >= 0 && v <= n)
            s.clipped.push_back(static_cast<int>(v));
    return s;
}

inline ThresholdReport build_candidate(int n, int t)
{
    ThresholdReport r;
    r.n = n;
    r.t = t;
    r.T = build_T(n, t);

    std::vector<int> roots;
    for (int i = 0; i <= n; ++i)
        if (!std::binary_search(r.T.clipped.begin(), r.T.clipped.end(), i))
            roots.push_back(t + i);
    std::vector<Rat> values(static_cast<std::size_t>(n) + 1);
    for (int x = 0; x <= n; ++x) {
        BigInt prod = 1;
        for (int root : roots)
            prod *= BigInt(static_cast<long>(x - root));
        values[static_cast<std::size_t>(x)] = Rat(prod);
    }
    r.p = SinglePoly(std::move(values));
    r.q = parity_multiply(r.p);
    r.degree_p = interpolate_degree(r.p);
    r.phd = pure_high_degree(r.q);
    r.pairing = inner_product(r.q, SymBoolFn::threshold(n, t));
    r.norm = l1_norm(r.q);
    r.orientation = r.pairing.sign();
    if (r.orientation != 0)
        r.ratio_best = r.norm / r.pairing.abs();
    r.squares_only = t == 0;

    if (r.ratio_best)
        r.verdict = "measured: " + std::string(r.orientation > 0 ? "q" : "-q") + " has pure high degree "
                  + std::to_string(r.phd) + " and ratio " + r.ratio_best->str() + "; this certifies deg_eps >= "
                  + std::to_string(r.phd) + " only for eps < " + (Rat(1) / *r.ratio_best).str();
    else
        r.verdict = "measured: q is orthogonal to THR_t, ratio undefined";
    if (r.squares_only)
        r.verdict += "; t = 0 gives the plain squares, without the extra point 2 of the OR support";
    return r;
}

} // namespace dualpoly
