#pragma once

// Brute-force view of symmetric polynomials as multilinear polynomials on
// {±1}^n. Everything here is exponential in n and exists to cross-check the
// single-variate calculus in sympoly.hpp.

#include "dualpoly/sympoly.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace dualpoly {

inline constexpr int default_brute_force_limit = 14;

// Fourier expansion Σ_S coeff(S) χ_S(x), χ_S(x) = Π_{i∈S} x_i. Subsets and
// inputs are bitmasks: bit i of S selects x_{i+1}, bit i of an input means
// x_{i+1} = -1.
class MultilinearPoly {
public:
    explicit MultilinearPoly(int n) : n_(n)
    {
        if (n < 1 || n > 30)
            throw std::invalid_argument("MultilinearPoly: n must lie in 1..30");
        coeffs_.resize(std::size_t{1} << n);
    }

    MultilinearPoly(int n, std::vector<Rat> coeffs) : MultilinearPoly(n)
    {
        if (coeffs.size() != coeffs_.size())
            throw std::invalid_argument("MultilinearPoly: need exactly 2^n coefficients");
        coeffs_ = std::move(coeffs);
    }

    int n() const { return n_; }
    std::size_t size() const { return coeffs_.size(); }
    const Rat& coeff(std::uint32_t subset) const { return coeffs_.at(subset); }
    void set(std::uint32_t subset, Rat value) { coeffs_.at(subset) = std::move(value); }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    bool is_zero() const
    {
        for (const auto& c : coeffs_)
            if (!c.is_zero())
                return false;
        return true;
    }

    friend bool operator==(const MultilinearPoly&, const MultilinearPoly&) = default;

private:
    int n_;
    std::vector<Rat> coeffs_;
};

namespace detail {

inline void require_brute_force(int n, int limit)
{
    if (n > limit)
        throw std::invalid_argument("n = " + std::to_string(n) + " exceeds the brute-force limit "
                                    + std::to_string(limit));
}

// In-place unnormalised Walsh-Hadamard transform: out[S] = Σ_x in[x] (-1)^{|S∧x|}.
inline void walsh_hadamard(std::vector<BigInt>& a)
{
    for (std::size_t h = 1; h < a.size(); h <<= 1)
        for (std::size_t i = 0; i < a.size(); i += h << 1)
            for (std::size_t j = i; j < i + h; ++j) {
                BigInt u = a[j];
                a[j] += a[j + h];
                a[j + h] = u - a[j + h];
            }
}

inline std::vector<Rat> transform(const std::vector<Rat>& table, const BigInt& extra_den)
{
    auto [ints, den] = integer_table(table);
    walsh_hadamard(ints);
    BigInt total = den * extra_den;
    std::vector<Rat> out;
    out.reserve(ints.size());
    for (const auto& v : ints)
        out.emplace_back(v, total);
    return out;
}

} // namespace detail

inline int hamming_weight(std::uint32_t x) { return std::popcount(x); }

/// p(x) for every x ∈ {±1}^n, indexed by input bitmask.
inline std::vector<Rat> evaluate_all(const MultilinearPoly& p)
{
    return detail::transform(p.coeffs(), 1);
}

inline Rat evaluate(const MultilinearPoly& p, std::uint32_t x)
{
    Rat acc;
    for (std::uint32_t s = 0; s < p.size(); ++s)
        if (!p.coeff(s).is_zero()) {
            if (std::popcount(s & x) % 2 == 0)
                acc += p.coeff(s);
            else
                acc -= p.coeff(s);
        }
    return acc;
}

/// The unique multilinear p with p(x) = V(|x|), via coeff(S) = 2^{-n} Σ_x V(|x|) χ_S(x).
inline MultilinearPoly expand_multilinear(const SinglePoly& poly, int limit = default_brute_force_limit)
{
    const int n = poly.n();
    detail::require_brute_force(n, limit);
    std::vector<Rat> table(std::size_t{1} << n);
    for (std::uint32_t x = 0; x < table.size(); ++x)
        table[x] = poly[hamming_weight(x)];
    BigInt cube_size = BigInt(1) << static_cast<mp_bitcnt_t>(n);
    return MultilinearPoly(n, detail::transform(table, cube_size));
}

/// (min |S|, max |S|) over nonzero coefficients: (pure high degree, degree).
inline std::pair<int, int> fourier_level_range(const MultilinearPoly& p)
{
    int lo = p.n() + 1;
    int hi = -1;
    for (std::uint32_t s = 0; s < p.size(); ++s)
        if (!p.coeff(s).is_zero()) {
            int level = hamming_weight(s);
            lo = std::min(lo, level);
            hi = std::max(hi, level);
        }
    if (hi < 0)
        throw std::invalid_argument("fourier_level_range: zero polynomial");
    return {lo, hi};
}

/// Average over all input permutations, computed as per-level coefficient averaging.
inline MultilinearPoly symmetrize(const MultilinearPoly& p, int limit = default_brute_force_limit)
{
    const int n = p.n();
    detail::require_brute_force(n, limit);
    std::vector<Rat> level_sum(static_cast<std::size_t>(n) + 1);
    for (std::uint32_t s = 0; s < p.size(); ++s)
        level_sum[static_cast<std::size_t>(hamming_weight(s))] += p.coeff(s);
    for (int l = 0; l <= n; ++l)
        level_sum[static_cast<std::size_t>(l)] /= Rat(binomial(n, l));
    MultilinearPoly out(n);
    for (std::uint32_t s = 0; s < p.size(); ++s)
        out.set(s, level_sum[static_cast<std::size_t>(hamming_weight(s))]);
    return out;
}

/// max_x |p(x) - f(|x|)|.
inline Rat max_error(const MultilinearPoly& p, const SymBoolFn& f)
{
    if (p.n() != f.n())
        throw std::invalid_argument("max_error: dimension mismatch");
    auto values = evaluate_all(p);
    Rat worst;
    for (std::uint32_t x = 0; x < values.size(); ++x)
        worst = std::max(worst, (values[x] - Rat(f(hamming_weight(x)))).abs());
    return worst;
}

} // namespace dualpoly
