#pragma once

#include "dualpoly/combinatorics.hpp"
#include "dualpoly/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dualpoly {

/// Degree reported for the identically-zero table.
inline constexpr int zero_degree = -1;

// Real-valued symmetric polynomial on {±1}^n, stored as its exact value
// table V(0..n) over Hamming weights.
class SinglePoly {
public:
    explicit SinglePoly(std::vector<Rat> values) : values_(std::move(values))
    {
        if (values_.size() < 2)
            throw std::invalid_argument("SinglePoly needs n >= 1 (at least two table entries)");
    }

    static SinglePoly zero(int n) { return SinglePoly(std::vector<Rat>(checked_size(n))); }
    static SinglePoly constant(int n, const Rat& c) { return SinglePoly(std::vector<Rat>(checked_size(n), c)); }

    int n() const { return static_cast<int>(values_.size()) - 1; }
    const Rat& operator[](int k) const { return values_.at(static_cast<std::size_t>(k)); }
    const std::vector<Rat>& values() const { return values_; }

    bool is_zero() const
    {
        for (const auto& v : values_)
            if (!v.is_zero())
                return false;
        return true;
    }

    SinglePoly scaled(const Rat& c) const
    {
        std::vector<Rat> out = values_;
        for (auto& v : out)
            v *= c;
        return SinglePoly(std::move(out));
    }

    friend bool operator==(const SinglePoly&, const SinglePoly&) = default;

private:
    static std::size_t checked_size(int n)
    {
        if (n < 1)
            throw std::invalid_argument("SinglePoly needs n >= 1");
        return static_cast<std::size_t>(n) + 1;
    }

    std::vector<Rat> values_;
};

// Symmetric Boolean function as F(0..n) with values in {+1, -1}.
// +1 encodes false, -1 encodes true.
class SymBoolFn {
public:
    explicit SymBoolFn(std::vector<int> values) : values_(std::move(values))
    {
        if (values_.size() < 2)
            throw std::invalid_argument("SymBoolFn needs n >= 1");
        for (int v : values_)
            if (v != 1 && v != -1)
                throw std::invalid_argument("SymBoolFn values must be +1 or -1");
    }

    /// THR_t(k) = +1 for k < t, -1 for k >= t; OR = THR_1.
    static SymBoolFn threshold(int n, int t)
    {
        if (n < 1 || t < 0 || t > n)
            throw std::invalid_argument("threshold needs n >= 1 and 0 <= t <= n");
        std::vector<int> v(static_cast<std::size_t>(n) + 1);
        for (int k = 0; k <= n; ++k)
            v[static_cast<std::size_t>(k)] = k < t ? 1 : -1;
        return SymBoolFn(std::move(v));
    }
    static SymBoolFn or_fn(int n) { return threshold(n, 1); }
    static SymBoolFn parity(int n)
    {
        if (n < 1)
            throw std::invalid_argument("parity needs n >= 1");
        std::vector<int> v(static_cast<std::size_t>(n) + 1);
        for (int k = 0; k <= n; ++k)
            v[static_cast<std::size_t>(k)] = k % 2 == 0 ? 1 : -1;
        return SymBoolFn(std::move(v));
    }
    static SymBoolFn constant(int n, int value = 1)
    {
        if (n < 1)
            throw std::invalid_argument("constant needs n >= 1");
        return SymBoolFn(std::vector<int>(static_cast<std::size_t>(n) + 1, value));
    }

    int n() const { return static_cast<int>(values_.size()) - 1; }
    int operator()(int k) const { return values_.at(static_cast<std::size_t>(k)); }
    const std::vector<int>& values() const { return values_; }

    bool takes_both_values() const
    {
        for (int v : values_)
            if (v != values_.front())
                return true;
        return false;
    }

    SinglePoly as_poly() const
    {
        std::vector<Rat> v;
        v.reserve(values_.size());
        for (int x : values_)
            v.emplace_back(x);
        return SinglePoly(std::move(v));
    }

    friend bool operator==(const SymBoolFn&, const SymBoolFn&) = default;

private:
    std::vector<int> values_;
};

namespace detail {

// Scales the table by the lcm of its denominators; returns the integer
// table and the common denominator.
inline std::pair<std::vector<BigInt>, BigInt> integer_table(const std::vector<Rat>& values)
{
    BigInt den = 1;
    for (const auto& v : values)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.raw().get_den_mpz_t());
    std::vector<BigInt> ints;
    ints.reserve(values.size());
    for (const auto& v : values)
        ints.push_back(v.raw().get_num() * (den / v.raw().get_den()));
    return {std::move(ints), den};
}

inline void require_same_n(const SinglePoly& a, const SinglePoly& b)
{
    if (a.n() != b.n())
        throw std::invalid_argument("polynomials live on different cube dimensions");
}

} // namespace detail

/// Newton coefficients at nodes 0..n: c_j = Δ^j V(0), so V(k) = Σ_j c_j C(k, j).
inline std::vector<Rat> forward_differences(const SinglePoly& p)
{
    auto [a, den] = detail::integer_table(p.values());
    const std::size_t size = a.size();
    std::vector<Rat> coeffs;
    coeffs.reserve(size);
    for (std::size_t j = 0; j < size; ++j) {
        coeffs.emplace_back(a[0], den);
        for (std::size_t i = 0; i + 1 < size - j; ++i)
            a[i] = a[i + 1] - a[i];
    }
    return coeffs;
}

/// Σ_j coeffs[j] * C(k, j).
inline Rat newton_evaluate(const std::vector<Rat>& coeffs, int k)
{
    Rat acc;
    for (std::size_t j = 0; j < coeffs.size() && static_cast<int>(j) <= k; ++j)
        if (!coeffs[j].is_zero())
            acc += coeffs[j] * Rat(binomial(k, static_cast<std::int64_t>(j)));
    return acc;
}

/// Degree of the interpolant through the table; zero_degree for the zero table.
inline int interpolate_degree(const SinglePoly& p)
{
    auto a = detail::integer_table(p.values()).first;
    const std::size_t size = a.size();
    int degree = zero_degree;
    for (std::size_t j = 0; j < size; ++j) {
        if (a[0] != 0)
            degree = static_cast<int>(j);
        for (std::size_t i = 0; i + 1 < size - j; ++i)
            a[i] = a[i + 1] - a[i];
    }
    return degree;
}

/// V'(k) = (-1)^k V(k).
inline SinglePoly parity_multiply(const SinglePoly& p)
{
    std::vector<Rat> out = p.values();
    for (std::size_t k = 1; k < out.size(); k += 2)
        out[k] = -out[k];
    return SinglePoly(std::move(out));
}

/// n - deg(parity · P). The zero table has no pure high degree.
inline int pure_high_degree(const SinglePoly& p)
{
    if (p.is_zero())
        throw std::invalid_argument("pure high degree of the zero polynomial is undefined");
    return p.n() - interpolate_degree(parity_multiply(p));
}

/// The j-th binomial-weighted moment Σ_i C(n,i) V(i) i^j.
inline Rat moment(const SinglePoly& p, unsigned j)
{
    const int n = p.n();
    Rat acc;
    for (int i = 0; i <= n; ++i)
        if (!p[i].is_zero())
            acc += Rat(BigInt(binomial(n, i) * ipow(i, j))) * p[i];
    return acc;
}

/// True iff every moment of order j < d vanishes.
inline bool moments_vanish(const SinglePoly& p, int d)
{
    if (d < 0 || d > p.n() + 1)
        throw std::invalid_argument("moments_vanish: d must lie in 0..n+1");
    for (int j = 0; j < d; ++j)
        if (!moment(p, static_cast<unsigned>(j)).is_zero())
            return false;
    return true;
}

/// Largest d with moments_vanish(p, d); n + 1 only for the zero table.
inline int vanishing_moment_order(const SinglePoly& p)
{
    int d = 0;
    while (d <= p.n() && moment(p, static_cast<unsigned>(d)).is_zero())
        ++d;
    return d;
}

/// P · Q = Σ_i C(n,i) P(i) Q(i).
inline Rat inner_product(const SinglePoly& p, const SinglePoly& q)
{
    detail::require_same_n(p, q);
    const int n = p.n();
    Rat acc;
    for (int i = 0; i <= n; ++i)
        if (!p[i].is_zero() && !q[i].is_zero())
            acc += Rat(binomial(n, i)) * p[i] * q[i];
    return acc;
}

inline Rat inner_product(const SinglePoly& p, const SymBoolFn& f)
{
    return inner_product(p, f.as_poly());
}

/// ||P||_1 = Σ_i C(n,i) |P(i)|.
inline Rat l1_norm(const SinglePoly& p)
{
    const int n = p.n();
    Rat acc;
    for (int i = 0; i <= n; ++i)
        if (!p[i].is_zero())
            acc += Rat(binomial(n, i)) * p[i].abs();
    return acc;
}

} // namespace dualpoly
