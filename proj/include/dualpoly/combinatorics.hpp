#pragma once

#include "dualpoly/rational.hpp"

#include <cstdint>
#include <stdexcept>

namespace dualpoly {

/// C(n, k); zero outside 0 <= k <= n.
inline BigInt binomial(std::int64_t n, std::int64_t k)
{
    if (n < 0)
        throw std::invalid_argument("binomial: negative n");
    if (k < 0 || k > n)
        return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline BigInt factorial(std::int64_t n)
{
    if (n < 0)
        throw std::invalid_argument("factorial: negative argument");
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

/// floor(sqrt(n)) for n >= 0, exact.
inline std::int64_t isqrt(std::int64_t n)
{
    if (n < 0)
        throw std::invalid_argument("isqrt: negative argument");
    BigInt r;
    BigInt v(static_cast<long>(n));
    mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
    return r.get_si();
}

/// k^j as an exact integer.
inline BigInt ipow(std::int64_t k, unsigned j)
{
    BigInt base(static_cast<long>(k));
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), j);
    return r;
}

} // namespace dualpoly
