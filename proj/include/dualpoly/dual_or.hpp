#pragma once

// Explicit dual polynomial for OR_n.
//
// With m = floor(sqrt n) and S = {0, 1, 4, ..., m^2} ∪ {2},
//
//     P(x) = 2 (-1)^{n-m-1} m!^2 / n! · Π_{i ∈ {0..n} \ S} (x - i),
//
// normalised so that P(0) = 1, of degree n - m - 1 and vanishing off S.
// Q(k) = (-1)^k P(k) then has pure high degree m + 1 and
// ||Q||_1 / (Q·OR) = ||P||_1 / 2 < 14, so deg_{1/14}(OR_n) >= m + 1.

#include "dualpoly/combinatorics.hpp"
#include "dualpoly/lp_degree.hpp"
#include "dualpoly/sympoly.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dualpoly {

/// Certificates are only produced up to this n.
inline constexpr int max_certificate_n = 100000;

enum class CheckOp { eq, lt, le, gt };

inline std::string to_string(CheckOp op)
{
    switch (op) {
    case CheckOp::eq: return "=";
    case CheckOp::lt: return "<";
    case CheckOp::le: return "<=";
    case CheckOp::gt: return ">";
    }
    return "?";
}

// One exact comparison lhs OP rhs, named after the inequality it verifies.
struct Check {
    std::string name;
    Rat lhs;
    CheckOp op = CheckOp::eq;
    Rat rhs;

    bool holds() const
    {
        switch (op) {
        case CheckOp::eq: return lhs == rhs;
        case CheckOp::lt: return lhs < rhs;
        case CheckOp::le: return lhs <= rhs;
        case CheckOp::gt: return lhs > rhs;
        }
        return false;
    }

    friend bool operator==(const Check&, const Check&) = default;
};

class CheckFailure : public std::runtime_error {
public:
    explicit CheckFailure(const Check& c)
        : std::runtime_error("check failed: " + c.name + " (" + c.lhs.str() + " " + to_string(c.op) + " "
                             + c.rhs.str() + ")"),
          check_(c)
    {
    }
    const Check& check() const { return check_; }

private:
    Check check_;
};

struct OrCertificate {
    int n = 0;
    int m = 0;
    std::vector<int> support;  // S, ascending
    std::vector<Rat> p_values; // P on S, same order
    SinglePoly q = SinglePoly::zero(1);
    int phd = 0;
    Rat norm;
    Rat ratio;
    Rat epsilon_certified;
    int degree_bound = 0;
    std::vector<Check> checks;

    bool all_hold() const
    {
        return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.holds(); });
    }
};

/// The epsilon every OR certificate claims.
inline Rat or_certificate_epsilon() { return Rat(1) / Rat(14); }

namespace detail {

inline void require_or_domain(int n)
{
    if (n < 2)
        throw std::invalid_argument("the OR dual polynomial needs n >= 2 (got " + std::to_string(n) + ")");
    if (n > max_certificate_n)
        throw std::invalid_argument("n = " + std::to_string(n) + " exceeds " + std::to_string(max_certificate_n));
}

// P(x) for integer x, by direct accumulation of the defining product.
inline Rat or_dual_at(int n, int m, const std::vector<int>& support, std::int64_t x)
{
    BigInt product = 1;
    auto in_support = support.begin();
    for (int i = 0; i <= n; ++i) {
        while (in_support != support.end() && *in_support < i)
            ++in_support;
        if (in_support != support.end() && *in_support == i)
            continue;
        product *= BigInt(static_cast<long>(x - i));
        if (product == 0)
            return Rat();
    }
    BigInt mf = factorial(m);
    BigInt scale = 2 * mf * mf;
    if ((n - m - 1) % 2 != 0)
        scale = -scale;
    return Rat(scale * product, factorial(n));
}

} // namespace detail

/// S = {i^2 : 0 <= i <= floor(sqrt n)} ∪ {2}, ascending.
inline std::vector<int> squares_plus_two(int n)
{
    detail::require_or_domain(n);
    const int m = static_cast<int>(isqrt(n));
    std::vector<int> s;
    for (int i = 0; i <= m; ++i)
        s.push_back(i * i);
    s.push_back(2);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

/// P on its support S (it is zero elsewhere on {0..n}).
inline std::vector<Rat> construct_P_on_support(int n)
{
    const auto support = squares_plus_two(n);
    const int m = static_cast<int>(isqrt(n));
    std::vector<Rat> values;
    values.reserve(support.size());
    for (int x : support)
        values.push_back(detail::or_dual_at(n, m, support, x));
    return values;
}

inline SinglePoly dense_from_support(int n, const std::vector<int>& support, const std::vector<Rat>& values)
{
    if (support.size() != values.size())
        throw std::invalid_argument("support and value lists differ in length");
    std::vector<Rat> table(static_cast<std::size_t>(n) + 1);
    for (std::size_t i = 0; i < support.size(); ++i) {
        if (support[i] < 0 || support[i] > n)
            throw std::invalid_argument("support point outside 0..n");
        table[static_cast<std::size_t>(support[i])] = values[i];
    }
    return SinglePoly(std::move(table));
}

inline SinglePoly construct_P(int n)
{
    return dense_from_support(n, squares_plus_two(n), construct_P_on_support(n));
}

inline SinglePoly construct_Q(int n) { return parity_multiply(construct_P(n)); }

/// m!^2 / ((m+k)! (m-k)!) for 0 <= k <= m; never exceeds 1.
inline Rat binom_ratio(int m, int k)
{
    if (m < 0 || k < 0 || k > m)
        throw std::invalid_argument("binom_ratio needs 0 <= k <= m");
    BigInt mf = factorial(m);
    return Rat(mf * mf, factorial(m + k) * factorial(m - k));
}

/// C(n,2)|P(2)| <= 12 and C(n,k^2)|P(k^2)| <= 8/k^2 for k = 1..m, evaluated on
/// the given values of P on S.
inline std::vector<Check> point_bound_checks(int n, const std::vector<int>& support, const std::vector<Rat>& values)
{
    auto value_at = [&](int x) {
        auto it = std::lower_bound(support.begin(), support.end(), x);
        return it != support.end() && *it == x ? values[static_cast<std::size_t>(it - support.begin())] : Rat();
    };
    std::vector<Check> out;
    out.push_back({"binom(n,2)|P(2)|<=12", Rat(binomial(n, 2)) * value_at(2).abs(), CheckOp::le, Rat(12)});
    const int m = static_cast<int>(isqrt(n));
    for (int k = 1; k <= m; ++k)
        out.push_back({"binom(n,k^2)|P(k^2)|<=8/k^2@k=" + std::to_string(k),
                       Rat(binomial(n, k * k)) * value_at(k * k).abs(), CheckOp::le, Rat(8) / Rat(k * k)});
    return out;
}

inline std::vector<Check> check_point_bounds(int n)
{
    return point_bound_checks(n, squares_plus_two(n), construct_P_on_support(n));
}

/// ||P||_1 summed over S only. Throws CheckFailure unless it is below 27.
inline Rat check_norm(int n)
{
    const auto support = squares_plus_two(n);
    const auto values = construct_P_on_support(n);
    Rat norm;
    for (std::size_t i = 0; i < support.size(); ++i)
        norm += Rat(binomial(n, support[i])) * values[i].abs();
    Check c{"norm<27", norm, CheckOp::lt, Rat(27)};
    if (!c.holds())
        throw CheckFailure(c);
    return norm;
}

/// Derives every field and check of a certificate from n, S and the values
/// of P on S. Nothing is assumed about the values; failed checks are
/// recorded, not thrown.
inline OrCertificate assemble_certificate(int n, std::vector<int> support, std::vector<Rat> p_values)
{
    detail::require_or_domain(n);
    OrCertificate c;
    c.n = n;
    c.m = static_cast<int>(isqrt(n));
    const SinglePoly p = dense_from_support(n, support, p_values);
    c.q = parity_multiply(p);
    const auto or_fn = SymBoolFn::or_fn(n);

    for (std::size_t i = 0; i < support.size(); ++i)
        c.norm += Rat(binomial(n, support[i])) * p_values[i].abs();
    const Rat p0 = p[0];
    const Rat q_dot_or = inner_product(c.q, or_fn);
    c.phd = c.q.is_zero() ? 0 : pure_high_degree(c.q);
    c.ratio = q_dot_or.is_zero() ? Rat() : l1_norm(c.q) / q_dot_or;
    c.epsilon_certified = or_certificate_epsilon();
    c.degree_bound = c.phd;

    auto& ch = c.checks;
    ch.push_back({"P(0)=1", p0, CheckOp::eq, Rat(1)});
    ch.push_back({"deg(P)=n-m-1", Rat(interpolate_degree(p)), CheckOp::eq, Rat(n - c.m - 1)});
    ch.push_back({"phd(Q)=m+1", Rat(c.phd), CheckOp::eq, Rat(c.m + 1)});
    ch.push_back({"phd(Q)^2>n", Rat(c.phd) * Rat(c.phd), CheckOp::gt, Rat(n)});
    ch.push_back({"moments(Q)@m+1", Rat(vanishing_moment_order(c.q)), CheckOp::eq, Rat(c.m + 1)});
    for (auto& b : point_bound_checks(n, support, p_values))
        ch.push_back(std::move(b));
    ch.push_back({"norm<27", c.norm, CheckOp::lt, Rat(27)});
    if (n <= 200)
        ch.push_back({"norm=dense_l1(P)", c.norm, CheckOp::eq, l1_norm(p)});
    ch.push_back({"Q.OR=2Q(0)", q_dot_or, CheckOp::eq, Rat(2) * c.q[0]});
    ch.push_back({"Q.OR>0", q_dot_or, CheckOp::gt, Rat()});
    ch.push_back({"ratio=norm/(2P(0))", c.ratio, CheckOp::eq, p0.is_zero() ? Rat() : c.norm / (Rat(2) * p0)});
    ch.push_back({"ratio<14", c.ratio, CheckOp::lt, Rat(14)});
    ch.push_back({"ratio<1/eps", c.ratio * c.epsilon_certified, CheckOp::lt, Rat(1)});

    c.support = std::move(support);
    c.p_values = std::move(p_values);
    return c;
}

/// Builds and fully verifies the certificate for OR_n; throws CheckFailure
/// naming the first inequality that does not hold.
inline OrCertificate make_certificate(int n)
{
    OrCertificate c = assemble_certificate(n, squares_plus_two(n), construct_P_on_support(n));
    for (const auto& check : c.checks)
        if (!check.holds())
            throw CheckFailure(check);
    if (c.degree_bound != c.m + 1)
        throw std::logic_error("degree bound differs from m + 1");
    return c;
}

/// Non-certifying diagnostic: the same construction with S = squares only,
/// rescaled to P(0) = 1. Returns its ||P||_1.
inline Rat no_two_variant_norm(int n)
{
    detail::require_or_domain(n);
    const int m = static_cast<int>(isqrt(n));
    std::vector<int> squares;
    for (int i = 0; i <= m; ++i)
        squares.push_back(i * i);
    std::vector<Rat> values;
    for (int x : squares)
        values.push_back(detail::or_dual_at(n, m, squares, x));
    const Rat p0 = values.front();
    Rat norm;
    for (std::size_t i = 0; i < squares.size(); ++i)
        norm += Rat(binomial(n, squares[i])) * (values[i] / p0).abs();
    return norm;
}

} // namespace dualpoly
