#pragma once

// ε-approximate degree of symmetric Boolean functions by exact linear
// programming over the n+1 Hamming levels.
//
// Primal (best uniform approximation by degree <= d):
//     minimise  ε
//     s.t.      P(k) + ε >= F(k),  -P(k) + ε >= -F(k)    for k = 0..n
// with P(k) = Σ_{j<=d} c_j C(k, j) in the Newton basis and ε >= 0.
//
// Its dual is: maximise Σ_k F(k) w_k subject to Σ |w_k| <= 1 and
// Σ_k C(k, j) w_k = 0 for j <= d. Writing w_k = C(n,k) B(k) gives a
// polynomial B with ||B||_1 <= 1, vanishing moments up to order d (pure high
// degree >= d+1) and B·F equal to the optimum; this is the dual witness.

#include "dualpoly/combinatorics.hpp"
#include "dualpoly/simplex.hpp"
#include "dualpoly/sympoly.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dualpoly {

using LpProblem = lp::Problem;
using LpOutcome = lp::Outcome;

struct DualWitness {
    SinglePoly b;
    int claimed_phd = 0;
    Rat target_eps;
    std::optional<Rat> ratio; // ||B||_1 / (B·F); absent for the empty witness

    /// The designated witness for ε* = 0: there is nothing to certify.
    bool empty() const { return b.is_zero(); }
};

struct DegreeSolution {
    Rat epsilon_star;
    std::vector<Rat> newton_coeffs; // c_0..c_d
    SinglePoly approximant;
    DualWitness witness;
};

struct CertificateCheck {
    bool accepted = false;
    int phd = 0;
    Rat pairing;              // B·F
    Rat norm;                 // ||B||_1
    std::optional<Rat> ratio; // absent when B·F = 0
    std::string reason;       // empty when accepted
};

namespace detail {

inline void require_degree_in_range(const SymBoolFn& f, int d)
{
    if (d < 0 || d > f.n())
        throw std::invalid_argument("degree " + std::to_string(d) + " outside 0.." + std::to_string(f.n()));
}

} // namespace detail

/// The primal LP above. Variables: c_0..c_d (free), then ε (>= 0).
/// Rows 2k and 2k+1 are the lower and upper error constraints at level k.
inline LpProblem approximation_lp(const SymBoolFn& f, int d)
{
    detail::require_degree_in_range(f, d);
    const int n = f.n();
    const std::size_t vars = static_cast<std::size_t>(d) + 2;
    LpProblem lp;
    lp.sense = lp::Sense::minimize;
    lp.objective.assign(vars, Rat());
    lp.objective.back() = Rat(1);
    lp.free.assign(vars, true);
    lp.free.back() = false;
    for (int k = 0; k <= n; ++k) {
        lp::Row lower{std::vector<Rat>(vars), lp::Relation::greater_equal, Rat(f(k))};
        lp::Row upper{std::vector<Rat>(vars), lp::Relation::greater_equal, Rat(-f(k))};
        for (int j = 0; j <= d; ++j) {
            Rat basis(binomial(k, j));
            lower.coeffs[static_cast<std::size_t>(j)] = basis;
            upper.coeffs[static_cast<std::size_t>(j)] = -basis;
        }
        lower.coeffs.back() = Rat(1);
        upper.coeffs.back() = Rat(1);
        lp.rows.push_back(std::move(lower));
        lp.rows.push_back(std::move(upper));
    }
    return lp;
}

/// Best uniform error of a degree-<= d approximant together with the
/// approximant and the dual witness read from the optimal LP multipliers.
inline DegreeSolution min_eps_for_degree(const SymBoolFn& f, int d)
{
    const LpProblem lp = approximation_lp(f, d);
    const LpOutcome out = lp::exact_simplex(lp);
    if (out.status != lp::Status::optimal)
        throw std::logic_error("approximation LP not optimal: " + lp::to_string(out.status));

    const int n = f.n();
    std::vector<Rat> coeffs(out.primal.begin(), out.primal.begin() + d + 1);
    std::vector<Rat> approx(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
        approx[static_cast<std::size_t>(k)] = newton_evaluate(coeffs, k);

    std::vector<Rat> b(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        Rat w = out.dual[static_cast<std::size_t>(2 * k)] - out.dual[static_cast<std::size_t>(2 * k + 1)];
        b[static_cast<std::size_t>(k)] = w / Rat(binomial(n, k));
    }

    DualWitness witness{SinglePoly(std::move(b)), d + 1, out.value, std::nullopt};
    if (!witness.empty()) {
        Rat pairing = inner_product(witness.b, f);
        if (pairing.sign() > 0)
            witness.ratio = l1_norm(witness.b) / pairing;
    }
    return DegreeSolution{out.value, std::move(coeffs), SinglePoly(std::move(approx)), std::move(witness)};
}

/// Smallest d with ε*(F, d) <= eps; binary search on the monotone ε*.
inline int approx_degree(const SymBoolFn& f, const Rat& eps)
{
    if (eps.sign() < 0 || eps >= Rat(1))
        throw std::invalid_argument("approx_degree: eps must satisfy 0 <= eps < 1");
    int lo = 0;
    int hi = f.n();
    while (lo < hi) {
        int mid = lo + (hi - lo) / 2;
        if (min_eps_for_degree(f, mid).epsilon_star <= eps)
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

struct DualPairing {
    Rat value;
    SinglePoly b;
};

/// Solves the witness problem directly, in B-space with the monomial moment
/// basis: maximise B·F s.t. ||B||_1 <= 1 and Σ C(n,k) k^j B(k) = 0 for j <= d.
/// An independent route to the primal optimum.
inline DualPairing max_dual_pairing(const SymBoolFn& f, int d)
{
    detail::require_degree_in_range(f, d);
    const int n = f.n();
    const std::size_t levels = static_cast<std::size_t>(n) + 1;
    // Variables: b+ (0..n) then b- (0..n), all nonnegative.
    LpProblem lp;
    lp.sense = lp::Sense::maximize;
    lp.objective.resize(2 * levels);
    lp.free.assign(2 * levels, false);
    lp::Row mass{std::vector<Rat>(2 * levels), lp::Relation::less_equal, Rat(1)};
    for (std::size_t k = 0; k < levels; ++k) {
        Rat w(binomial(n, static_cast<std::int64_t>(k)));
        lp.objective[k] = w * Rat(f(static_cast<int>(k)));
        lp.objective[levels + k] = -lp.objective[k];
        mass.coeffs[k] = w;
        mass.coeffs[levels + k] = w;
    }
    lp.rows.push_back(std::move(mass));
    for (int j = 0; j <= d; ++j) {
        lp::Row moment_row{std::vector<Rat>(2 * levels), lp::Relation::equal, Rat()};
        for (std::size_t k = 0; k < levels; ++k) {
            Rat c(BigInt(binomial(n, static_cast<std::int64_t>(k)) * ipow(static_cast<std::int64_t>(k), static_cast<unsigned>(j))));
            moment_row.coeffs[k] = c;
            moment_row.coeffs[levels + k] = -c;
        }
        lp.rows.push_back(std::move(moment_row));
    }
    const LpOutcome out = lp::exact_simplex(lp);
    if (out.status != lp::Status::optimal)
        throw std::logic_error("dual pairing LP not optimal: " + lp::to_string(out.status));
    std::vector<Rat> b(levels);
    for (std::size_t k = 0; k < levels; ++k)
        b[k] = out.primal[k] - out.primal[levels + k];
    return DualPairing{out.value, SinglePoly(std::move(b))};
}

/// Accepts iff phd(B) >= d, B·F > 0 and ||B||_1 / (B·F) < 1/eps. Acceptance
/// proves deg_eps(F) >= d.
inline CertificateCheck verify_certificate(const SymBoolFn& f, const SinglePoly& b, const Rat& eps, int d)
{
    if (b.is_zero())
        throw std::invalid_argument("verify_certificate: zero witness");
    if (eps.sign() <= 0)
        throw std::invalid_argument("verify_certificate: eps must be positive");
    if (b.n() != f.n())
        throw std::invalid_argument("verify_certificate: witness and function differ in n");

    CertificateCheck r;
    r.phd = pure_high_degree(b);
    r.pairing = inner_product(b, f);
    r.norm = l1_norm(b);
    if (!r.pairing.is_zero())
        r.ratio = r.norm / r.pairing;

    if (r.phd < d)
        r.reason = "pure high degree " + std::to_string(r.phd) + " < " + std::to_string(d);
    else if (r.pairing.sign() <= 0)
        r.reason = "B.F = " + r.pairing.str() + " is not positive";
    else if (!(*r.ratio * eps < Rat(1)))
        r.reason = "ratio " + r.ratio->str() + " is not below 1/eps = " + (Rat(1) / eps).str();
    r.accepted = r.reason.empty();
    return r;
}

} // namespace dualpoly
