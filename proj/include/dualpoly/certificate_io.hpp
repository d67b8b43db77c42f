#pragma once

// Serialisation and re-verification of OR certificates and LP dual
// witnesses. Verification never trusts a stored derived value: everything is
// recomputed from the embedded polynomial values and compared exactly.
// Syntax problems throw FormatError; mathematical problems are collected in
// the returned report.

#include "dualpoly/document.hpp"
#include "dualpoly/dual_or.hpp"
#include "dualpoly/lp_degree.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dualpoly {

inline constexpr const char* or_certificate_kind = "dualpoly-or-certificate";
inline constexpr const char* witness_kind = "dualpoly-witness";

struct VerifyReport {
    bool accepted = false;
    int phd = 0;
    std::optional<Rat> ratio;
    std::vector<std::string> problems;
};

namespace detail {

inline long long parse_int_token(const std::string& s)
{
    std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
    if (s.size() == start || s.size() - start > 18)
        throw FormatError("not an integer: '" + s + "'");
    for (std::size_t i = start; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            throw FormatError("not an integer: '" + s + "'");
    return std::stoll(s);
}

inline int parse_small_int(const std::string& s)
{
    long long v = parse_int_token(s);
    if (v < -1000000000LL || v > 1000000000LL)
        throw FormatError("integer out of range: '" + s + "'");
    return static_cast<int>(v);
}

inline Rat parse_rat_token(const std::string& s)
{
    try {
        return parse_rat(s);
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

inline CheckOp parse_op(const std::string& s)
{
    if (s == "=") return CheckOp::eq;
    if (s == "<") return CheckOp::lt;
    if (s == "<=") return CheckOp::le;
    if (s == ">") return CheckOp::gt;
    throw FormatError("unknown comparison '" + s + "'");
}

template <class T, class F>
std::vector<std::string> tokens_of(const std::vector<T>& xs, F&& fmt)
{
    std::vector<std::string> out;
    out.reserve(xs.size());
    for (const auto& x : xs)
        out.push_back(fmt(x));
    return out;
}

inline void require_kind(const Document& doc, const char* kind)
{
    if (doc.kind != kind)
        throw FormatError("expected a '" + std::string(kind) + "' document, got '" + doc.kind + "'");
    if (doc.version != 1)
        throw FormatError("unsupported format version " + std::to_string(doc.version));
}

} // namespace detail

/// "or", "parity", "constant", "threshold-<t>".
inline SymBoolFn named_function(const std::string& name, int n)
{
    if (name == "or")
        return SymBoolFn::or_fn(n);
    if (name == "parity")
        return SymBoolFn::parity(n);
    if (name == "constant")
        return SymBoolFn::constant(n);
    const std::string prefix = "threshold-";
    if (name.starts_with(prefix)) {
        int t = 0;
        try {
            t = detail::parse_small_int(name.substr(prefix.size()));
        } catch (const FormatError&) {
            throw std::invalid_argument("bad threshold in '" + name + "'");
        }
        return SymBoolFn::threshold(n, t);
    }
    throw std::invalid_argument("unknown function '" + name + "' (or, parity, constant, threshold-<t>)");
}

inline Document to_document(const OrCertificate& c)
{
    Document d;
    d.kind = or_certificate_kind;
    d.add("n", {std::to_string(c.n)});
    d.add("m", {std::to_string(c.m)});
    d.add("S", detail::tokens_of(c.support, [](int v) { return std::to_string(v); }));
    d.add("P", detail::tokens_of(c.p_values, [](const Rat& v) { return v.str(); }));
    d.add("phd", {std::to_string(c.phd)});
    d.add("norm", {c.norm.str()});
    d.add("ratio", {c.ratio.str()});
    d.add("epsilon_certified", {c.epsilon_certified.str()});
    d.add("degree_bound", {std::to_string(c.degree_bound)});
    for (const auto& ch : c.checks)
        d.add("check", {ch.name, ch.lhs.str(), to_string(ch.op), ch.rhs.str()});
    return d;
}

/// Re-derives a certificate from the n, S and P values embedded in `doc` and
/// compares every stored field against the re-derivation. `eps` overrides
/// the stored epsilon for the final dual check.
inline VerifyReport verify_or_certificate(const Document& doc, const std::optional<Rat>& eps = std::nullopt)
{
    detail::require_kind(doc, or_certificate_kind);
    const int n = detail::parse_small_int(doc.scalar("n"));
    const int m = detail::parse_small_int(doc.scalar("m"));
    std::vector<int> support;
    for (const auto& t : doc.one("S"))
        support.push_back(detail::parse_small_int(t));
    std::vector<Rat> p_values;
    for (const auto& t : doc.one("P"))
        p_values.push_back(detail::parse_rat_token(t));
    const int phd = detail::parse_small_int(doc.scalar("phd"));
    const Rat norm = detail::parse_rat_token(doc.scalar("norm"));
    const Rat ratio = detail::parse_rat_token(doc.scalar("ratio"));
    const Rat stored_eps = detail::parse_rat_token(doc.scalar("epsilon_certified"));
    const int degree_bound = detail::parse_small_int(doc.scalar("degree_bound"));
    std::vector<Check> checks;
    for (const auto* e : doc.all("check")) {
        if (e->tokens.size() != 4)
            throw FormatError("check lines need: name lhs op rhs");
        checks.push_back({e->tokens[0], detail::parse_rat_token(e->tokens[1]), detail::parse_op(e->tokens[2]),
                          detail::parse_rat_token(e->tokens[3])});
    }

    VerifyReport r;
    auto& problems = r.problems;
    if (n < 2 || n > max_certificate_n) {
        problems.push_back("n = " + std::to_string(n) + " outside 2.." + std::to_string(max_certificate_n));
        return r;
    }
    if (m != isqrt(n))
        problems.push_back("m is not floor(sqrt(n))");
    if (support != squares_plus_two(n)) {
        problems.push_back("S is not the squares up to n plus 2");
        return r;
    }
    if (p_values.size() != support.size()) {
        problems.push_back("P has " + std::to_string(p_values.size()) + " values for " + std::to_string(support.size())
                           + " support points");
        return r;
    }

    const OrCertificate derived = assemble_certificate(n, support, p_values);
    r.phd = derived.phd;
    r.ratio = derived.ratio;
    if (phd != derived.phd)
        problems.push_back("stored phd " + std::to_string(phd) + " != derived " + std::to_string(derived.phd));
    if (norm != derived.norm)
        problems.push_back("stored norm " + norm.str() + " != derived " + derived.norm.str());
    if (ratio != derived.ratio)
        problems.push_back("stored ratio " + ratio.str() + " != derived " + derived.ratio.str());
    if (stored_eps != or_certificate_epsilon())
        problems.push_back("epsilon_certified must be " + or_certificate_epsilon().str());
    if (degree_bound != derived.degree_bound)
        problems.push_back("degree_bound does not equal the derived pure high degree");
    if (checks != derived.checks)
        problems.push_back("check list differs from the re-derived checks");
    for (const auto& c : derived.checks)
        if (!c.holds())
            problems.push_back("fails " + c.name + ": " + c.lhs.str() + " " + to_string(c.op) + " " + c.rhs.str());

    if (derived.q.is_zero()) {
        problems.push_back("Q is identically zero");
    } else {
        const Rat use_eps = eps.value_or(stored_eps);
        if (use_eps.sign() <= 0) {
            problems.push_back("eps must be positive");
        } else {
            auto dual = verify_certificate(SymBoolFn::or_fn(n), derived.q, use_eps, degree_bound);
            if (!dual.accepted)
                problems.push_back("dual check: " + dual.reason);
        }
    }
    r.accepted = problems.empty();
    return r;
}

/// Witness document for B certifying deg_eps(F) >= d.
inline Document witness_document(const std::string& function_name, const SymBoolFn& f, const SinglePoly& b,
                                 const Rat& eps, int d)
{
    auto check = verify_certificate(f, b, eps, d);
    Document doc;
    doc.kind = witness_kind;
    doc.add("function", {function_name});
    doc.add("n", {std::to_string(f.n())});
    doc.add("F", detail::tokens_of(f.values(), [](int v) { return std::to_string(v); }));
    doc.add("d", {std::to_string(d)});
    doc.add("eps", {eps.str()});
    doc.add("B", detail::tokens_of(b.values(), [](const Rat& v) { return v.str(); }));
    doc.add("ratio", {check.ratio ? check.ratio->str() : "undef"});
    doc.add("verdict", {check.accepted ? "accepted" : "rejected"});
    return doc;
}

inline VerifyReport verify_witness(const Document& doc, const std::optional<Rat>& eps = std::nullopt)
{
    detail::require_kind(doc, witness_kind);
    const std::string name = doc.scalar("function");
    const int n = detail::parse_small_int(doc.scalar("n"));
    std::vector<int> table;
    for (const auto& t : doc.one("F"))
        table.push_back(detail::parse_small_int(t));
    const int d = detail::parse_small_int(doc.scalar("d"));
    const Rat stored_eps = detail::parse_rat_token(doc.scalar("eps"));
    std::vector<Rat> b;
    for (const auto& t : doc.one("B"))
        b.push_back(detail::parse_rat_token(t));
    const std::string stored_ratio = doc.scalar("ratio");
    const std::string verdict = doc.scalar("verdict");
    if (verdict != "accepted" && verdict != "rejected")
        throw FormatError("verdict must be accepted or rejected");

    VerifyReport r;
    auto& problems = r.problems;
    if (n < 1 || table.size() != static_cast<std::size_t>(n) + 1 || b.size() != table.size()) {
        problems.push_back("table sizes do not match n");
        return r;
    }
    std::optional<SymBoolFn> f;
    try {
        f.emplace(table);
    } catch (const std::invalid_argument& e) {
        problems.push_back(e.what());
        return r;
    }
    if (name != "table") {
        try {
            if (named_function(name, n) != *f)
                problems.push_back("F does not match the named function " + name);
        } catch (const std::invalid_argument& e) {
            problems.push_back(e.what());
        }
    }
    SinglePoly poly(std::move(b));
    if (poly.is_zero()) {
        problems.push_back("B is identically zero");
        return r;
    }
    if (stored_eps.sign() <= 0) {
        problems.push_back("stored eps must be positive");
        return r;
    }
    const auto recorded = verify_certificate(*f, poly, stored_eps, d);
    const std::string ratio_text = recorded.ratio ? recorded.ratio->str() : "undef";
    if (stored_ratio != ratio_text)
        problems.push_back("stored ratio " + stored_ratio + " != derived " + ratio_text);
    if ((verdict == "accepted") != recorded.accepted)
        problems.push_back("stored verdict " + verdict + " is wrong");

    const auto check = eps ? verify_certificate(*f, poly, *eps, d) : recorded;
    r.phd = check.phd;
    r.ratio = check.ratio;
    if (!check.accepted)
        problems.push_back(check.reason);
    r.accepted = problems.empty();
    return r;
}

/// Dispatches on the document kind.
inline VerifyReport verify_document(const Document& doc, const std::optional<Rat>& eps = std::nullopt)
{
    if (doc.kind == witness_kind)
        return verify_witness(doc, eps);
    return verify_or_certificate(doc, eps);
}

} // namespace dualpoly
