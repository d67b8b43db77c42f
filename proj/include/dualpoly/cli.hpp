#pragma once

// Command-line front end. Exit codes: 0 success/verified, 1 mathematical
// rejection, 2 usage or format error.

#include "dualpoly/certificate_io.hpp"
#include "dualpoly/dual_or.hpp"
#include "dualpoly/lp_degree.hpp"
#include "dualpoly/multilinear.hpp"
#include "dualpoly/threshold.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace dualpoly::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_rejected = 1;
inline constexpr int exit_usage = 2;

/// Largest n the degree subcommand will hand to the LP.
inline constexpr int lp_desk_limit = 16;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct IntRange {
    int lo = 0;
    int hi = 0;
};

inline int parse_int_arg(const std::string& flag, const std::string& text)
{
    try {
        return detail::parse_small_int(text);
    } catch (const FormatError&) {
        throw UsageError(flag + ": expected an integer, got '" + text + "'");
    }
}

/// "N" or "LO..HI".
inline IntRange parse_range_arg(const std::string& flag, const std::string& text)
{
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        int v = parse_int_arg(flag, text);
        return {v, v};
    }
    IntRange r{parse_int_arg(flag, text.substr(0, dots)), parse_int_arg(flag, text.substr(dots + 2))};
    if (r.hi < r.lo)
        throw UsageError(flag + ": empty range " + text);
    return r;
}

inline Rat parse_eps_arg(const std::string& text)
{
    try {
        return parse_rat(text);
    } catch (const std::invalid_argument&) {
        throw UsageError("--eps must be an exact rational such as 1/14, got '" + text + "'");
    }
}

inline void emit(const std::string& path, const std::string& text, std::ostream& out)
{
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw UsageError("cannot write " + path);
    f << text;
}

inline std::string or_csv_header() { return "n,m,phd,norm,ratio,norm_decimal,ratio_decimal\n"; }

inline std::string or_csv_row(const OrCertificate& c)
{
    std::ostringstream os;
    os << c.n << ',' << c.m << ',' << c.phd << ',' << c.norm.str() << ',' << c.ratio.str() << ','
       << c.norm.decimal() << ',' << c.ratio.decimal() << '\n';
    return os.str();
}

/// Certificates for n = lo..hi, computed on worker threads, returned in
/// ascending n.
inline std::vector<OrCertificate> certificate_sweep(int lo, int hi)
{
    const std::size_t count = static_cast<std::size_t>(hi - lo) + 1;
    std::vector<std::optional<OrCertificate>> slots(count);
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                slots[i] = make_certificate(lo + static_cast<int>(i));
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const std::size_t workers = std::min<std::size_t>(count, std::max(1u, std::thread::hardware_concurrency()));
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w + 1 < workers; ++w)
        pool.emplace_back(work);
    work();
    for (auto& t : pool)
        t.join();
    std::vector<OrCertificate> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        if (errors[i])
            std::rethrow_exception(errors[i]);
        out.push_back(std::move(*slots[i]));
    }
    return out;
}

inline int cmd_or_cert(int n, const std::string& out_path, const std::string& format, std::ostream& out)
{
    const OrCertificate c = make_certificate(n);
    const std::string doc = to_text(to_document(c));
    if (format == "csv") {
        out << or_csv_header() << or_csv_row(c);
    } else {
        out << "n " << c.n << "\n"
            << "m " << c.m << "\n"
            << "phd " << c.phd << "\n"
            << "norm " << c.norm.str() << "\n"
            << "ratio " << c.ratio.str() << "\n"
            << "degree_bound " << c.degree_bound << "\n"
            << "checks " << c.checks.size() << " passed\n"
            << "certifies deg_" << c.epsilon_certified.str() << "(OR_" << c.n << ") >= " << c.degree_bound << "\n";
    }
    if (out_path.empty()) {
        if (format != "csv")
            out << "\n" << doc;
    } else {
        emit(out_path, doc, out);
    }
    return exit_ok;
}

inline int cmd_verify(const std::string& path, const std::optional<Rat>& eps, std::ostream& out)
{
    if (eps && (eps->sign() <= 0 || *eps >= Rat(1)))
        throw UsageError("--eps must satisfy 0 < eps < 1");
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw UsageError("cannot read " + path);
    const Document doc = read_document(f);
    const VerifyReport r = verify_document(doc, eps);
    out << "kind " << doc.kind << "\n";
    out << "phd " << r.phd << "\n";
    out << "ratio " << (r.ratio ? r.ratio->str() : "undef") << "\n";
    for (const auto& p : r.problems)
        out << "problem " << p << "\n";
    out << "verdict " << (r.accepted ? "accepted" : "rejected") << "\n";
    return r.accepted ? exit_ok : exit_rejected;
}

inline int cmd_degree(const std::string& func, int n, const Rat& eps, const std::string& out_path,
                      const std::string& format, int brute_limit, std::ostream& out)
{
    if (n < 1 || n > lp_desk_limit)
        throw UsageError("--n must lie in 1.." + std::to_string(lp_desk_limit) + " for the LP");
    if (eps.sign() < 0 || eps >= Rat(1))
        throw UsageError("--eps must satisfy 0 <= eps < 1");
    SymBoolFn f = named_function(func, n);
    const int d = approx_degree(f, eps);
    const Rat at_d = min_eps_for_degree(f, d).epsilon_star;
    std::optional<DegreeSolution> below;
    if (d > 0)
        below = min_eps_for_degree(f, d - 1);

    if (format == "csv") {
        out << "func,n,eps,degree,eps_star_d,eps_star_d_minus_1\n"
            << func << ',' << n << ',' << eps.str() << ',' << d << ',' << at_d.str() << ','
            << (below ? below->epsilon_star.str() : "undef") << '\n';
    } else {
        out << "function " << func << "\n"
            << "n " << n << "\n"
            << "eps " << eps.str() << "\n"
            << "degree " << d << "\n"
            << "eps_star(d=" << d << ") " << at_d.str() << "\n";
        if (below)
            out << "eps_star(d=" << d - 1 << ") " << below->epsilon_star.str() << "\n";
    }

    if (below && !below->witness.empty() && eps.sign() > 0) {
        const auto& w = below->witness;
        const auto check = verify_certificate(f, w.b, eps, d);
        if (format != "csv") {
            out << "witness_phd " << check.phd << "\n"
                << "witness_ratio " << (check.ratio ? check.ratio->str() : "undef") << "\n"
                << "witness_verdict " << (check.accepted ? "accepted" : "rejected") << "\n";
            if (n <= brute_limit)
                out << "witness_fourier_min_level " << fourier_level_range(expand_multilinear(w.b, brute_limit)).first
                    << "\n";
        }
        if (!out_path.empty())
            emit(out_path, to_text(witness_document(func, f, w.b, eps, d)), out);
    } else if (!out_path.empty()) {
        throw UsageError("no dual witness: degree 0 needs no lower-bound certificate");
    }
    return exit_ok;
}

inline int cmd_sweep(const IntRange& range, const std::string& out_path, const std::string& format,
                     std::ostream& out)
{
    if (range.lo < 2)
        throw UsageError("sweep range must start at n >= 2");
    if (range.hi > max_certificate_n)
        throw UsageError("sweep range exceeds n = " + std::to_string(max_certificate_n));
    const auto certs = certificate_sweep(range.lo, range.hi);
    std::ostringstream os;
    if (format == "text") {
        os << std::left << std::setw(8) << "n" << std::setw(6) << "m" << std::setw(6) << "phd" << std::setw(14)
           << "norm~" << "ratio~\n";
        for (const auto& c : certs)
            os << std::setw(8) << c.n << std::setw(6) << c.m << std::setw(6) << c.phd << std::setw(14)
               << c.norm.decimal() << c.ratio.decimal() << "\n";
    } else {
        os << or_csv_header();
        for (const auto& c : certs)
            os << or_csv_row(c);
    }
    emit(out_path, os.str(), out);
    return exit_ok;
}

inline std::string threshold_csv_header() { return "n,t,T_clipped,phd,ratio_best\n"; }

inline std::string threshold_csv_row(const ThresholdReport& r)
{
    std::ostringstream os;
    os << r.n << ',' << r.t << ',' << r.T.clipped.size() << ',' << r.phd << ','
       << (r.ratio_best ? r.ratio_best->str() : "undef") << '\n';
    return os.str();
}

inline std::string threshold_text(const ThresholdReport& r)
{
    auto join = [](const auto& xs) {
        std::ostringstream os;
        for (std::size_t i = 0; i < xs.size(); ++i)
            os << (i ? " " : "") << xs[i];
        return os.str();
    };
    std::ostringstream os;
    os << "n " << r.n << "\n"
       << "t " << r.t << "\n"
       << "T_raw " << join(r.T.raw) << "\n"
       << "T_clipped " << join(r.T.clipped) << "\n"
       << "|T| " << r.T.clipped.size() << "\n"
       << "deg_p " << r.degree_p << "\n"
       << "phd " << r.phd << "\n"
       << "q.THR " << r.pairing.str() << "\n"
       << "norm " << r.norm.str() << "\n"
       << "orientation " << (r.orientation > 0 ? "+q" : r.orientation < 0 ? "-q" : "none") << "\n"
       << "ratio_best " << (r.ratio_best ? r.ratio_best->str() : "undef") << "\n"
       << "squares_only " << (r.squares_only ? "yes" : "no") << "\n";
    if (r.t == 1 && r.n >= 2)
        os << "or_certificate_ratio " << make_certificate(r.n).ratio.str() << "\n";
    os << "verdict " << r.verdict << "\n";
    return os.str();
}

inline int cmd_threshold(const IntRange& ns, std::optional<int> t, const std::string& out_path,
                         const std::string& format, std::ostream& out)
{
    const bool single = ns.lo == ns.hi && t.has_value();
    std::vector<std::pair<int, int>> grid;
    if (single) {
        require_threshold_domain(ns.lo, *t);
        grid.emplace_back(ns.lo, *t);
    } else {
        if (ns.lo < 1)
            throw UsageError("threshold sweep needs n >= 1");
        if (t && *t < 0)
            throw UsageError("--t must be nonnegative");
        for (int n = ns.lo; n <= ns.hi; ++n)
            for (int tt = 0; tt <= n; ++tt)
                if (!t || *t == tt)
                    grid.emplace_back(n, tt);
        if (grid.empty())
            throw UsageError("no (n, t) pair in range");
    }
    std::ostringstream os;
    if (format == "csv")
        os << threshold_csv_header();
    for (auto [n, tt] : grid) {
        const auto report = build_candidate(n, tt);
        if (format == "csv")
            os << threshold_csv_row(report);
        else
            os << threshold_text(report) << (grid.size() > 1 ? "\n" : "");
    }
    emit(out_path, os.str(), out);
    return exit_ok;
}

/// Runs one invocation; `args` excludes the program name.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Dual polynomials and approximate degree of symmetric Boolean functions", "dualpoly"};
    app.require_subcommand(1);

    std::string n_text, t_text, eps_text, func, out_path, format = "text", file;
    int degree = -1;
    int brute_limit = default_brute_force_limit;
    const std::vector<std::string> formats{"text", "csv"};

    auto* or_cert = app.add_subcommand("or-cert", "Build and verify the OR dual-polynomial certificate");
    or_cert->add_option("--n", n_text, "Number of bits (>= 2)")->required();
    or_cert->add_option("--out", out_path, "Certificate output path");
    or_cert->add_option("--format", format)->check(CLI::IsMember(formats));

    auto* verify = app.add_subcommand("verify", "Re-verify a certificate or witness document");
    verify->add_option("file", file, "Document path")->required();
    verify->add_option("--eps", eps_text, "Override epsilon (exact rational)");

    auto* deg = app.add_subcommand("degree", "Exact eps-approximate degree by linear programming");
    deg->add_option("--func", func, "or | parity | constant | threshold | threshold-<t>")->required();
    deg->add_option("--n", n_text, "Number of bits")->required();
    deg->add_option("--t", t_text, "Threshold position for --func threshold");
    deg->add_option("--eps", eps_text, "Error bound (exact rational, 0 <= eps < 1)")->required();
    deg->add_option("--degree", degree, "Also report eps* at this degree");
    deg->add_option("--out", out_path, "Write the dual witness document here");
    deg->add_option("--format", format)->check(CLI::IsMember(formats));
    deg->add_option("--brute-limit", brute_limit, "Largest n for the brute-force Fourier cross-check");

    auto* sweep = app.add_subcommand("sweep", "Tabulate OR certificates over a range of n");
    sweep->add_option("--n", n_text, "Range LO..HI")->required();
    sweep->add_option("--out", out_path, "Output path (default stdout)");
    std::string sweep_format = "csv";
    sweep->add_option("--format", sweep_format)->check(CLI::IsMember(formats));

    auto* thr = app.add_subcommand("threshold", "Measure the threshold candidate dual polynomial");
    thr->add_option("--n", n_text, "Number of bits, or range LO..HI")->required();
    thr->add_option("--t", t_text, "Threshold position (all t when omitted)");
    thr->add_option("--out", out_path, "Output path (default stdout)");
    thr->add_option("--format", format)->check(CLI::IsMember(formats));

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    }

    try {
        if (*or_cert)
            return cmd_or_cert(parse_int_arg("--n", n_text), out_path, format, out);
        if (*verify)
            return cmd_verify(file, eps_text.empty() ? std::nullopt : std::optional(parse_eps_arg(eps_text)), out);
        if (*deg) {
            const int n = parse_int_arg("--n", n_text);
            if (func == "threshold") {
                if (t_text.empty())
                    throw UsageError("--func threshold needs --t");
                func = "threshold-" + std::to_string(parse_int_arg("--t", t_text));
            }
            const Rat eps = parse_eps_arg(eps_text);
            int status = cmd_degree(func, n, eps, out_path, format, brute_limit, out);
            if (degree >= 0) {
                if (degree > n)
                    throw UsageError("--degree exceeds n");
                out << "eps_star(d=" << degree << ") "
                    << min_eps_for_degree(named_function(func, n), degree).epsilon_star.str() << "\n";
            }
            return status;
        }
        if (*sweep)
            return cmd_sweep(parse_range_arg("--n", n_text), out_path, sweep_format, out);
        if (*thr) {
            std::optional<int> t;
            if (!t_text.empty())
                t = parse_int_arg("--t", t_text);
            return cmd_threshold(parse_range_arg("--n", n_text), t, out_path, format, out);
        }
    } catch (const CheckFailure& e) {
        err << e.what() << "\n";
        return exit_rejected;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const FormatError& e) {
        err << "format error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}

} // namespace dualpoly::cli
