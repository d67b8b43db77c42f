#pragma once

// Dense two-phase tableau simplex over exact rationals.
//
// The problem is brought into standard form (free variables split, rows with
// negative right-hand side negated, one slack/surplus/artificial per row) and
// solved with Bland's smallest-index rule, which cannot cycle. Dual values
// are read off the final tableau as c_B B^{-1} and mapped back to the
// caller's orientation: dual[i] is the shadow price d(optimum)/d(rhs_i), so
// that objective · primal == rhs · dual at optimality.

#include "dualpoly/rational.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dualpoly::lp {

enum class Sense { minimize, maximize };
enum class Relation { less_equal, equal, greater_equal };
enum class Status { optimal, infeasible, unbounded, pivot_limit };
enum class PivotRule {
    bland,   // smallest improving index, smallest basic index on ratio ties
    dantzig, // most negative reduced cost, first row on ratio ties; may cycle
};

inline std::string to_string(Status s)
{
    switch (s) {
    case Status::optimal: return "optimal";
    case Status::infeasible: return "infeasible";
    case Status::unbounded: return "unbounded";
    case Status::pivot_limit: return "pivot_limit";
    }
    return "?";
}

struct Row {
    std::vector<Rat> coeffs;
    Relation relation = Relation::less_equal;
    Rat rhs;
};

struct Problem {
    Sense sense = Sense::minimize;
    std::vector<Rat> objective;
    std::vector<Row> rows;
    std::vector<bool> free; // per variable; false means x >= 0

    std::size_t num_vars() const { return objective.size(); }

    void validate() const
    {
        if (free.size() != objective.size())
            throw std::invalid_argument("lp: bound flags and objective differ in length");
        for (const auto& r : rows)
            if (r.coeffs.size() != objective.size())
                throw std::invalid_argument("lp: constraint row has wrong length");
    }
};

struct Outcome {
    Status status = Status::infeasible;
    Rat value;
    std::vector<Rat> primal;
    std::vector<Rat> dual;
    std::size_t pivots = 0;
};

struct Options {
    PivotRule rule = PivotRule::bland;
    std::size_t max_pivots = 0; // 0: unlimited
};

namespace detail {

enum class ColumnKind { structural, slack, surplus, artificial };

class Tableau {
public:
    Tableau(const Problem& p, Options opts) : opts_(opts)
    {
        p.validate();
        const std::size_t m = p.rows.size();

        for (std::size_t j = 0; j < p.num_vars(); ++j) {
            var_pos_.push_back(add_column(ColumnKind::structural));
            var_neg_.push_back(p.free[j] ? std::optional(add_column(ColumnKind::structural)) : std::nullopt);
        }
        flip_.assign(m, 1);
        identity_col_.assign(m, 0);
        std::vector<std::optional<std::size_t>> surplus_col(m);
        for (std::size_t i = 0; i < m; ++i) {
            Relation rel = p.rows[i].relation;
            if (p.rows[i].rhs.sign() < 0) {
                flip_[i] = -1;
                if (rel == Relation::less_equal)
                    rel = Relation::greater_equal;
                else if (rel == Relation::greater_equal)
                    rel = Relation::less_equal;
            }
            if (rel == Relation::less_equal) {
                identity_col_[i] = add_column(ColumnKind::slack);
            } else {
                if (rel == Relation::greater_equal)
                    surplus_col[i] = add_column(ColumnKind::surplus);
                identity_col_[i] = add_column(ColumnKind::artificial);
            }
        }

        const std::size_t width = kinds_.size() + 1;
        tab_.assign(m, std::vector<Rat>(width));
        basis_.resize(m);
        for (std::size_t i = 0; i < m; ++i) {
            const Rat sign(flip_[i]);
            auto& row = tab_[i];
            for (std::size_t j = 0; j < p.num_vars(); ++j) {
                const Rat& a = p.rows[i].coeffs[j];
                if (a.is_zero())
                    continue;
                row[var_pos_[j]] = a * sign;
                if (var_neg_[j])
                    row[*var_neg_[j]] = -(a * sign);
            }
            if (surplus_col[i])
                row[*surplus_col[i]] = Rat(-1);
            row[identity_col_[i]] = Rat(1);
            row.back() = p.rows[i].rhs * sign;
            basis_[i] = identity_col_[i];
        }

        cost_.assign(kinds_.size(), Rat());
        for (std::size_t j = 0; j < p.num_vars(); ++j) {
            Rat c = p.sense == Sense::minimize ? p.objective[j] : -p.objective[j];
            cost_[var_pos_[j]] = c;
            if (var_neg_[j])
                cost_[*var_neg_[j]] = -c;
        }
    }

    Outcome solve(const Problem& p)
    {
        Outcome out;
        std::vector<Rat> phase1(kinds_.size());
        bool any_artificial = false;
        for (std::size_t j = 0; j < kinds_.size(); ++j)
            if (kinds_[j] == ColumnKind::artificial) {
                phase1[j] = Rat(1);
                any_artificial = true;
            }
        if (any_artificial) {
            Status s = run(phase1, /*allow_artificial=*/true);
            if (s == Status::pivot_limit)
                return finish(out, s);
            if (current_value(phase1).sign() > 0)
                return finish(out, Status::infeasible);
            drive_out_artificials();
        }
        Status s = run(cost_, /*allow_artificial=*/false);
        if (s != Status::optimal)
            return finish(out, s);

        out.primal.resize(p.num_vars());
        for (std::size_t j = 0; j < p.num_vars(); ++j) {
            out.primal[j] = column_value(var_pos_[j]);
            if (var_neg_[j])
                out.primal[j] -= column_value(*var_neg_[j]);
        }
        for (std::size_t j = 0; j < p.num_vars(); ++j)
            out.value += p.objective[j] * out.primal[j];

        const std::size_t m = tab_.size();
        out.dual.resize(m);
        for (std::size_t i = 0; i < m; ++i) {
            Rat y;
            for (std::size_t r = 0; r < m; ++r)
                if (!cost_[basis_[r]].is_zero())
                    y += cost_[basis_[r]] * tab_[r][identity_col_[i]];
            if (flip_[i] < 0)
                y = -y;
            if (p.sense == Sense::maximize)
                y = -y;
            out.dual[i] = y;
        }
        return finish(out, Status::optimal);
    }

private:
    std::size_t add_column(ColumnKind kind)
    {
        kinds_.push_back(kind);
        return kinds_.size() - 1;
    }

    Outcome& finish(Outcome& out, Status s)
    {
        out.status = s;
        out.pivots = pivots_;
        return out;
    }

    Rat column_value(std::size_t col) const
    {
        for (std::size_t i = 0; i < basis_.size(); ++i)
            if (basis_[i] == col)
                return tab_[i].back();
        return Rat();
    }

    Rat current_value(const std::vector<Rat>& cost) const
    {
        Rat v;
        for (std::size_t i = 0; i < basis_.size(); ++i)
            v += cost[basis_[i]] * tab_[i].back();
        return v;
    }

    Rat reduced_cost(const std::vector<Rat>& cost, std::size_t col) const
    {
        Rat r = cost[col];
        for (std::size_t i = 0; i < basis_.size(); ++i)
            if (!cost[basis_[i]].is_zero() && !tab_[i][col].is_zero())
                r -= cost[basis_[i]] * tab_[i][col];
        return r;
    }

    Status run(const std::vector<Rat>& cost, bool allow_artificial)
    {
        const std::size_t ncols = kinds_.size();
        for (;;) {
            std::vector<bool> is_basic(ncols, false);
            for (auto b : basis_)
                is_basic[b] = true;

            std::optional<std::size_t> entering;
            Rat best;
            for (std::size_t j = 0; j < ncols; ++j) {
                if (is_basic[j] || (!allow_artificial && kinds_[j] == ColumnKind::artificial))
                    continue;
                Rat r = reduced_cost(cost, j);
                if (r.sign() >= 0)
                    continue;
                if (opts_.rule == PivotRule::bland) {
                    entering = j;
                    break;
                }
                if (!entering || r < best) {
                    entering = j;
                    best = r;
                }
            }
            if (!entering)
                return Status::optimal;

            std::optional<std::size_t> leaving;
            Rat best_ratio;
            for (std::size_t i = 0; i < tab_.size(); ++i) {
                const Rat& a = tab_[i][*entering];
                if (a.sign() <= 0)
                    continue;
                Rat ratio = tab_[i].back() / a;
                bool better = !leaving || ratio < best_ratio
                    || (ratio == best_ratio && opts_.rule == PivotRule::bland && basis_[i] < basis_[*leaving]);
                if (better) {
                    leaving = i;
                    best_ratio = ratio;
                }
            }
            if (!leaving)
                return Status::unbounded;

            if (opts_.max_pivots != 0 && pivots_ >= opts_.max_pivots)
                return Status::pivot_limit;
            pivot(*leaving, *entering);
        }
    }

    void pivot(std::size_t row, std::size_t col)
    {
        ++pivots_;
        auto& prow = tab_[row];
        const Rat inv = Rat(1) / prow[col];
        for (auto& v : prow)
            if (!v.is_zero())
                v *= inv;
        for (std::size_t i = 0; i < tab_.size(); ++i) {
            if (i == row || tab_[i][col].is_zero())
                continue;
            const Rat factor = tab_[i][col];
            auto& r = tab_[i];
            for (std::size_t j = 0; j < r.size(); ++j)
                if (!prow[j].is_zero())
                    r[j] -= factor * prow[j];
        }
        basis_[row] = col;
    }

    // Artificials still basic after phase 1 sit at level zero. Swap each for
    // any non-artificial column with a nonzero entry in its row; when none
    // exists the row is redundant and the artificial stays, frozen at zero.
    void drive_out_artificials()
    {
        for (std::size_t i = 0; i < tab_.size(); ++i) {
            if (kinds_[basis_[i]] != ColumnKind::artificial)
                continue;
            for (std::size_t j = 0; j < kinds_.size(); ++j)
                if (kinds_[j] != ColumnKind::artificial && !tab_[i][j].is_zero()) {
                    pivot(i, j);
                    break;
                }
        }
    }

    Options opts_;
    std::vector<ColumnKind> kinds_;
    std::vector<std::size_t> var_pos_;
    std::vector<std::optional<std::size_t>> var_neg_;
    std::vector<int> flip_;
    std::vector<std::size_t> identity_col_;
    std::vector<std::vector<Rat>> tab_;
    std::vector<std::size_t> basis_;
    std::vector<Rat> cost_;
    std::size_t pivots_ = 0;
};

} // namespace detail

/// Exact optimum of `problem`; statuses instead of numbers for the degenerate cases.
inline Outcome exact_simplex(const Problem& problem, Options opts = {})
{
    detail::Tableau t(problem, opts);
    return t.solve(problem);
}

/// Checks an optimal outcome independently of how it was produced: primal
/// feasibility, dual feasibility under the shadow-price convention, and equal
/// objective values. Together these imply complementary slackness.
inline bool verify_optimality(const Problem& p, const Outcome& out)
{
    if (out.status != Status::optimal || out.primal.size() != p.num_vars() || out.dual.size() != p.rows.size())
        return false;
    const bool minimize = p.sense == Sense::minimize;

    for (std::size_t j = 0; j < p.num_vars(); ++j)
        if (!p.free[j] && out.primal[j].sign() < 0)
            return false;

    Rat dual_value;
    std::vector<Rat> aty(p.num_vars());
    for (std::size_t i = 0; i < p.rows.size(); ++i) {
        const Row& row = p.rows[i];
        Rat lhs;
        for (std::size_t j = 0; j < p.num_vars(); ++j) {
            lhs += row.coeffs[j] * out.primal[j];
            aty[j] += row.coeffs[j] * out.dual[i];
        }
        const Rat& y = out.dual[i];
        switch (row.relation) {
        case Relation::less_equal:
            if (lhs > row.rhs || (minimize ? y.sign() > 0 : y.sign() < 0))
                return false;
            break;
        case Relation::greater_equal:
            if (lhs < row.rhs || (minimize ? y.sign() < 0 : y.sign() > 0))
                return false;
            break;
        case Relation::equal:
            if (lhs != row.rhs)
                return false;
            break;
        }
        dual_value += row.rhs * y;
    }
    for (std::size_t j = 0; j < p.num_vars(); ++j) {
        Rat reduced = p.objective[j] - aty[j];
        if (p.free[j] ? !reduced.is_zero() : (minimize ? reduced.sign() < 0 : reduced.sign() > 0))
            return false;
    }
    Rat primal_value;
    for (std::size_t j = 0; j < p.num_vars(); ++j)
        primal_value += p.objective[j] * out.primal[j];
    return primal_value == out.value && dual_value == out.value;
}

} // namespace dualpoly::lp
