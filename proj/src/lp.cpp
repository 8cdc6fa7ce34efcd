#include "rigidity/lp.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "rigidity/errors.hpp"
#include "rigidity/matrix.hpp"

namespace rigidity {

namespace {

Rat dot(const Vec& a, const Vec& b) {
    Rat r(0);
    for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
    return r;
}

// Dense simplex tableau over the standard-form system A y = b, y >= 0.
// Columns of `t` hold B^{-1}A with the right-hand side appended last.
struct Tableau {
    std::vector<Vec> t;
    std::vector<int> basis;  // basic column per row
    int cols = 0;            // excludes the rhs column

    Rat& rhs(int r) { return t[r][cols]; }

    void pivot(int row, int col) {
        Vec& pr = t[row];
        Rat p = pr[col];
        for (auto& x : pr) x /= p;
        for (std::size_t r = 0; r < t.size(); ++r) {
            if (static_cast<int>(r) == row) continue;
            Rat f = t[r][col];
            if (f == 0) continue;
            for (int c = 0; c <= cols; ++c) t[r][c] -= f * pr[c];
        }
        basis[row] = col;
    }

    // Bland's rule: entering = lowest column with negative reduced cost,
    // leaving = lowest basic index among the ratio-test minima.  Returns
    // false on unboundedness.  `blocked` columns never enter.
    bool run(const Vec& cost, int blocked_from) {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < cols && enter < 0; ++j) {
                if (j >= blocked_from) break;
                Rat rc = cost[j];
                for (std::size_t r = 0; r < t.size(); ++r)
                    rc -= cost[basis[r]] * t[r][j];
                if (sign(rc) < 0) enter = j;
            }
            if (enter < 0) return true;

            int leave = -1;
            Rat best;
            for (std::size_t r = 0; r < t.size(); ++r) {
                if (sign(t[r][enter]) <= 0) continue;
                Rat ratio = rhs(static_cast<int>(r)) / t[r][enter];
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis[r] < basis[leave])) {
                    leave = static_cast<int>(r);
                    best = ratio;
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
    }

    Rat column_value(int col) const {
        for (std::size_t r = 0; r < t.size(); ++r)
            if (basis[r] == col) return t[r][cols];
        return Rat(0);
    }
};

}  // namespace

bool satisfies(const LinearSystem& s, const Vec& x) {
    if (static_cast<int>(x.size()) != s.num_vars)
        throw DimensionMismatch("point length does not match variable count");
    for (const auto& row : s.rows) {
        Rat lhs = dot(row.coeffs, x);
        if (row.rel == Relation::GE ? lhs < row.rhs : lhs != row.rhs) return false;
    }
    return true;
}

SimplexOutcome simplex_minimize(const LinearSystem& s, const Vec& objective) {
    const int n = s.num_vars;
    const int m = static_cast<int>(s.rows.size());
    if (static_cast<int>(objective.size()) != n)
        throw DimensionMismatch("objective length does not match variable count");

    // Standard form: x = u - v with u, v >= 0, one surplus column per GE row.
    int n_ge = 0;
    for (const auto& row : s.rows)
        if (row.rel == Relation::GE) ++n_ge;
    const int art_from = 2 * n + n_ge;
    const int total = art_from + m;

    Tableau tab;
    tab.cols = total;
    tab.basis.resize(m);
    int next_slack = 2 * n;
    for (int r = 0; r < m; ++r) {
        const LinearRow& row = s.rows[r];
        Vec line(total + 1, Rat(0));
        for (int j = 0; j < n; ++j) {
            line[j] = row.coeffs[j];
            line[n + j] = -row.coeffs[j];
        }
        if (row.rel == Relation::GE) line[next_slack++] = Rat(-1);
        line[total] = row.rhs;
        if (sign(row.rhs) < 0)
            for (auto& x : line) x = -x;
        line[art_from + r] = Rat(1);
        tab.basis[r] = art_from + r;
        tab.t.push_back(std::move(line));
    }

    Vec phase1(total, Rat(0));
    for (int j = art_from; j < total; ++j) phase1[j] = Rat(1);
    tab.run(phase1, art_from);  // bounded below by 0, cannot fail

    Rat infeas(0);
    for (int r = 0; r < static_cast<int>(tab.t.size()); ++r)
        if (tab.basis[r] >= art_from) infeas += tab.rhs(r);
    if (sign(infeas) > 0) return {LPStatus::Infeasible, Rat(0), {}};

    // Pivot out artificials stuck in the basis at zero; drop redundant rows.
    for (int r = static_cast<int>(tab.t.size()) - 1; r >= 0; --r) {
        if (tab.basis[r] < art_from) continue;
        int col = -1;
        for (int j = 0; j < art_from && col < 0; ++j)
            if (tab.t[r][j] != 0) col = j;
        if (col >= 0) {
            tab.pivot(r, col);
        } else {
            tab.t.erase(tab.t.begin() + r);
            tab.basis.erase(tab.basis.begin() + r);
        }
    }

    Vec phase2(total, Rat(0));
    for (int j = 0; j < n; ++j) {
        phase2[j] = objective[j];
        phase2[n + j] = -objective[j];
    }
    if (!tab.run(phase2, art_from)) return {LPStatus::Unbounded, Rat(0), {}};

    Vec x(n);
    for (int j = 0; j < n; ++j)
        x[j] = tab.column_value(j) - tab.column_value(n + j);
    return {LPStatus::Optimal, dot(objective, x), std::move(x)};
}

bool enumerate_minimum(const LinearSystem& s, const Vec& objective,
                       LPResult& out) {
    const int n = s.num_vars;
    const int m = static_cast<int>(s.rows.size());
    if (m < n) return false;

    bool found = false;
    Rat best_value;
    Vec best_point;

    std::vector<int> pick(n);
    std::iota(pick.begin(), pick.end(), 0);
    for (;;) {
        Mat a(n, n);
        Vec b(n);
        for (int r = 0; r < n; ++r) {
            for (int c = 0; c < n; ++c) a.at(r, c) = s.rows[pick[r]].coeffs[c];
            b[r] = s.rows[pick[r]].rhs;
        }
        try {
            Vec x = solve_linear(a, b);
            if (satisfies(s, x)) {
                Rat val = dot(objective, x);
                if (!found || val < best_value ||
                    (val == best_value &&
                     std::lexicographical_compare(x.begin(), x.end(),
                                                  best_point.begin(),
                                                  best_point.end()))) {
                    found = true;
                    best_value = val;
                    best_point = x;
                }
            }
        } catch (const SingularMatrix&) {
        }

        // next n-combination of {0..m-1}
        int i = n - 1;
        while (i >= 0 && pick[i] == m - n + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < n; ++j) pick[j] = pick[j - 1] + 1;
    }

    if (!found) return false;
    out.value = best_value;
    out.witness = best_point;
    out.active_rows.clear();
    for (int r = 0; r < m; ++r)
        if (dot(s.rows[r].coeffs, best_point) == s.rows[r].rhs)
            out.active_rows.push_back(r);
    return true;
}

LPResult minimize(const LinearSystem& s, const Vec& objective) {
    SimplexOutcome sx = simplex_minimize(s, objective);
    if (sx.status == LPStatus::Infeasible)
        throw Infeasible("constraint system has no solution");
    if (sx.status == LPStatus::Unbounded)
        throw Unbounded("objective is unbounded below on the feasible set");

    LPResult out;
    if (!enumerate_minimum(s, objective, out))
        throw std::logic_error("lp routes disagree: simplex found an optimum "
                               "but no feasible vertex exists");
    if (out.value != sx.value)
        throw std::logic_error("lp routes disagree: simplex value " +
                               rat_str(sx.value) + ", enumeration value " +
                               rat_str(out.value));
    return out;
}

LinearSystem fourier_motzkin(const LinearSystem& s, int var) {
    if (var < 0 || var >= s.num_vars)
        throw DimensionMismatch("eliminated variable out of range");

    std::vector<LinearRow> ge;
    for (const auto& row : s.rows) {
        if (row.rel == Relation::GE) {
            ge.push_back(row);
        } else {
            ge.push_back({row.coeffs, row.rhs, Relation::GE});
            LinearRow neg{row.coeffs, -row.rhs, Relation::GE};
            for (auto& c : neg.coeffs) c = -c;
            ge.push_back(std::move(neg));
        }
    }

    LinearSystem out;
    out.num_vars = s.num_vars;
    std::vector<const LinearRow*> pos, neg;
    for (const auto& row : ge) {
        int sg = sign(row.coeffs[var]);
        if (sg > 0) pos.push_back(&row);
        else if (sg < 0) neg.push_back(&row);
        else out.rows.push_back(row);
    }
    for (const LinearRow* p : pos) {
        for (const LinearRow* q : neg) {
            // p->coeffs[var] * q  +  |q->coeffs[var]| * p: positive
            // multipliers, so the GE direction survives and the combined
            // coefficient at var vanishes exactly.
            Rat mp = p->coeffs[var];
            Rat mq = -q->coeffs[var];
            LinearRow combined;
            combined.rel = Relation::GE;
            combined.coeffs.resize(s.num_vars);
            for (int c = 0; c < s.num_vars; ++c)
                combined.coeffs[c] = mp * q->coeffs[c] + mq * p->coeffs[c];
            combined.rhs = mp * q->rhs + mq * p->rhs;
            out.rows.push_back(std::move(combined));
        }
    }
    return out;
}

std::string row_to_string(const LinearRow& row,
                          const std::vector<std::string>& var_names) {
    std::string lhs;
    for (std::size_t j = 0; j < row.coeffs.size(); ++j) {
        const Rat& c = row.coeffs[j];
        if (c == 0) continue;
        Rat mag = abs(c);
        if (lhs.empty()) {
            if (sign(c) < 0) lhs += "-";
        } else {
            lhs += sign(c) < 0 ? " - " : " + ";
        }
        if (mag != 1) lhs += rat_str(mag) + "*";
        lhs += var_names.at(j);
    }
    if (lhs.empty()) lhs = "0";
    lhs += row.rel == Relation::GE ? " >= " : " = ";
    return lhs + rat_str(row.rhs);
}

}  // namespace rigidity
