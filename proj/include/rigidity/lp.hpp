#ifndef RIGIDITY_LP_HPP
#define RIGIDITY_LP_HPP

#include <string>
#include <vector>

#include "rigidity/rational.hpp"

namespace rigidity {

enum class Relation { GE, EQ };

/// One constraint: coeffs . x  >=  rhs   (or  =  rhs).
struct LinearRow {
    Vec coeffs;  // 0-based, length = num_vars of the owning system
    Rat rhs;
    Relation rel = Relation::GE;
};

struct LinearSystem {
    int num_vars = 0;
    std::vector<LinearRow> rows;
};

// True iff x satisfies every row exactly.
bool satisfies(const LinearSystem& s, const Vec& x);

/// Exact minimizer output.  The witness is the lexicographically smallest
/// optimal vertex; active_rows lists every row tight at it.
struct LPResult {
    Rat value;
    Vec witness;
    std::vector<int> active_rows;
};

// Minimizes objective . x over the feasible set of s.  Two independent
// exact methods run and must agree: simplex decides the status and the
// value, exhaustive vertex enumeration reproduces the value and supplies
// the deterministic witness.  Throws Infeasible or Unbounded.
LPResult minimize(const LinearSystem& s, const Vec& objective);

enum class LPStatus { Optimal, Infeasible, Unbounded };

// Simplex alone (Bland's rule, exact arithmetic); no vertex enumeration.
// On return, value and witness are set only when status == Optimal.
struct SimplexOutcome {
    LPStatus status = LPStatus::Optimal;
    Rat value;
    Vec witness;
};
SimplexOutcome simplex_minimize(const LinearSystem& s, const Vec& objective);

// Vertex enumeration alone: intersects every num_vars-subset of rows,
// keeps feasible intersection points, and returns the optimal ones.
// Returns false when no feasible vertex exists (caller decides whether the
// system is infeasible or merely has no vertex).
bool enumerate_minimum(const LinearSystem& s, const Vec& objective,
                       LPResult& out);

// Exact Fourier-Motzkin projection eliminating variable var (0-based).
// The eliminated column becomes identically zero in the output; variable
// count and indexing are preserved.  Combined rows are positive integer
// combinations  a_pos * (negative row) + |a_neg| * (positive row), without
// content reduction, so small chains keep recognizable coefficients.
// EQ rows are split into two GE rows first.
LinearSystem fourier_motzkin(const LinearSystem& s, int var);

// Render a row as e.g. "2*x1 - x3 >= 1/2" using 1-based variable names.
std::string row_to_string(const LinearRow& row,
                          const std::vector<std::string>& var_names);

}  // namespace rigidity

#endif
