#ifndef RIGIDITY_ARGUMENT_HPP
#define RIGIDITY_ARGUMENT_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "rigidity/graph.hpp"
#include "rigidity/multiplicity.hpp"
#include "rigidity/rational.hpp"

namespace rigidity {

/// Auditable composition of checks: every step records the exact rational
/// it was decided on.  The conclusion holds iff every step is satisfied
/// and the final comparison goes through.
struct ArgumentStep {
    std::string description;
    Rat value;
    bool satisfied = false;
};

struct ArgumentTrace {
    std::vector<ArgumentStep> steps;
    std::string conclusion_text;
    bool conclusion_holds = false;
};

// "STEP <k> <description> value=<p/q> OK|FAIL" per step, then
// "CONCLUSION <text> HOLDS|FAILS".
void write_trace(std::ostream& out, const ArgumentTrace& t);
std::string trace_to_string(const ArgumentTrace& t);

// Composite contradiction argument for a fixed curve through the center:
// the self-intersection splits as (fixed part) b * C + Z_1 with
// deg Z_1 = 8n^2 - 2b, the first k centers lie on C (a chain prefix), and
// the weighted multiplicity sum is bounded above by b + 4n^2 * sum p*_{Li}
// while the counting floor bounds it below.  Concludes whether the fixed
// part is forced above the 4n^2 budget, contradicting deg Z_1 >= 0.
// Throws PreconditionViolated on structurally inapplicable input.
ArgumentTrace run_composition_argument(const ValuationData& v, int k,
                                       const Rat& b, const Rat& degZ1);

// Skeleton of the two-point budget argument: path-count sums Sigma0 (points)
// and Sigma1 (curves) from vertex N, the structural checks that every arrow
// into vertex 1 starts at a point vertex and that L+1 does not point at L-1,
// the strict square gap (2 Sigma0 + Sigma1)^2 > 4 Sigma0 (Sigma0 + Sigma1),
// and the combination bound p1 m1 + (Sigma0 - p1) m2 vs 4 n^2 Sigma0.
// Concludes whether the hypothesis m1 + m2 <= 8n^2 is contradicted.
ArgumentTrace run_budget_skeleton(const BlowupGraph& g, const Rat& n,
                                  const Rat& m1, const Rat& m2);

}  // namespace rigidity

#endif
