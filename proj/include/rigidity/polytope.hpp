#ifndef RIGIDITY_POLYTOPE_HPP
#define RIGIDITY_POLYTOPE_HPP

#include "rigidity/graph.hpp"
#include "rigidity/lp.hpp"
#include "rigidity/rational.hpp"

namespace rigidity {

// The Noether-Fano polytope of a graph at threshold m, over variables
// nu_1..nu_N, rows in fixed order:
//   1. sum p_i nu_i >= m (sum_{i>=2} p_i + 1)      with p_i = p_{N,i}
//   2. nu_i >= sum of nu_j over arrows j -> i, for each i in 2..N that has
//      incoming arrows
//   3. 2 nu_1 >= sum of nu_j over arrows j -> 1    (always emitted)
//   4. nu_N >= 0
LinearSystem build_nf_system(const BlowupGraph& g, const Rat& m);

/// Exact minimum of 2 nu_1 + nu_2 over the Noether-Fano polytope, compared
/// with the closed form (p_1 + p_2) * theta where
///   theta = (sum_{i>=2} p_i + 1) m / (p_1^2/2 + sum_{i>=2} p_i^2).
struct LeadingPairReport {
    Rat lp_value;
    Rat closed_form;
    bool passes = false;  // lp_value >= 2m
};
LeadingPairReport leading_pair_check(const BlowupGraph& g, const Rat& m);

/// Search for a level K < N at which the threshold inequality already holds
/// strictly for the truncated graph:
///   sum_{i<=K} p_{Ki} theta_i  >  m (sum_{2<=i<=K} p_{Ki} + 1).
/// Candidates tried in order: K = N-1, then the second-highest target of
/// vertex N.  The search range {2..N-1} is empty for N <= 2.
struct TruncationOutcome {
    enum class Status { Found, RangeEmpty, NotFound } status;
    int level = 0;  // meaningful only when Found
    Rat lhs;
    Rat rhs;
};
TruncationOutcome truncate_nf_level(const BlowupGraph& g, const Rat& m,
                                    const Vec& theta);

// Nonnegative combinatorial surplus behind the leading-pair bound:
//   (p_1 + p_2)(sum_{i>=2} p_i + 1) - p_1^2 - 2 sum_{i>=2} p_i^2,
// with p_i = p_{N,i} and p_2 = 0 when N = 1.
Rat leading_pair_gap(const BlowupGraph& g);

// Nonnegative margin for graphs whose vertices 1..k form a chain segment:
//   (sum_{i<=k} p_i)(sum_{i>k} p_i + 1) - sum_{i=1}^N p_i^2.
// Throws ChainViolated when the prefix has a skipping arrow.
Rat chain_split_margin(const BlowupGraph& g, int k);

// True iff the quadratic (in the parameter a)
//   (sum_{i<=k} p_i)^2 a^2
//     + 2 (2q - (sum_{i<=k} p_i)(sum_i p_i + 1)) a
//     + (sum_i p_i + 1)^2 - 4q                       with q = sum p_i^2
// is nonnegative for every rational a: positive leading coefficient plus
// nonpositive discriminant, the latter being equivalent to
// chain_split_margin(g, k) >= 0.  Same chain precondition.
bool chain_split_quadratic_ok(const BlowupGraph& g, int k);

// The degree-budget surface quadratic
//   f = 8n^2 - 4n nu1 - 4n nu_minus - 2 nu1^2 - 2 nu_minus^2
//       + 6 nu1 nu_minus - sum_{i=2}^{k+1} nu_i^2.
// rest holds nu_2..nu_{k+1} (0-based vector of length k).
Rat surface_quadratic_f(const Rat& n, const Rat& nu1, const Rat& nu_minus,
                        const Vec& rest);

// Value of f at the stationary point of the affine slice
//   nu_2 = ... = nu_{k+1} = ((k+2)n - nu1)/k,   nu_minus = (3 nu1 - 2n)/2,
// which dominates f over the whole slice sum_{i=1}^{k+1} nu_i = (k+2)n:
//   (1/k) [ (-k^2+6k-4) n^2 + (4-8k) n nu1 + ((5k-2)/2) nu1^2 ].
// Requires 0 <= nu1 <= 2n.
Rat surface_quadratic_max(const Rat& n, int k, const Rat& nu1);

}  // namespace rigidity

#endif
