#ifndef RIGIDITY_MULTIPLICITY_HPP
#define RIGIDITY_MULTIPLICITY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rigidity/graph.hpp"
#include "rigidity/rational.hpp"

namespace rigidity {

/// Per-vertex valuation data attached to a resolution graph.  All
/// per-vertex vectors are 1-based (slot 0 unused) like the graph itself.
struct ValuationData {
    BlowupGraph graph;
    Vec nu;                  // multiplicity at each center, nu[1..N] >= 0
    std::vector<int> delta;  // discrepancy weight of each center, delta[1..N]
    std::map<int, Int> beta; // curve degrees, defined exactly for i > L
    Rat n;                   // positive threshold

    int size() const { return graph.n_vertices; }
};

// Fills delta with the dimension-three defaults: 2 for point centers
// (i <= L), 1 for curve centers (i > L).
ValuationData make_threefold_valuation(BlowupGraph graph, Vec nu,
                                       std::map<int, Int> beta, Rat n);

// Structural complaints (lengths, signs, beta domain); empty when well formed.
std::vector<std::string> validate_valuation(const ValuationData& v);

/// Nonnegative weights on the point vertices 1..L.  1-based.
struct WeightFunction {
    Vec a;  // a[1..L]
    int size() const { return static_cast<int>(a.size()) - 1; }
};

// True iff a(i) >= sum of a(j) over arrows j -> i of g, for every vertex i
// in a's range.  Pass the simplified graph to test compatibility with it.
// Sources above a's range carry no weight and are ignored.
bool check_compatible(const WeightFunction& a, const BlowupGraph& g);

enum class BoundKind { LogExcess, CanonicalExcess, WeightedCounting, SumFloor };

struct SideCondition {
    std::string description;
    Rat value;
    bool satisfied = false;
};

struct BoundCertificate {
    BoundKind kind = BoundKind::SumFloor;
    Rat value;
    std::vector<SideCondition> side_conditions;
    std::string branch;  // which case of the derivation produced the value

    bool all_satisfied() const;
};

enum class ExcessMode { Canonical, Log };

// Signed Noether-Fano excess: sum p_{Ni} nu_i minus n * (sum p_{Ni} delta_i),
// with an extra n subtracted in log mode.  Strictly positive values certify
// a (log) maximal singularity.
Rat nf_excess(const ValuationData& v, ExcessMode mode);

// Certified lower bound for the weighted sum of cycle multiplicities:
//   sum_{i<=L} a(i) nu_i^2  +  a(L) * sum_{i>L} beta_i nu_i^2.
// Requires a compatible with the simplified graph.
Rat counting_bound(const ValuationData& v, const WeightFunction& a);

// Minimum of sum nu_i^2 subject to sum nu_i p_i = Delta * n, attained at
// nu_i = p_i * Delta * n / q with q = sum p_i^2.  Returns Delta^2 n^2 / q.
// p is 0-based here (a bare coefficient list, not per-vertex data).
Rat quadratic_min_bound(const Vec& p, const Rat& Delta, const Rat& n);

// Smallest e such that the prefix 1..e already violates canonicity:
//   sum_{i<=e} p_{ei} (nu_i - delta_i n) > 0,
// or nullopt when no prefix does.
std::optional<int> minimal_noncanonical_index(const ValuationData& v);

struct DeficitReport {
    Rat a;                    // (1/n) sum_{i<Np} p_{Np,i} (delta_i n - nu_i)
    bool in_unit_range;       // 0 <= a <= 1
    bool forces_full_growth;  // a = 1 and nu_1 = ... = nu_Np = 2n
};

// Accumulated canonicity deficit of the prefix below the index returned by
// minimal_noncanonical_index.
DeficitReport normalized_deficit(const ValuationData& v, int noncanonical_index);

// Strict lower bound for sum_{i<=L} p*_{Li} m_i where m_i are the cycle
// multiplicities and p* are simplified-graph path counts.  Requires
// nu_i <= 2n everywhere and the segment L-1..N' of the graph to be a chain.
// Throws HypothesisViolated naming the failed side condition.
BoundCertificate multiplicity_sum_floor(const ValuationData& v);

// Verifies the combination step of the budget argument:
//   p1*m1 + (Sigma0 - p1)*m2 <= 4 n^2 Sigma0,
// which holds whenever m2 <= m1, Sigma0 >= 2 p1 and m1 + m2 <= 8 n^2
// (preconditions, checked).  Returns the evaluated comparison.
bool eight_n2_combiner(const Rat& p1, const Rat& sigma0, const Rat& m1,
                       const Rat& m2, const Rat& n);

}  // namespace rigidity

#endif
