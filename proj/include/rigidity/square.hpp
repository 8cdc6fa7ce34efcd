#ifndef RIGIDITY_SQUARE_HPP
#define RIGIDITY_SQUARE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rigidity/rational.hpp"

namespace rigidity {

/// Polynomial in s_1..s_m over the rationals with the weighted grading
/// wt(s_j) = j.  Terms map exponent vectors (length m, 0-based) to nonzero
/// coefficients.
struct WeightedPoly {
    int num_vars = 0;
    std::map<std::vector<int>, Rat> terms;

    static WeightedPoly zero(int num_vars) { return {num_vars, {}}; }
    static WeightedPoly variable(int num_vars, int j);  // s_j, 1-based j
    static WeightedPoly constant(int num_vars, const Rat& c);

    bool is_zero() const { return terms.empty(); }
    // Weighted degree sum j * e_j of one exponent vector.
    static int weighted_degree(const std::vector<int>& exponents);
    // True iff every monomial has weighted degree exactly d.
    bool is_quasi_homogeneous(int d) const;
    Rat evaluate(const Vec& point) const;  // point is 0-based, length num_vars
};

WeightedPoly operator+(const WeightedPoly& a, const WeightedPoly& b);
WeightedPoly operator-(const WeightedPoly& a, const WeightedPoly& b);
WeightedPoly operator*(const WeightedPoly& a, const WeightedPoly& b);
WeightedPoly operator*(const Rat& c, const WeightedPoly& a);
bool operator==(const WeightedPoly& a, const WeightedPoly& b);

// Monomials sorted by total weighted degree then lexicographically,
// e.g. "1/2*s1*s2 - 1/8*s1^3".
std::string poly_to_string(const WeightedPoly& p);

/// Result of testing whether 1 + b_1 t + ... + b_{2m} t^{2m} is the square
/// of a degree-m polynomial with constant term 1.
struct SquareCertificate {
    Vec b;                            // input coefficients, 0-based, length 2m
    Vec root;                         // r_1..r_m when determined, 0-based
    bool is_square = false;
    std::optional<int> failure_index; // first i in m+1..2m with a mismatch
};

// Determines r_1..r_m from the coefficients of t^1..t^m by matching
// (1 + sum r_j t^j)^2 term by term, then verifies t^{m+1}..t^{2m}.
// b must have even length 2m >= 2.
SquareCertificate truncated_sqrt(const Vec& b);

// The universal polynomial A_{m,i}(s_1..s_m) whose vanishing pattern
// b_i = A_{m,i}(b_1..b_m) for i = m+1..2m characterizes perfect squares.
// Quasi-homogeneous of weighted degree i; denominators are powers of 2.
WeightedPoly a_poly(int m, int i);

/// Enumerative data for the line system on a degree-M hypersurface setup.
struct LineCountReport {
    Int count;                 // 2 * (2M-2)! / (M-1)!
    std::vector<int> degrees;  // M, M+1, ..., 2(M-1)
};
LineCountReport line_count(int M);

// min { C(2M-1, j) : j = M..2M-2 }, which equals 2M-1 (attained at the top
// index).  The returned pair is (minimum, expected 2M-1 witness flag).
struct CodimFloorReport {
    Int minimum;
    bool equals_linear_floor = false;  // minimum == 2M-1
};
CodimFloorReport codim_floor(int M);

/// Number of coefficient conditions forcing rank <= target_rank at a
/// quadratic point, versus the available codimension budget 2M-3.
struct RankConditionReport {
    Int conditions;  // k(k+1)/2 with k = M+1-target_rank
    Int threshold;   // 2M-3
    bool exceeds = false;
};
RankConditionReport rank_condition_count(int M, int target_rank);

}  // namespace rigidity

#endif
