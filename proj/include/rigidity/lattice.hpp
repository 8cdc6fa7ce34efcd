#ifndef RIGIDITY_LATTICE_HPP
#define RIGIDITY_LATTICE_HPP

#include <string>
#include <vector>

#include "rigidity/lp.hpp"
#include "rigidity/matrix.hpp"
#include "rigidity/rational.hpp"

namespace rigidity {

/// Intersection lattice of a singular surface: the two curve components
/// Ct_plus, Ct_minus followed by the exceptional curves T_1..T_k, with the
/// exact intersection pairing and the hyperplane-class pairings.
struct IntersectionLattice {
    std::vector<std::string> labels;  // size k+2, first two are the C-tilde pair
    SymmetricForm form;               // dim k+2
    Vec h_pairings;                   // (H . basis_i) for each basis vector
    Rat h_self;                       // (H . H)

    int dim() const { return form.dim(); }
    int exceptional_count() const { return form.dim() - 2; }
};

/// The six built-in singular-surface cases.
enum class SurfaceCaseName { A, B, C, D, E, F };

struct SurfaceCase {
    SurfaceCaseName name;
    IntersectionLattice lattice;
};

SurfaceCase builtin_case(SurfaceCaseName name);
SurfaceCaseName case_from_letter(char c);  // 'A'..'F'
char case_letter(SurfaceCaseName name);

// The exceptional block Theta = pairings among T_1..T_k, verified negative
// definite (leading principal minors alternate in sign).  Throws
// NotNegativeDefinite otherwise.
Mat exceptional_gram(const IntersectionLattice& lat);

/// Sign analysis of Theta^{-1}.
struct InverseSignReport {
    Mat inverse;
    bool strictly_negative = false;  // every entry < 0
    bool nonpositive = false;        // every entry <= 0 and diagonal < 0
};
InverseSignReport check_inverse_sign(const IntersectionLattice& lat);

// The unique combination e of T_1..T_k making Ct_sign + e orthogonal to
// every T_i:  e = -Theta^{-1} (pairings of Ct_sign with T).  All coordinates
// must come out >= 0; otherwise throws NonpositiveCone.
// sign: +1 selects Ct_plus, -1 selects Ct_minus.
Vec orthogonal_shift(const IntersectionLattice& lat, int sign);

/// Pairing data of the orthogonalized classes R_pm = Ct_pm + e_pm.
struct RPairingReport {
    Rat a;         // -(R_+^2) = -(R_-^2), required > 0
    Mat gram2;     // [[-a, 1+a], [1+a, -a]]
    Mat inverse2;  // (1/(1+2a)) [[a, 1+a], [1+a, a]]
};
// Verifies (R_+^2) = (R_-^2) = -a < 0, (R_+ . R_-) = 1 + a, the 2x2 inverse
// entries all positive, and the hyperplane-class consistency
// ((R_+ + R_-)^2) = (H^2) with (R_pm . H-side) = 1.  Throws
// AsymmetricLattice or NonNegativeSquare on failure.
RPairingReport r_pairing(const IntersectionLattice& lat);

/// A recorded elimination run: each step keeps the inequality produced and
/// the positive combination of previous rows that produced it.
struct EliminationStep {
    std::string description;  // e.g. "eliminate b1: 1*(row 3) + 2*(row 1)"
    LinearRow row;            // over variables (nu+, nu-, b_1..b_k, n)
};

struct EliminationChain {
    std::vector<std::string> var_names;  // "nu+", "nu-", "b1", ..., "n"
    LinearSystem start;
    std::vector<EliminationStep> steps;
    LinearRow final_row;  // c * n - d * nu+ >= 0
    Rat c;                // coefficient of n in the final row
    Rat d;                // negated coefficient of nu+ in the final row
};

// Eliminates b_1..b_k then nu_- from the nonnegativity system
//   pair(2nH - nu+ Ct+ - nu- Ct- - sum b_i T_i,  X) >= 0,
//   X in { Ct+, Ct-, T_1..T_k },
// treating n as one more nonnegative symbol.  The final inequality reads
// c n - d nu+ >= 0 with c, d > 0, i.e. nu+ <= (c/d) n.  Throws
// EliminationFailed when no such row survives.
EliminationChain derive_mult_bound(const SurfaceCase& sc);

/// Two-row restriction systems in the variables (nu+, nu-).
enum class RestrictionKind { Conic, Cone, K3Pencil };

struct RestrictionBound {
    std::string description;
    Rat value;
};

struct RestrictionReport {
    LinearSystem system;  // rows over (nu+, nu-) with concrete rhs
    std::vector<RestrictionBound> bounds;
};

// Builds the named system with exact coefficients at surface degree M and
// threshold n, and evaluates the implied bounds:
//   Conic:    {4n + 2(M-3) nu+ - 2(M-1) nu- >= 0, mirrored}  =>  nu_pm <= n
//   Cone:     {2n - (M-1) nu+ + (M-2) nu- >= 0, mirrored}
//             =>  nu- > (M-3)/(M-2) n  whenever  nu+ > n
//   K3Pencil: {2n + 2 nu+ - 3 nu- >= 0, mirrored}  =>  10n - 5 nu+ >= 0
RestrictionReport restriction_system(RestrictionKind kind, int M, const Rat& n);

/// Quadratic degree test: the cycle degree is at least
/// deg * (b_plus^2 + b_minus^2) under the open bounds nu+ > b_plus,
/// nu- > b_minus; contradiction when that floor already meets the budget.
struct DegreeContradiction {
    Rat min_lhs;
    bool contradiction = false;
};
DegreeContradiction degree_contradiction(int deg, const Rat& b_plus,
                                         const Rat& b_minus, const Rat& budget);

}  // namespace rigidity

#endif
