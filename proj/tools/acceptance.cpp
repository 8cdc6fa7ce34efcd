#include "acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <stdexcept>

#include "rigidity/errors.hpp"
#include "rigidity/graph.hpp"
#include "rigidity/lattice.hpp"
#include "rigidity/lp.hpp"
#include "rigidity/matrix.hpp"
#include "rigidity/multiplicity.hpp"
#include "rigidity/polytope.hpp"
#include "rigidity/rational.hpp"
#include "rigidity/square.hpp"

namespace rigidity::acceptance {

namespace {

constexpr int kGraphSweep = 10000;
constexpr int kTripleSweep = 1000;
constexpr int kSquareTripsPerDegree = 126;  // 8 degrees -> 1008 round trips

std::uint64_t mix(std::uint64_t seed, std::uint64_t salt, std::uint64_t i) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt * 1000003ULL + i + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Records only the first failure so sweep notes stay short.
struct Checker {
    bool ok = true;
    std::string note;

    void fail(const std::string& what) {
        if (ok) {
            ok = false;
            note = what;
        }
    }
};

bool monotone_paths_hold(const BlowupGraph& g) {
    PathTable p = path_table(g);
    const int n = g.n_vertices;
    for (int i = 1; i <= n; ++i) {
        Int rhs(1);
        for (int j = i + 2; j <= n; ++j) rhs += p[n][j];
        if (p[n][i] > rhs) return false;
    }
    return true;
}

int longest_chain_prefix(const BlowupGraph& g) {
    int best = g.n_vertices;
    for (const auto& [a, b] : g.arrows)
        if (a > b + 1 && a - 1 < best) best = a - 1;
    return best;
}

// Random nonnegative integer function with f(i) >= sum of f over sources
// of i, built top-down so the constraint holds by construction.
std::vector<Int> compatible_function(const BlowupGraph& g, std::uint64_t seed) {
    const int k = g.n_vertices;
    std::vector<Int> f(static_cast<std::size_t>(k) + 1, 0);
    for (int i = k; i >= 1; --i) {
        Int incoming(0);
        for (int j : g.sources_of(i)) incoming += f[j];
        f[i] = incoming + Int(mix(seed, 77, static_cast<std::uint64_t>(i)) % 3);
        if (f[i] == 0) f[i] = 1;
    }
    return f;
}

// (mu(1)+mu(2)) * sum of a over vertices of class <= 1  >=  sum mu(j) a(j)
// for compatible mu, a on a class <= 2 graph.
bool two_vertex_weight_bound_holds(const BlowupGraph& d, std::uint64_t seed) {
    const int k = d.n_vertices;
    std::vector<Int> mu = compatible_function(d, mix(seed, 1, 0));
    std::vector<Int> a = compatible_function(d, mix(seed, 2, 0));
    std::vector<int> eps(static_cast<std::size_t>(k) + 1, 0);
    for (const auto& [i, j] : d.arrows) {
        (void)j;
        ++eps[i];
    }
    Int low_weight(0);
    for (int j = 1; j <= k; ++j)
        if (eps[j] <= 1) low_weight += a[j];
    Int lhs = (mu[1] + mu[2]) * low_weight;
    Int rhs(0);
    for (int j = 1; j <= k; ++j) rhs += mu[j] * a[j];
    return lhs >= rhs;
}

// Vertices i+1..i+k forming a chain among themselves, each with an arrow
// to i, must all keep that arrow after simplification.
bool retention_holds(const BlowupGraph& g, const BlowupGraph& star) {
    const int n = g.n_vertices;
    for (int i = 1; i <= n; ++i) {
        int run = 0;
        while (i + run + 1 <= n && g.has_arrow(i + run + 1, i)) ++run;
        for (int k = 1; k <= run; ++k) {
            bool chain = true;
            for (const auto& [a, b] : g.arrows)
                if (b >= i + 1 && a <= i + k && a > b + 1) chain = false;
            if (!chain) break;
            for (int v = i + 1; v <= i + k; ++v)
                if (!star.has_arrow(v, i)) return false;
        }
    }
    return true;
}

CriterionResult exceptional_inverse() {
    Mat expected(3, 3);
    const int num[3][3] = {{-3, -1, -2}, {-1, -3, -2}, {-2, -2, -4}};
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c)
            expected.at(r, c) = make_rat(num[r][c], 4);
    InverseSignReport rep =
        check_inverse_sign(builtin_case(SurfaceCaseName::C).lattice);
    bool pass = rep.inverse.rows() == 3 && rep.inverse.cols() == 3;
    if (pass)
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 3; ++c)
                if (rep.inverse.at(r, c) != expected.at(r, c)) pass = false;
    return {1, "exceptional_inverse", pass,
            pass ? "case C block inverse matches the 3x3 table exactly"
                 : "case C block inverse deviates from the expected table"};
}

CriterionResult elimination_chains() {
    Checker ch;
    for (char letter : {'A', 'B', 'C', 'D', 'E', 'F'}) {
        SurfaceCase sc = builtin_case(case_from_letter(letter));
        EliminationChain chain;
        try {
            chain = derive_mult_bound(sc);
        } catch (const std::exception& e) {
            ch.fail(std::string("case ") + letter + ": " + e.what());
            continue;
        }
        if (chain.c / chain.d != 2)
            ch.fail(std::string("case ") + letter +
                    ": bound ratio c/d = " + rat_str(chain.c / chain.d));
        if (letter == 'A' && (chain.c != 32 || chain.d != 16))
            ch.fail("case A final row is " + rat_str(chain.c) + "n - " +
                    rat_str(chain.d) + " nu+");
        if (letter == 'C' && (chain.c * 56 != chain.d * 112))
            ch.fail("case C final row not proportional to 112n - 56 nu+");
    }
    if (ch.ok)
        ch.note = "six cases give nu+ <= 2n; A ends at 32n-16nu+, C at a "
                  "positive multiple of 112n-56nu+";
    return {2, "elimination_chains", ch.ok, ch.note};
}

CriterionResult restriction_bounds() {
    Checker ch;
    for (Rat n : {Rat(1), Rat(3, 2)}) {
        for (int M = 4; M <= 12 && ch.ok; ++M) {
            RestrictionReport conic =
                restriction_system(RestrictionKind::Conic, M, n);
            if (conic.bounds.size() != 2 || conic.bounds[0].value != n ||
                conic.bounds[1].value != n)
                ch.fail("conic at M=" + std::to_string(M) +
                        " does not cap both multiplicities at n");
            RestrictionReport cone =
                restriction_system(RestrictionKind::Cone, M, n);
            Rat want = Rat(M - 3) * n / Rat(M - 2);
            if (cone.bounds.size() != 1 || cone.bounds[0].value != want)
                ch.fail("cone at M=" + std::to_string(M) + " threshold " +
                        (cone.bounds.empty() ? std::string("missing")
                                             : rat_str(cone.bounds[0].value)));
        }
        RestrictionReport k3 =
            restriction_system(RestrictionKind::K3Pencil, 4, n);
        LinearSystem proj = fourier_motzkin(k3.system, 1);
        bool found = false;
        for (const auto& row : proj.rows)
            if (row.coeffs[0] == -5 && row.coeffs[1] == 0 &&
                row.rhs == -10 * n)
                found = true;
        if (!found) ch.fail("pencil projection misses 10n - 5 nu+ >= 0");
    }
    if (ch.ok)
        ch.note = "conic caps at n, cone threshold (M-3)/(M-2) n for M=4..12, "
                  "pencil row 10n-5nu+ exact";
    return {3, "restriction_bounds", ch.ok, ch.note};
}

CriterionResult degree_contradictions() {
    Checker ch;
    for (Rat n : {Rat(1), Rat(5, 3)}) {
        Rat budget = 8 * n * n;
        DegreeContradiction seven =
            degree_contradiction(7, n, n / 2, budget);
        if (seven.min_lhs != 35 * n * n / 4 || !seven.contradiction)
            ch.fail("degree 7 floor " + rat_str(seven.min_lhs));
        DegreeContradiction six =
            degree_contradiction(6, n, 2 * n / 3, budget);
        if (six.min_lhs != 26 * n * n / 3 || !six.contradiction)
            ch.fail("degree 6 floor " + rat_str(six.min_lhs));
    }
    if (ch.ok) ch.note = "35n^2/4 and 26n^2/3 both exceed the 8n^2 budget";
    return {4, "degree_contradictions", ch.ok, ch.note};
}

CriterionResult lp_lower_bound(std::uint64_t seed) {
    Checker ch;
    for (int i = 0; i < kGraphSweep && ch.ok; ++i) {
        BlowupGraph g = random_valid_graph(mix(seed, 5, i), 8, LRule::Uniform);
        try {
            // Route agreement is a solver property: exercise it on the raw
            // system as well.  The 2nu1+nu2 floor belongs to valuations of
            // a surface, so it is asserted on the class <= 2 reduction.
            leading_pair_check(g, Rat(1));
            LeadingPairReport rep = leading_pair_check(simplify_full(g), Rat(1));
            if (!rep.passes)
                ch.fail("minimum " + rat_str(rep.lp_value) +
                        " below 2 at sweep index " + std::to_string(i));
        } catch (const std::logic_error& e) {
            ch.fail("solver routes disagree at sweep index " +
                    std::to_string(i) + ": " + e.what());
        }
    }
    if (ch.ok)
        ch.note = "min(2nu1+nu2) >= 2 on the class <= 2 reductions and both "
                  "solver routes agree on " +
                  std::to_string(kGraphSweep) + " graphs";
    return {5, "lp_lower_bound", ch.ok, ch.note};
}

CriterionResult path_count_sweeps(std::uint64_t seed) {
    Checker ch;
    for (int i = 0; i < kGraphSweep && ch.ok; ++i) {
        BlowupGraph g = random_valid_graph(mix(seed, 6, i), 10, LRule::Uniform);
        BlowupGraph star = simplify_full(g);
        std::string at = " at sweep index " + std::to_string(i);
        if (!monotone_paths_hold(star))
            ch.fail("path monotonicity fails" + at);
        if (sign(leading_pair_gap(star)) < 0)
            ch.fail("leading pair gap negative" + at);
        for (int k = 1; k <= longest_chain_prefix(star); ++k)
            if (sign(chain_split_margin(star, k)) < 0)
                ch.fail("chain split margin negative for k=" +
                        std::to_string(k) + at);
        BlowupGraph delta = simplify(g);
        if (delta.n_vertices >= 2 &&
            !two_vertex_weight_bound_holds(delta, mix(seed, 60, i)))
            ch.fail("two-vertex weight bound fails" + at);
    }
    if (ch.ok)
        ch.note = "monotonicity, gap, chain margins and the two-vertex weight "
                  "bound hold on " + std::to_string(kGraphSweep) + " graphs";
    return {6, "path_count_sweeps", ch.ok, ch.note};
}

CriterionResult floor_identities(std::uint64_t seed) {
    Checker ch;
    for (int i = 0; i < kTripleSweep && ch.ok; ++i) {
        Rat s0 = make_rat(1 + static_cast<long>(mix(seed, 71, i) % 40),
               1 + static_cast<long>(mix(seed, 72, i) % 6));
        Rat s1 = make_rat(1 + static_cast<long>(mix(seed, 73, i) % 40),
               1 + static_cast<long>(mix(seed, 74, i) % 6));
        long den = 1 + static_cast<long>(mix(seed, 75, i) % 8);
        Rat a = make_rat(static_cast<long>(mix(seed, 76, i) % (den + 1)), den);
        Rat s = s0 + s1;
        Rat lhs1 = (2 * s0 + s1 + 1) * (2 * s0 + s1 + 1) / s;
        Rat rhs1 = 4 * (s0 + 1) + (s1 - 1) * (s1 - 1) / s;
        if (lhs1 != rhs1)
            ch.fail("square split fails at triple " + std::to_string(i));
        Rat lhs2 = (2 * s0 + s1 - a) * (2 * s0 + s1 - a) / s + 4 * (1 + a);
        Rat rhs2 = 4 * (s0 + 1) + (s1 + a) * (s1 + a) / s;
        if (lhs2 != rhs2)
            ch.fail("shifted square split fails at triple " + std::to_string(i));
    }
    if (ch.ok) {
        Rat probe = Rat(15, 2) * Rat(15, 2) / 5 + 6;
        ch.note = "both floor identities exact on " +
                  std::to_string(kTripleSweep) +
                  " triples; probe (15/2)^2/5 + 6 = " + rat_str(probe);
        if (probe != Rat(69, 4)) ch.fail("probe value drifted");
    }
    return {7, "floor_identities", ch.ok, ch.note};
}

// Exact scaled-integer grid sweep at n = 1 (both sides are degree-2
// homogeneous in (n, nu), so n = 1 decides every threshold).  Multiplicities
// are scaled by 20 so the grid is integral; the comparison f <= max is
// scaled by 800k.  For fixed nu1 the greatest grid value of f splits as
// (max over nu_minus of the pair part) - (min over compositions of the
// square sum), so one comparison per nu1 covers every grid point.
CriterionResult surface_quadratic(std::uint64_t seed) {
    Checker dom;
    long worst_slack = -1;
    for (int k = 1; k <= 4 && dom.ok; ++k) {
        for (int s = 0; s <= 40 && dom.ok; ++s) {
            long max_pair = 0;
            for (int w = 0; w <= 40; ++w) {
                long pair = 3200 - 80 * s - 80 * w - 2 * s * s -
                                 2 * w * w + 6 * s * w;
                if (w == 0 || pair > max_pair) max_pair = pair;
            }
            const int rest = 20 * (k + 2) - s;
            long min_square = -1;
            auto consider = [&](long q) {
                if (min_square < 0 || q < min_square) min_square = q;
            };
            if (k == 1) {
                consider(static_cast<long>(rest) * rest);
            } else {
                for (int c1 = 0; c1 <= rest; ++c1)
                    for (int c2 = 0; c1 + c2 <= rest; ++c2) {
                        if (k == 2) {
                            if (c1 + c2 == rest)
                                consider(static_cast<long>(c1) * c1 +
                                         static_cast<long>(c2) * c2);
                            continue;
                        }
                        for (int c3 = 0; c1 + c2 + c3 <= rest; ++c3) {
                            long c4 = rest - c1 - c2 - c3;
                            if (k == 3 && c4 != 0) continue;
                            long q = static_cast<long>(c1) * c1 +
                                          static_cast<long>(c2) * c2 +
                                          static_cast<long>(c3) * c3;
                            if (k == 4) q += c4 * c4;
                            if (k == 3 || k == 4) consider(q);
                        }
                    }
            }
            long lhs = 2L * k * (max_pair - min_square);
            long rhs = 800L * (-k * k + 6 * k - 4) +
                            40L * s * (4 - 8 * k) +
                            static_cast<long>(s) * s * (5 * k - 2);
            Rat lib = surface_quadratic_max(Rat(1), k, make_rat(s, 20));
            if (lib * 800 * k != rhs) {
                dom.fail("scaled ceiling disagrees with the library at k=" +
                         std::to_string(k) + " s=" + std::to_string(s));
            } else if (lhs > rhs) {
                dom.fail("grid point above the ceiling at k=" +
                         std::to_string(k) + " s=" + std::to_string(s));
            } else if (worst_slack < 0 || rhs - lhs < worst_slack) {
                worst_slack = rhs - lhs;
            }
        }
    }
    for (int i = 0; i < 400 && dom.ok; ++i) {
        int k = 1 + static_cast<int>(mix(seed, 81, i) % 4);
        int s = static_cast<int>(mix(seed, 82, i) % 41);
        int w = static_cast<int>(mix(seed, 83, i) % 41);
        int rest = 20 * (k + 2) - s;
        Vec parts;
        long q = 0;
        int left = rest;
        for (int j = 0; j + 1 < k; ++j) {
            int c = static_cast<int>(mix(seed, 84 + j, i) % (left + 1));
            parts.push_back(make_rat(c, 20));
            q += static_cast<long>(c) * c;
            left -= c;
        }
        parts.push_back(make_rat(left, 20));
        q += static_cast<long>(left) * left;
        long pair = 3200 - 80 * s - 80 * w - 2 * s * s - 2 * w * w +
                         6 * s * w;
        Rat f = surface_quadratic_f(Rat(1), make_rat(s, 20), make_rat(w, 20), parts);
        if (f * 400 != Rat(pair - q))
            dom.fail("scaled evaluator disagrees with the exact one at "
                     "sample " + std::to_string(i));
    }

    Checker closed;
    for (int s = 0; s <= 40 && closed.ok; ++s) {
        Rat nu1 = make_rat(s, 20);
        Rat got = surface_quadratic_max(Rat(1), 1, nu1);
        Rat printed = -5 + 2 * nu1;
        if (got != printed)
            closed.fail("k=1 slice maximum at nu1=" + rat_str(nu1) + " is " +
                        rat_str(got) + ", not " + rat_str(printed) +
                        "; the two agree only at nu1=2n");
    }

    bool pass = dom.ok && closed.ok;
    std::string note;
    if (!dom.ok)
        note = dom.note;
    else if (!closed.ok)
        note = "domination holds on the whole step-1/20 grid for k<=4 "
               "(tightest slack " + std::to_string(worst_slack) +
               "/800k); " + closed.note;
    else
        note = "domination and the k=1 closed form both hold";
    return {8, "surface_quadratic", pass, note};
}

CriterionResult square_certificates(std::uint64_t seed) {
    Checker ch;
    for (int m = 1; m <= 8 && ch.ok; ++m) {
        for (int trip = 0; trip < kSquareTripsPerDegree && ch.ok; ++trip) {
            Vec r;
            for (int j = 0; j < m; ++j) {
                long num = static_cast<long>(
                               mix(seed, 91, (m * 1000 + trip) * 16 + j) % 19) -
                           9;
                long den = 1 + static_cast<long>(
                                   mix(seed, 92, (m * 1000 + trip) * 16 + j) % 4);
                r.push_back(make_rat(num, den));
            }
            Vec full(static_cast<std::size_t>(2 * m) + 1, Rat(0));
            full[0] = 1;
            for (int j = 1; j <= m; ++j) full[j] = r[j - 1];
            Vec b(static_cast<std::size_t>(2 * m), Rat(0));
            for (int i = 1; i <= 2 * m; ++i) {
                Rat conv(0);
                for (int j = std::max(0, i - m); j <= std::min(i, m); ++j)
                    conv += full[j] * full[i - j];
                b[i - 1] = conv;
            }
            SquareCertificate cert = truncated_sqrt(b);
            if (!cert.is_square || cert.root != r)
                ch.fail("round trip fails at m=" + std::to_string(m) +
                        " trip=" + std::to_string(trip));
        }
    }
    if (ch.ok) {
        WeightedPoly s1 = WeightedPoly::variable(1, 1);
        if (!(a_poly(1, 2) == Rat(1, 4) * (s1 * s1)))
            ch.fail("first correction polynomial is not s1^2/4");
        WeightedPoly t1 = WeightedPoly::variable(2, 1);
        WeightedPoly t2 = WeightedPoly::variable(2, 2);
        WeightedPoly want =
            Rat(1, 2) * (t1 * t2) - Rat(1, 8) * (t1 * t1 * t1);
        if (!(a_poly(2, 3) == want))
            ch.fail("second correction polynomial deviates");
    }
    for (int m = 1; m <= 4 && ch.ok; ++m) {
        for (int trip = 0; trip < 25 && ch.ok; ++trip) {
            Vec head;
            for (int j = 0; j < m; ++j)
                head.push_back(make_rat(
                    static_cast<long>(mix(seed, 93, m * 100 + trip * 8 + j) %
                                      13) -
                        6,
                    2));
            Vec b(static_cast<std::size_t>(2 * m), Rat(0));
            for (int j = 1; j <= m; ++j) b[j - 1] = head[j - 1];
            for (int i = m + 1; i <= 2 * m; ++i)
                b[i - 1] = a_poly(m, i).evaluate(head);
            if (!truncated_sqrt(b).is_square)
                ch.fail("corrected tail is not certified as a square at m=" +
                        std::to_string(m));
        }
    }
    for (int m = 1; m <= 6 && ch.ok; ++m)
        for (int i = m + 1; i <= 2 * m; ++i)
            if (!a_poly(m, i).is_quasi_homogeneous(i))
                ch.fail("correction polynomial not quasi-homogeneous at (" +
                        std::to_string(m) + "," + std::to_string(i) + ")");
    if (ch.ok)
        ch.note = "1008 round trips, the two printed corrections, the "
                  "substitution oracle and quasi-homogeneity all hold";
    return {9, "square_certificates", ch.ok, ch.note};
}

CriterionResult enumerative_counts() {
    Checker ch;
    if (line_count(4).count != 240) ch.fail("count at M=4 drifted");
    if (line_count(5).count != 3360) ch.fail("count at M=5 drifted");
    for (int M = 3; M <= 10; ++M)
        if (codim_floor(M).minimum != 2 * M - 1)
            ch.fail("binomial floor at M=" + std::to_string(M) +
                    " is not 2M-1");
    RankConditionReport rank = rank_condition_count(6, 3);
    if (rank.conditions != 10 || rank.threshold != 9 || !rank.exceeds)
        ch.fail("rank condition count at (6,3) deviates from (10, 9, true)");
    if (ch.ok) ch.note = "240/3360 lines, binomial floor 2M-1, 10 > 9";
    return {10, "enumerative_counts", ch.ok, ch.note};
}

CriterionResult simplification_sweeps(std::uint64_t seed) {
    Checker ch;
    for (int i = 0; i < kGraphSweep && ch.ok; ++i) {
        BlowupGraph g = random_valid_graph(mix(seed, 11, i), 10, LRule::Uniform);
        BlowupGraph star = simplify_full(g);
        std::string at = " at sweep index " + std::to_string(i);
        if (!vertex_class(star).complex_vertices.empty())
            ch.fail("simplification left a class-3 vertex" + at);
        if (!vertex_class(simplify(g)).complex_vertices.empty())
            ch.fail("restricted simplification left a class-3 vertex" + at);
        if (!retention_holds(g, star))
            ch.fail("chain arrow retention fails" + at);
    }
    if (ch.ok)
        ch.note = "class <= 2 and chain arrow retention on " +
                  std::to_string(kGraphSweep) + " graphs";
    return {11, "simplification_sweeps", ch.ok, ch.note};
}

}  // namespace

std::vector<CriterionResult> run_all(std::uint64_t seed) {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<CriterionResult> out;
    out.push_back(exceptional_inverse());
    out.push_back(elimination_chains());
    out.push_back(restriction_bounds());
    out.push_back(degree_contradictions());
    out.push_back(lp_lower_bound(seed));
    out.push_back(path_count_sweeps(seed));
    out.push_back(floor_identities(seed));
    out.push_back(surface_quadratic(seed));
    out.push_back(square_certificates(seed));
    out.push_back(enumerative_counts());
    out.push_back(simplification_sweeps(seed));

    const bool all = std::all_of(out.begin(), out.end(),
                                 [](const CriterionResult& r) { return r.pass; });
    const auto elapsed = std::chrono::duration_cast<std::chrono::seconds>(
                             std::chrono::steady_clock::now() - t0)
                             .count();
    const bool in_budget = elapsed < 300;
    std::string note = std::to_string(elapsed) + "s elapsed";
    if (!all) {
        int first_fail = 0;
        for (const auto& r : out)
            if (!r.pass) {
                first_fail = r.index;
                break;
            }
        note += "; criterion " + std::to_string(first_fail) + " failed";
    }
    out.push_back({12, "suite_green", all && in_budget, note});
    return out;
}

}  // namespace rigidity::acceptance
