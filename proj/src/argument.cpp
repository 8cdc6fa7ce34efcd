#include "rigidity/argument.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "rigidity/errors.hpp"

namespace rigidity {

namespace {

Rat int_to_rat(const Int& v) { return Rat(v); }

void add_step(ArgumentTrace& t, std::string description, Rat value, bool ok) {
    t.steps.push_back({std::move(description), std::move(value), ok});
}

bool all_ok(const ArgumentTrace& t) {
    return std::all_of(t.steps.begin(), t.steps.end(),
                       [](const ArgumentStep& s) { return s.satisfied; });
}

}  // namespace

void write_trace(std::ostream& out, const ArgumentTrace& t) {
    int k = 1;
    for (const auto& s : t.steps)
        out << "STEP " << k++ << ' ' << s.description << " value="
            << rat_str(s.value) << (s.satisfied ? " OK" : " FAIL") << '\n';
    out << "CONCLUSION " << t.conclusion_text
        << (t.conclusion_holds ? " HOLDS" : " FAILS") << '\n';
}

std::string trace_to_string(const ArgumentTrace& t) {
    std::ostringstream os;
    write_trace(os, t);
    return os.str();
}

ArgumentTrace run_composition_argument(const ValuationData& v, int k,
                                       const Rat& b, const Rat& degZ1) {
    const BlowupGraph& g = v.graph;
    const int L = g.point_count;
    if (k < 2 || k > L)
        throw PreconditionViolated("chain prefix length must lie in 2..L");

    ArgumentTrace t;
    t.conclusion_text = "fixed curve component exceeds the residual budget";

    Rat n2 = v.n * v.n;
    add_step(t, "assumed fixed part is present", b, b >= 1);
    add_step(t, "assumed residual degree matches the budget split",
             degZ1 - (8 * n2 - 2 * b), degZ1 == 8 * n2 - 2 * b);
    add_step(t, "assumed residual degree is nonnegative", degZ1, sign(degZ1) >= 0);

    bool chain = true;
    for (const auto& [i, j] : g.arrows)
        if (i <= k && i > j + 1) chain = false;
    add_step(t, "first " + std::to_string(k) + " centers form a chain", Rat(k),
             chain);

    Rat margin = 2 * v.n - v.nu[1];
    for (int i = 2; i <= g.n_vertices; ++i) {
        Rat here = 2 * v.n - v.nu[i];
        if (here < margin) margin = here;
    }
    add_step(t, "every multiplicity at most twice the threshold", margin,
             sign(margin) >= 0);

    BlowupGraph star = simplify_full(g);
    PathTable ps = path_table(star);
    bool prefix_equal = true;
    for (int i = 2; i <= k - 1; ++i)
        if (ps[L][i] != ps[L][1]) prefix_equal = false;
    add_step(t, "leading path counts agree along the curve prefix",
             int_to_rat(ps[L][1]), prefix_equal);

    Rat tail(0);
    for (int i = k + 1; i <= L; ++i) tail += int_to_rat(ps[L][i]);
    add_step(t, "leading path count within one of the off-curve total",
             tail + 1 - int_to_rat(ps[L][1]), int_to_rat(ps[L][1]) <= tail + 1);

    Rat sum_star(0);
    for (int i = 1; i <= L; ++i) sum_star += int_to_rat(ps[L][i]);

    bool floor_ok = false;
    Rat floor_value(0);
    try {
        BoundCertificate cert = multiplicity_sum_floor(v);
        floor_ok = true;
        floor_value = cert.value;
    } catch (const HypothesisViolated&) {
    }
    add_step(t, "counting floor for the weighted multiplicity sum", floor_value,
             floor_ok);

    Rat gap = floor_value - 4 * n2 * sum_star;
    add_step(t, "floor forces the fixed part beyond the residual budget", gap,
             floor_ok && gap >= 4 * n2);

    t.conclusion_holds = all_ok(t);
    return t;
}

ArgumentTrace run_budget_skeleton(const BlowupGraph& g, const Rat& n,
                                  const Rat& m1, const Rat& m2) {
    const int N = g.n_vertices;
    const int L = g.point_count;

    ArgumentTrace t;
    t.conclusion_text = "joint multiplicity budget is contradicted";

    add_step(t, "a curve vertex exists above the point block", Rat(N - L),
             L < N);

    int stray = 0;
    for (int j : g.sources_of(1))
        if (j > L) ++stray;
    add_step(t, "every arrow into vertex 1 starts at a point vertex",
             Rat(stray), stray == 0);

    bool skip = L >= 2 && L + 1 <= N && g.has_arrow(L + 1, L - 1);
    add_step(t, "first curve vertex does not reach below the point block",
             Rat(skip ? 1 : 0), !skip);

    PathTable p = path_table(g);
    Rat sigma0(0), sigma1(0);
    for (int i = 1; i <= N; ++i)
        (i <= L ? sigma0 : sigma1) += int_to_rat(p[N][i]);
    Rat p1 = int_to_rat(p[N][1]);
    add_step(t, "point-block path total", sigma0, true);
    add_step(t, "curve-block path total", sigma1, true);
    add_step(t, "paths reaching vertex 1", p1, true);

    add_step(t, "point-block total at least twice the vertex-1 count",
             sigma0 - 2 * p1, sigma0 >= 2 * p1);
    add_step(t, "second assumed multiplicity bounded by the first", m1 - m2,
             m2 <= m1);

    Rat twoS = 2 * sigma0 + sigma1;
    Rat gap = twoS * twoS - 4 * sigma0 * (sigma0 + sigma1);
    add_step(t, "square gap of the path totals is strict", gap, sign(gap) > 0);

    if (sign(sigma0 + sigma1) > 0)
        add_step(t, "quadratic ceiling of the weighted sum",
                 twoS * twoS * n * n / (sigma0 + sigma1), true);
    else
        add_step(t, "quadratic ceiling of the weighted sum", Rat(0), false);

    Rat used = p1 * m1 + (sigma0 - p1) * m2;
    add_step(t, "weighted two-point sum exceeds the block budget",
             used - 4 * n * n * sigma0, used > 4 * n * n * sigma0);

    t.conclusion_holds = all_ok(t);
    return t;
}

}  // namespace rigidity
