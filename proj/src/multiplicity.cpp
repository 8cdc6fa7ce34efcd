#include "rigidity/multiplicity.hpp"

#include <algorithm>

#include "rigidity/errors.hpp"

namespace rigidity {

namespace {

Rat int_to_rat(const Int& v) { return Rat(v); }

// True iff no arrow skips a vertex inside [lo, hi], i.e. the induced
// subgraph on lo..hi has consecutive arrows only.
bool is_chain_segment(const BlowupGraph& g, int lo, int hi) {
    for (const auto& [i, j] : g.arrows)
        if (j >= lo && i <= hi && i > j + 1) return false;
    return true;
}

}  // namespace

ValuationData make_threefold_valuation(BlowupGraph graph, Vec nu,
                                       std::map<int, Int> beta, Rat n) {
    ValuationData v;
    int N = graph.n_vertices;
    int L = graph.point_count;
    v.graph = std::move(graph);
    v.nu = std::move(nu);
    v.beta = std::move(beta);
    v.n = std::move(n);
    v.delta.assign(N + 1, 0);
    for (int i = 1; i <= N; ++i) v.delta[i] = i <= L ? 2 : 1;
    return v;
}

std::vector<std::string> validate_valuation(const ValuationData& v) {
    std::vector<std::string> bad;
    int N = v.graph.n_vertices;
    int L = v.graph.point_count;
    if (static_cast<int>(v.nu.size()) != N + 1)
        bad.push_back("nu must have one entry per vertex");
    if (static_cast<int>(v.delta.size()) != N + 1)
        bad.push_back("delta must have one entry per vertex");
    if (!bad.empty()) return bad;
    for (int i = 1; i <= N; ++i) {
        if (sign(v.nu[i]) < 0) bad.push_back("nu_" + std::to_string(i) + " is negative");
        if (v.delta[i] < 0) bad.push_back("delta_" + std::to_string(i) + " is negative");
    }
    if (sign(v.n) <= 0) bad.push_back("threshold n must be positive");
    for (const auto& [i, b] : v.beta) {
        if (i <= L || i > N)
            bad.push_back("beta defined at " + std::to_string(i) + ", outside the curve range");
        if (b <= 0) bad.push_back("beta_" + std::to_string(i) + " must be positive");
    }
    for (int i = L + 1; i <= N; ++i)
        if (!v.beta.count(i)) bad.push_back("beta missing for curve vertex " + std::to_string(i));
    return bad;
}

bool check_compatible(const WeightFunction& a, const BlowupGraph& g) {
    int range = a.size();
    if (range != g.point_count)
        throw LengthMismatch("weight function covers " + std::to_string(range) +
                             " vertices, graph has " + std::to_string(g.point_count) +
                             " point vertices");
    for (int i = 1; i <= range; ++i) {
        Rat incoming(0);
        for (int j : g.sources_of(i))
            if (j <= range) incoming += a.a[j];
        if (a.a[i] < incoming) return false;
    }
    return true;
}

bool BoundCertificate::all_satisfied() const {
    return std::all_of(side_conditions.begin(), side_conditions.end(),
                       [](const SideCondition& c) { return c.satisfied; });
}

Rat nf_excess(const ValuationData& v, ExcessMode mode) {
    const int N = v.graph.n_vertices;
    PathTable p = path_table(v.graph);
    Rat lhs(0), weight(0);
    for (int i = 1; i <= N; ++i) {
        Rat pi = int_to_rat(p[N][i]);
        lhs += pi * v.nu[i];
        weight += pi * v.delta[i];
    }
    if (mode == ExcessMode::Log) weight += 1;
    return lhs - v.n * weight;
}

Rat counting_bound(const ValuationData& v, const WeightFunction& a) {
    const int L = v.graph.point_count;
    const int N = v.graph.n_vertices;
    if (!check_compatible(a, simplify(v.graph)))
        throw IncompatibleWeights("weights are not compatible with the simplified graph");
    Rat total(0);
    for (int i = 1; i <= L; ++i) total += a.a[i] * v.nu[i] * v.nu[i];
    Rat curve_part(0);
    for (int i = L + 1; i <= N; ++i)
        curve_part += int_to_rat(v.beta.at(i)) * v.nu[i] * v.nu[i];
    return total + a.a[L] * curve_part;
}

Rat quadratic_min_bound(const Vec& p, const Rat& Delta, const Rat& n) {
    Rat q(0);
    for (const auto& pi : p) q += pi * pi;
    return Delta * Delta * n * n / q;
}

std::optional<int> minimal_noncanonical_index(const ValuationData& v) {
    const int N = v.graph.n_vertices;
    PathTable p = path_table(v.graph);
    for (int e = 1; e <= N; ++e) {
        Rat total(0);
        for (int i = 1; i <= e; ++i)
            total += int_to_rat(p[e][i]) * (v.nu[i] - v.delta[i] * v.n);
        if (sign(total) > 0) return e;
    }
    return std::nullopt;
}

DeficitReport normalized_deficit(const ValuationData& v, int noncanonical_index) {
    const int Np = noncanonical_index;
    PathTable p = path_table(v.graph);
    Rat sum(0);
    for (int i = 1; i < Np; ++i)
        sum += int_to_rat(p[Np][i]) * (v.delta[i] * v.n - v.nu[i]);
    DeficitReport r;
    r.a = sum / v.n;
    r.in_unit_range = sign(r.a) >= 0 && r.a <= 1;
    r.forces_full_growth = false;
    if (r.a == 1) {
        bool all_full = true;
        for (int i = 1; i <= Np; ++i)
            if (v.nu[i] != 2 * v.n) { all_full = false; break; }
        r.forces_full_growth = all_full;
    }
    return r;
}

BoundCertificate multiplicity_sum_floor(const ValuationData& v) {
    const int N = v.graph.n_vertices;
    const int L = v.graph.point_count;
    BoundCertificate cert;
    cert.kind = BoundKind::SumFloor;

    auto require = [&cert](const std::string& what, const Rat& value, bool ok) {
        cert.side_conditions.push_back({what, value, ok});
        if (!ok) throw HypothesisViolated(what);
    };

    Rat worst_margin = 2 * v.n - v.nu[1];
    for (int i = 2; i <= N; ++i) {
        Rat here = 2 * v.n - v.nu[i];
        if (here < worst_margin) worst_margin = here;
    }
    require("every multiplicity at most twice the threshold", worst_margin,
            sign(worst_margin) >= 0);

    auto np = minimal_noncanonical_index(v);
    require("some prefix is non-canonical", Rat(np ? *np : 0), np.has_value());
    const int Np = *np;

    require("segment from L-1 to the non-canonical index is a chain", Rat(Np),
            is_chain_segment(v.graph, std::max(1, L - 1), Np));

    DeficitReport deficit = normalized_deficit(v, Np);
    require("accumulated deficit lies in [0, 1]", deficit.a, deficit.in_unit_range);

    BlowupGraph star = simplify_full(v.graph);
    PathTable ps = path_table(star);

    Rat sum_low(0);  // sum of p*_{Li} over point vertices
    for (int i = 1; i <= L; ++i) sum_low += int_to_rat(ps[L][i]);

    if (deficit.a == 1) {
        require("unit deficit forces all multiplicities to twice the threshold",
                deficit.a, deficit.forces_full_growth);
        cert.branch = "unit-deficit";
        cert.value = 4 * v.n * v.n * (sum_low + 1);
        return cert;
    }

    Rat n2 = v.n * v.n;
    if (Np == N) {
        Rat sigma0(0), sigma1(0);
        for (int i = 1; i <= N; ++i) {
            if (v.delta[i] == 2) sigma0 += int_to_rat(ps[N][i]);
            else if (v.delta[i] == 1) sigma1 += int_to_rat(ps[N][i]);
        }
        require("path-count sums are positive", sigma0 + sigma1, sign(sigma0 + sigma1) > 0);
        cert.branch = "top-vertex";
        cert.value = 4 * (sigma0 + 1) * n2 + (sigma1 - 1) * (sigma1 - 1) * n2 / (sigma0 + sigma1);
        return cert;
    }

    Rat sigma0 = sum_low;
    Rat sigma1(0);
    for (int i = L + 1; i <= Np - 1; ++i) sigma1 += int_to_rat(ps[Np][i]);
    require("path-count sums are positive", sigma0 + sigma1, sign(sigma0 + sigma1) > 0);
    cert.branch = "interior-vertex";
    cert.value = 4 * (sigma0 + 1) * n2 +
                 (sigma1 + deficit.a) * (sigma1 + deficit.a) * n2 / (sigma0 + sigma1);
    return cert;
}

bool eight_n2_combiner(const Rat& p1, const Rat& sigma0, const Rat& m1,
                       const Rat& m2, const Rat& n) {
    if (m2 > m1) throw PreconditionViolated("m2 <= m1 required");
    if (sigma0 < 2 * p1) throw PreconditionViolated("Sigma0 >= 2 p1 required");
    if (m1 + m2 > 8 * n * n) throw PreconditionViolated("m1 + m2 <= 8 n^2 required");
    return p1 * m1 + (sigma0 - p1) * m2 <= 4 * n * n * sigma0;
}

}  // namespace rigidity
