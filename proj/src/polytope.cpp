#include "rigidity/polytope.hpp"

#include "rigidity/errors.hpp"

namespace rigidity {

namespace {

Rat int_to_rat(const Int& v) { return Rat(v); }

// True iff vertices 1..k have no incoming arrow that skips a level.
bool prefix_is_chain(const BlowupGraph& g, int k) {
    for (const auto& [i, j] : g.arrows)
        if (i <= k && i > j + 1) return false;
    return true;
}

}  // namespace

LinearSystem build_nf_system(const BlowupGraph& g, const Rat& m) {
    const int N = g.n_vertices;
    PathTable p = path_table(g);

    LinearSystem s;
    s.num_vars = N;

    LinearRow nf;
    nf.coeffs.assign(N, Rat(0));
    Rat tail(0);
    for (int i = 1; i <= N; ++i) {
        nf.coeffs[i - 1] = int_to_rat(p[N][i]);
        if (i >= 2) tail += int_to_rat(p[N][i]);
    }
    nf.rhs = m * (tail + 1);
    s.rows.push_back(std::move(nf));

    for (int i = 2; i <= N; ++i) {
        auto in = g.sources_of(i);
        if (in.empty()) continue;
        LinearRow row;
        row.coeffs.assign(N, Rat(0));
        row.coeffs[i - 1] = Rat(1);
        for (int j : in) row.coeffs[j - 1] -= 1;
        row.rhs = Rat(0);
        s.rows.push_back(std::move(row));
    }

    LinearRow first;
    first.coeffs.assign(N, Rat(0));
    first.coeffs[0] = Rat(2);
    for (int j : g.sources_of(1)) first.coeffs[j - 1] -= 1;
    first.rhs = Rat(0);
    s.rows.push_back(std::move(first));

    LinearRow last;
    last.coeffs.assign(N, Rat(0));
    last.coeffs[N - 1] = Rat(1);
    last.rhs = Rat(0);
    s.rows.push_back(std::move(last));

    return s;
}

LeadingPairReport leading_pair_check(const BlowupGraph& g, const Rat& m) {
    const int N = g.n_vertices;
    PathTable p = path_table(g);

    Vec objective(N, Rat(0));
    objective[0] = Rat(2);
    if (N >= 2) objective[1] = Rat(1);

    LPResult lp = minimize(build_nf_system(g, m), objective);

    Rat p1 = int_to_rat(p[N][1]);
    Rat p2 = N >= 2 ? int_to_rat(p[N][2]) : Rat(0);
    Rat tail(0), q = p1 * p1 / 2;
    for (int i = 2; i <= N; ++i) {
        Rat pi = int_to_rat(p[N][i]);
        tail += pi;
        q += pi * pi;
    }
    Rat theta = (tail + 1) * m / q;

    LeadingPairReport r;
    r.lp_value = lp.value;
    r.closed_form = (p1 + p2) * theta;
    r.passes = r.lp_value >= 2 * m;
    return r;
}

TruncationOutcome truncate_nf_level(const BlowupGraph& g, const Rat& m,
                                    const Vec& theta) {
    const int N = g.n_vertices;
    TruncationOutcome out;
    out.status = TruncationOutcome::Status::RangeEmpty;
    if (N <= 2) return out;

    std::vector<int> candidates{N - 1};
    auto targets = g.targets_of(N);  // descending
    if (targets.size() >= 2 && targets[1] >= 2 && targets[1] != N - 1)
        candidates.push_back(targets[1]);

    PathTable p = path_table(g);
    out.status = TruncationOutcome::Status::NotFound;
    for (int K : candidates) {
        Rat lhs(0), count(0);
        for (int i = 1; i <= K; ++i) {
            lhs += int_to_rat(p[K][i]) * theta[i];
            if (i >= 2) count += int_to_rat(p[K][i]);
        }
        Rat rhs = m * (count + 1);
        out.lhs = lhs;
        out.rhs = rhs;
        if (lhs > rhs) {
            out.status = TruncationOutcome::Status::Found;
            out.level = K;
            return out;
        }
    }
    return out;
}

Rat leading_pair_gap(const BlowupGraph& g) {
    const int N = g.n_vertices;
    PathTable p = path_table(g);
    Rat p1 = int_to_rat(p[N][1]);
    Rat p2 = N >= 2 ? int_to_rat(p[N][2]) : Rat(0);
    Rat tail(0), tail_sq(0);
    for (int i = 2; i <= N; ++i) {
        Rat pi = int_to_rat(p[N][i]);
        tail += pi;
        tail_sq += pi * pi;
    }
    return (p1 + p2) * (tail + 1) - p1 * p1 - 2 * tail_sq;
}

Rat chain_split_margin(const BlowupGraph& g, int k) {
    const int N = g.n_vertices;
    if (k < 1 || k > N) throw ChainViolated("prefix length out of range");
    if (!prefix_is_chain(g, k))
        throw ChainViolated("vertices 1.." + std::to_string(k) +
                            " are not a chain segment");
    PathTable p = path_table(g);
    Rat low(0), high(0), q(0);
    for (int i = 1; i <= N; ++i) {
        Rat pi = int_to_rat(p[N][i]);
        (i <= k ? low : high) += pi;
        q += pi * pi;
    }
    return low * (high + 1) - q;
}

bool chain_split_quadratic_ok(const BlowupGraph& g, int k) {
    const int N = g.n_vertices;
    if (k < 1 || k > N) throw ChainViolated("prefix length out of range");
    if (!prefix_is_chain(g, k))
        throw ChainViolated("vertices 1.." + std::to_string(k) +
                            " are not a chain segment");
    PathTable p = path_table(g);
    Rat low(0), total(0), q(0);
    for (int i = 1; i <= N; ++i) {
        Rat pi = int_to_rat(p[N][i]);
        if (i <= k) low += pi;
        total += pi;
        q += pi * pi;
    }
    Rat qa = low * low;
    Rat qb = 2 * (2 * q - low * (total + 1));
    Rat qc = (total + 1) * (total + 1) - 4 * q;
    // discriminant condition: qb^2 - 4 qa qc <= 0
    return sign(qa) > 0 && qb * qb <= 4 * qa * qc;
}

Rat surface_quadratic_f(const Rat& n, const Rat& nu1, const Rat& nu_minus,
                        const Vec& rest) {
    Rat f = 8 * n * n - 4 * n * nu1 - 4 * n * nu_minus - 2 * nu1 * nu1 -
            2 * nu_minus * nu_minus + 6 * nu1 * nu_minus;
    for (const auto& v : rest) f -= v * v;
    return f;
}

Rat surface_quadratic_max(const Rat& n, int k, const Rat& nu1) {
    if (k < 1) throw PreconditionViolated("at least one trailing multiplicity");
    if (sign(nu1) < 0 || nu1 > 2 * n)
        throw PreconditionViolated("leading multiplicity outside [0, 2n]");
    Rat kk(k);
    return ((-kk * kk + 6 * kk - 4) * n * n + (4 - 8 * kk) * n * nu1 +
            (5 * kk - 2) / 2 * nu1 * nu1) /
           kk;
}

}  // namespace rigidity
