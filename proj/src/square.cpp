#include "rigidity/square.hpp"

#include <algorithm>

#include "rigidity/errors.hpp"

namespace rigidity {

WeightedPoly WeightedPoly::variable(int num_vars, int j) {
    if (j < 1 || j > num_vars)
        throw DimensionMismatch("variable index out of range");
    WeightedPoly p{num_vars, {}};
    std::vector<int> e(num_vars, 0);
    e[j - 1] = 1;
    p.terms[e] = Rat(1);
    return p;
}

WeightedPoly WeightedPoly::constant(int num_vars, const Rat& c) {
    WeightedPoly p{num_vars, {}};
    if (c != 0) p.terms[std::vector<int>(num_vars, 0)] = c;
    return p;
}

int WeightedPoly::weighted_degree(const std::vector<int>& exponents) {
    int d = 0;
    for (std::size_t idx = 0; idx < exponents.size(); ++idx)
        d += static_cast<int>(idx + 1) * exponents[idx];
    return d;
}

bool WeightedPoly::is_quasi_homogeneous(int d) const {
    for (const auto& [e, c] : terms)
        if (weighted_degree(e) != d) return false;
    return true;
}

Rat WeightedPoly::evaluate(const Vec& point) const {
    if (static_cast<int>(point.size()) != num_vars)
        throw DimensionMismatch("evaluation point length mismatch");
    Rat total(0);
    for (const auto& [e, c] : terms) {
        Rat term = c;
        for (int idx = 0; idx < num_vars; ++idx)
            for (int rep = 0; rep < e[idx]; ++rep) term *= point[idx];
        total += term;
    }
    return total;
}

WeightedPoly operator+(const WeightedPoly& a, const WeightedPoly& b) {
    if (a.num_vars != b.num_vars)
        throw DimensionMismatch("polynomials over different variable counts");
    WeightedPoly out = a;
    for (const auto& [e, c] : b.terms) {
        Rat& slot = out.terms[e];
        slot += c;
        if (slot == 0) out.terms.erase(e);
    }
    return out;
}

WeightedPoly operator-(const WeightedPoly& a, const WeightedPoly& b) {
    return a + Rat(-1) * b;
}

WeightedPoly operator*(const WeightedPoly& a, const WeightedPoly& b) {
    if (a.num_vars != b.num_vars)
        throw DimensionMismatch("polynomials over different variable counts");
    WeightedPoly out = WeightedPoly::zero(a.num_vars);
    for (const auto& [ea, ca] : a.terms) {
        for (const auto& [eb, cb] : b.terms) {
            std::vector<int> e(a.num_vars);
            for (int i = 0; i < a.num_vars; ++i) e[i] = ea[i] + eb[i];
            Rat& slot = out.terms[e];
            slot += ca * cb;
            if (slot == 0) out.terms.erase(e);
        }
    }
    return out;
}

WeightedPoly operator*(const Rat& c, const WeightedPoly& a) {
    WeightedPoly out = WeightedPoly::zero(a.num_vars);
    if (c == 0) return out;
    for (const auto& [e, coeff] : a.terms) out.terms[e] = c * coeff;
    return out;
}

bool operator==(const WeightedPoly& a, const WeightedPoly& b) {
    return a.num_vars == b.num_vars && a.terms == b.terms;
}

std::string poly_to_string(const WeightedPoly& p) {
    if (p.is_zero()) return "0";

    std::vector<std::pair<std::vector<int>, Rat>> mono(p.terms.begin(),
                                                       p.terms.end());
    std::stable_sort(mono.begin(), mono.end(),
                     [](const auto& x, const auto& y) {
                         return WeightedPoly::weighted_degree(x.first) <
                                WeightedPoly::weighted_degree(y.first);
                     });

    std::string out;
    for (const auto& [e, c] : mono) {
        Rat mag = abs(c);
        if (out.empty()) {
            if (sign(c) < 0) out += "-";
        } else {
            out += sign(c) < 0 ? " - " : " + ";
        }
        std::string vars;
        for (std::size_t idx = 0; idx < e.size(); ++idx) {
            if (e[idx] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += "s" + std::to_string(idx + 1);
            if (e[idx] > 1) vars += "^" + std::to_string(e[idx]);
        }
        if (vars.empty()) {
            out += rat_str(mag);
        } else {
            if (mag != 1) out += rat_str(mag) + "*";
            out += vars;
        }
    }
    return out;
}

SquareCertificate truncated_sqrt(const Vec& b) {
    if (b.empty() || b.size() % 2 != 0)
        throw DimensionMismatch("coefficient list must have even positive length");
    const int m = static_cast<int>(b.size()) / 2;

    SquareCertificate cert;
    cert.b = b;
    cert.root.assign(m, Rat(0));
    auto r = [&cert](int j) { return cert.root[j - 1]; };
    auto bi = [&b](int i) { return b[i - 1]; };

    for (int i = 1; i <= m; ++i) {
        Rat conv(0);
        for (int j = 1; j < i; ++j) conv += r(j) * r(i - j);
        cert.root[i - 1] = (bi(i) - conv) / 2;
    }

    cert.is_square = true;
    for (int i = m + 1; i <= 2 * m; ++i) {
        Rat conv(0);
        for (int j = i - m; j <= m; ++j) conv += r(j) * r(i - j);
        if (conv != bi(i)) {
            cert.is_square = false;
            cert.failure_index = i;
            break;
        }
    }
    return cert;
}

WeightedPoly a_poly(int m, int i) {
    if (m < 1) throw PreconditionViolated("need at least one coefficient");
    if (i <= m || i > 2 * m)
        throw PreconditionViolated("defined for indices m+1..2m only");

    // Symbolic run of the same recursion: r_1..r_m as polynomials in s_1..s_m.
    std::vector<WeightedPoly> r(m + 1, WeightedPoly::zero(m));
    for (int t = 1; t <= m; ++t) {
        WeightedPoly conv = WeightedPoly::zero(m);
        for (int j = 1; j < t; ++j) conv = conv + r[j] * r[t - j];
        r[t] = Rat(1, 2) * (WeightedPoly::variable(m, t) - conv);
    }

    WeightedPoly out = WeightedPoly::zero(m);
    for (int j = i - m; j <= m; ++j) out = out + r[j] * r[i - j];
    return out;
}

LineCountReport line_count(int M) {
    if (M < 2) throw PreconditionViolated("hypersurface degree at least 2 required");
    LineCountReport rep;
    rep.count = 2;
    for (int j = M; j <= 2 * M - 2; ++j) rep.count *= j;
    for (int d = M; d <= 2 * (M - 1); ++d) rep.degrees.push_back(d);
    return rep;
}

CodimFloorReport codim_floor(int M) {
    if (M < 2) throw PreconditionViolated("hypersurface degree at least 2 required");
    CodimFloorReport rep;
    bool first = true;
    for (int j = M; j <= 2 * M - 2; ++j) {
        Int c;
        mpz_bin_uiui(c.get_mpz_t(), 2 * M - 1, j);
        if (first || c < rep.minimum) rep.minimum = c;
        first = false;
    }
    rep.equals_linear_floor = rep.minimum == 2 * M - 1;
    return rep;
}

RankConditionReport rank_condition_count(int M, int target_rank) {
    int k = M + 1 - target_rank;
    if (k < 0) throw PreconditionViolated("target rank above the row count");
    RankConditionReport rep;
    rep.conditions = Int(k) * (k + 1) / 2;
    rep.threshold = 2 * M - 3;
    rep.exceeds = rep.conditions > rep.threshold;
    return rep;
}

}  // namespace rigidity
