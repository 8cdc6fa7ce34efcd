#include "rigidity/graph.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "rigidity/errors.hpp"

namespace rigidity {

std::vector<int> BlowupGraph::targets_of(int i) const {
    std::vector<int> out;
    for (const auto& [a, b] : arrows)
        if (a == i) out.push_back(b);
    std::sort(out.rbegin(), out.rend());
    return out;
}

std::vector<int> BlowupGraph::sources_of(int j) const {
    std::vector<int> out;
    for (const auto& [a, b] : arrows)
        if (b == j) out.push_back(a);
    std::sort(out.begin(), out.end());
    return out;
}

bool BlowupGraph::has_arrow(int i, int j) const {
    return std::find(arrows.begin(), arrows.end(), std::make_pair(i, j)) != arrows.end();
}

BlowupGraph chain_graph(int n, int point_count) {
    BlowupGraph g;
    g.n_vertices = n;
    g.point_count = point_count < 0 ? n : point_count;
    for (int i = 2; i <= n; ++i) g.arrows.emplace_back(i, i - 1);
    return g;
}

std::vector<std::string> validate_graph(const BlowupGraph& g) {
    std::vector<std::string> bad;
    if (g.n_vertices < 1) bad.push_back("vertex count must be >= 1");
    if (g.point_count < 1 || g.point_count > g.n_vertices)
        bad.push_back("point count L must satisfy 1 <= L <= N");
    if (!bad.empty()) return bad;

    std::set<std::pair<int, int>> seen;
    for (const auto& [i, j] : g.arrows) {
        if (i <= j || j < 1 || i > g.n_vertices) {
            bad.push_back("arrow (" + std::to_string(i) + "," + std::to_string(j) +
                          ") out of range: need N >= i > j >= 1");
            continue;
        }
        if (!seen.insert({i, j}).second)
            bad.push_back("duplicate arrow (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
    if (!bad.empty()) return bad;

    for (int i = 1; i < g.n_vertices; ++i)
        if (!seen.count({i + 1, i}))
            bad.push_back("missing mandatory arrow (" + std::to_string(i + 1) + "," + std::to_string(i) + ")");

    for (const auto& [k, i] : g.arrows)
        for (int j = i + 1; j < k; ++j)
            if (!seen.count({j, i}))
                bad.push_back("ordering closure: (" + std::to_string(k) + "," + std::to_string(i) +
                              ") present but (" + std::to_string(j) + "," + std::to_string(i) + ") absent");

    std::vector<int> outdeg(g.n_vertices + 1, 0);
    for (const auto& [i, j] : g.arrows) {
        (void)j;
        ++outdeg[i];
    }
    for (int i = 1; i <= g.n_vertices; ++i) {
        if (outdeg[i] > 3)
            bad.push_back("vertex " + std::to_string(i) + " has class " + std::to_string(outdeg[i]) + " > 3");
        else if (outdeg[i] == 3 && i > g.point_count)
            bad.push_back("curve vertex " + std::to_string(i) + " has class 3 (allowed only for i <= L)");
    }
    return bad;
}

VertexClassReport vertex_class(const BlowupGraph& g) {
    VertexClassReport report;
    report.eps.assign(g.n_vertices, 0);
    for (const auto& [i, j] : g.arrows) {
        (void)j;
        ++report.eps[i - 1];
    }
    for (int i = 1; i <= g.n_vertices; ++i)
        if (report.eps[i - 1] == 3) report.complex_vertices.push_back(i);
    return report;
}

PathTable path_table(const BlowupGraph& g) {
    const int n = g.n_vertices;
    PathTable p(n + 1, std::vector<Int>(n + 1, 0));
    std::vector<std::vector<int>> targets(n + 1);
    for (const auto& [i, j] : g.arrows) targets[i].push_back(j);
    for (int j = 1; j <= n; ++j) {
        p[j][j] = 1;
        for (int i = j + 1; i <= n; ++i)
            for (int t : targets[i])
                if (t >= j) p[i][j] += p[t][j];
    }
    return p;
}

Int path_count(const BlowupGraph& g, int from, int to) {
    if (from < 1 || from > g.n_vertices || to < 1 || to > g.n_vertices || from < to)
        throw InvalidVertex("path_count: need N >= from >= to >= 1");
    return path_table(g)[from][to];
}

BlowupGraph simplify_full(const BlowupGraph& g) {
    BlowupGraph out = g;
    const VertexClassReport report = vertex_class(g);
    for (int i : report.complex_vertices) {
        const std::vector<int> targets = out.targets_of(i);  // descending
        const int lowest = targets.back();
        std::erase(out.arrows, std::make_pair(i, lowest));
    }
    return out;
}

BlowupGraph simplify(const BlowupGraph& g) {
    BlowupGraph full = simplify_full(g);
    BlowupGraph out;
    out.n_vertices = g.point_count;
    out.point_count = g.point_count;
    for (const auto& [i, j] : full.arrows)
        if (i <= g.point_count) out.arrows.emplace_back(i, j);
    return out;
}

BlowupGraph random_valid_graph(std::uint64_t seed, int n_max, LRule l_rule) {
    std::mt19937_64 rng(seed);
    const int n = n_max <= 2 ? 2 : 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(n_max - 1));
    int point_count = n;
    if (l_rule == LRule::Uniform) point_count = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));

    BlowupGraph g;
    g.n_vertices = n;
    g.point_count = point_count;
    std::set<std::pair<int, int>> arrows;
    for (int i = 2; i <= n; ++i) {
        arrows.insert({i, i - 1});
        // closure-safe extra targets: j < i-1 such that every vertex strictly
        // between already points at j
        std::vector<int> candidates;
        for (int j = 1; j < i - 1; ++j) {
            bool ok = true;
            for (int v = j + 1; v < i && ok; ++v) ok = arrows.count({v, j}) > 0;
            if (ok) candidates.push_back(j);
        }
        const int cap = (i <= point_count ? 3 : 2) - 1;
        int extra = 0;
        while (extra < cap && !candidates.empty() && rng() % 2 == 0) {
            const std::size_t pick = rng() % candidates.size();
            arrows.insert({i, candidates[pick]});
            candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(pick));
            ++extra;
        }
    }
    g.arrows.assign(arrows.begin(), arrows.end());
    return g;
}

}  // namespace rigidity
