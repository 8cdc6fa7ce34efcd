#ifndef RIGIDITY_GRAPH_HPP
#define RIGIDITY_GRAPH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rigidity/rational.hpp"

namespace rigidity {

// Oriented graph of a resolution: vertices 1..N, arrows (i, j) with i > j.
// point_count L splits point blow-ups (i <= L) from curve blow-ups (i > L).
// Invariants (checked by validate, not by the constructor):
//   - (i+1, i) present for all i < N
//   - ordering closure: (k, i) present and i < j < k implies (j, i) present
//   - out-degree <= 3 everywhere, and = 3 only for i <= L
struct BlowupGraph {
    int n_vertices = 0;
    int point_count = 0;
    std::vector<std::pair<int, int>> arrows;

    std::vector<int> targets_of(int i) const;  // descending j with (i, j) present
    std::vector<int> sources_of(int j) const;  // ascending i with (i, j) present
    bool has_arrow(int i, int j) const;
};

BlowupGraph chain_graph(int n, int point_count = -1);  // default L = N

// Every violated invariant, one message each; empty means valid.
std::vector<std::string> validate_graph(const BlowupGraph& g);

struct VertexClassReport {
    std::vector<int> eps;                 // eps[i-1] = out-degree of vertex i
    std::vector<int> complex_vertices;    // { i : eps(i) = 3 }
};

VertexClassReport vertex_class(const BlowupGraph& g);

// p[i][j] (1-based) = number of oriented paths i -> j, p[i][i] = 1.
using PathTable = std::vector<std::vector<Int>>;

PathTable path_table(const BlowupGraph& g);
Int path_count(const BlowupGraph& g, int from, int to);

// Arrow deletion at every vertex of class 3: the arrow to the lowest of its
// three targets goes away. Keeps all N vertices; class drops to <= 2.
BlowupGraph simplify_full(const BlowupGraph& g);

// Same deletion, then restriction to vertices 1..L. Path counts between
// vertices <= L agree with simplify_full since paths never climb upward.
BlowupGraph simplify(const BlowupGraph& g);

enum class LRule { Uniform, FixedAtN };

// Deterministic per seed; output always passes validate_graph.
// Grows vertex by vertex; extra arrow targets are drawn only from the set
// that keeps the ordering closure intact, curve vertices capped at class 2.
BlowupGraph random_valid_graph(std::uint64_t seed, int n_max, LRule l_rule = LRule::Uniform);

}  // namespace rigidity

#endif
