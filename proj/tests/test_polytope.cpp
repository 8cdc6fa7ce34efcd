#include "rigidity/polytope.hpp"

#include "doctest.h"
#include "rigidity/errors.hpp"
#include "rigidity/graph.hpp"
#include "rigidity/lp.hpp"
#include "rigidity/rational.hpp"

using namespace rigidity;

namespace {

BlowupGraph graph_of(int n, int l, std::vector<std::pair<int, int>> arrows) {
    BlowupGraph g;
    g.n_vertices = n;
    g.point_count = l;
    g.arrows = std::move(arrows);
    REQUIRE(validate_graph(g).empty());
    return g;
}

// Triangle: vertex 3 hits both lower vertices.
BlowupGraph branched3() { return graph_of(3, 3, {{2, 1}, {3, 1}, {3, 2}}); }

// Complete graph on four vertices; vertex 4 has class 3.
BlowupGraph complete4() {
    return graph_of(4, 4, {{2, 1}, {3, 1}, {3, 2}, {4, 1}, {4, 2}, {4, 3}});
}

// Four-vertex graph whose top vertex has two targets, so the truncation
// search has a second candidate level.
BlowupGraph double_target4() {
    return graph_of(4, 4, {{2, 1}, {3, 2}, {4, 3}, {4, 2}});
}

int longest_chain_prefix(const BlowupGraph& g) {
    int best = g.n_vertices;
    for (const auto& [i, j] : g.arrows)
        if (i > j + 1) best = std::min(best, i - 1);
    return best;
}

}  // namespace

TEST_CASE("noether-fano system of a two-vertex chain") {
    LinearSystem s = build_nf_system(chain_graph(2), Rat(1));
    REQUIRE(s.num_vars == 2);
    REQUIRE(s.rows.size() == 3);
    CHECK(s.rows[0].coeffs == Vec{Rat(1), Rat(1)});
    CHECK(s.rows[0].rhs == 2);
    CHECK(s.rows[1].coeffs == Vec{Rat(2), Rat(-1)});
    CHECK(s.rows[1].rhs == 0);
    CHECK(s.rows[2].coeffs == Vec{Rat(0), Rat(1)});
    CHECK(s.rows[2].rhs == 0);
    for (const auto& row : s.rows) CHECK(row.rel == Relation::GE);
}

TEST_CASE("noether-fano system of a five-vertex chain") {
    LinearSystem s = build_nf_system(chain_graph(5), Rat(2));
    REQUIRE(s.num_vars == 5);
    REQUIRE(s.rows.size() == 6);
    CHECK(s.rows[0].coeffs == Vec(5, Rat(1)));
    CHECK(s.rows[0].rhs == 10);
    // nu_i >= nu_{i+1} for the three interior vertices, in vertex order.
    CHECK(s.rows[1].coeffs == Vec{Rat(0), Rat(1), Rat(-1), Rat(0), Rat(0)});
    CHECK(s.rows[2].coeffs == Vec{Rat(0), Rat(0), Rat(1), Rat(-1), Rat(0)});
    CHECK(s.rows[3].coeffs == Vec{Rat(0), Rat(0), Rat(0), Rat(1), Rat(-1)});
    CHECK(s.rows[4].coeffs == Vec{Rat(2), Rat(-1), Rat(0), Rat(0), Rat(0)});
    CHECK(s.rows[5].coeffs == Vec{Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)});
    for (int r = 1; r <= 5; ++r) CHECK(s.rows[r].rhs == 0);
}

TEST_CASE("noether-fano system of the triangle") {
    LinearSystem s = build_nf_system(branched3(), Rat(1));
    REQUIRE(s.num_vars == 3);
    REQUIRE(s.rows.size() == 4);
    CHECK(s.rows[0].coeffs == Vec{Rat(2), Rat(1), Rat(1)});
    CHECK(s.rows[0].rhs == 3);
    CHECK(s.rows[1].coeffs == Vec{Rat(0), Rat(1), Rat(-1)});
    CHECK(s.rows[2].coeffs == Vec{Rat(2), Rat(-1), Rat(-1)});
    CHECK(s.rows[3].coeffs == Vec{Rat(0), Rat(0), Rat(1)});
}

TEST_CASE("leading pair minimum matches the closed form on small graphs") {
    LeadingPairReport two = leading_pair_check(chain_graph(2), Rat(1));
    CHECK(two.lp_value == make_rat(8, 3));
    CHECK(two.closed_form == make_rat(8, 3));
    CHECK(two.passes);

    LeadingPairReport five = leading_pair_check(chain_graph(5), Rat(1));
    CHECK(five.lp_value == make_rat(20, 9));
    CHECK(five.closed_form == make_rat(20, 9));
    CHECK(five.passes);

    LeadingPairReport tri = leading_pair_check(branched3(), Rat(1));
    CHECK(tri.lp_value == make_rat(9, 4));
    CHECK(tri.closed_form == make_rat(9, 4));
    CHECK(tri.passes);
}

TEST_CASE("leading pair check scales linearly in the threshold") {
    LeadingPairReport r = leading_pair_check(chain_graph(2), make_rat(3, 2));
    CHECK(r.lp_value == 4);
    CHECK(r.closed_form == 4);
    CHECK(r.passes);  // 4 >= 2m = 3
}

TEST_CASE("leading pair value agrees with a direct solve") {
    BlowupGraph g = chain_graph(5);
    LinearSystem s = build_nf_system(g, Rat(1));
    Vec obj{Rat(2), Rat(1), Rat(0), Rat(0), Rat(0)};
    LPResult lp = minimize(s, obj);
    CHECK(lp.value == leading_pair_check(g, Rat(1)).lp_value);
    CHECK(satisfies(s, lp.witness));
}

TEST_CASE("truncation search range is empty below three vertices") {
    CHECK(truncate_nf_level(chain_graph(1), Rat(1), Vec{Rat(0), Rat(1)})
              .status == TruncationOutcome::Status::RangeEmpty);
    CHECK(truncate_nf_level(chain_graph(2), Rat(1),
                            Vec{Rat(0), Rat(1), Rat(1)})
              .status == TruncationOutcome::Status::RangeEmpty);
}

TEST_CASE("truncation search finds the level below the top") {
    // theta is per-vertex, slot 0 unused.
    Vec theta{Rat(0), Rat(2), Rat(1), Rat(0)};
    TruncationOutcome out = truncate_nf_level(chain_graph(3), Rat(1), theta);
    REQUIRE(out.status == TruncationOutcome::Status::Found);
    CHECK(out.level == 2);
    CHECK(out.lhs == 3);  // 2 + 1 along the two-vertex truncation
    CHECK(out.rhs == 2);
}

TEST_CASE("truncation search reports the last tried pair when nothing holds") {
    Vec zero(4, Rat(0));
    TruncationOutcome out = truncate_nf_level(chain_graph(3), Rat(1), zero);
    REQUIRE(out.status == TruncationOutcome::Status::NotFound);
    CHECK(out.lhs == 0);
    CHECK(out.rhs == 2);
}

TEST_CASE("truncation search falls through to the second candidate") {
    BlowupGraph g = double_target4();
    Vec theta{Rat(0), Rat(2), Rat(1), Rat(0), Rat(0)};
    // Level 3 gives 3 > 3 (false), level 2 gives 3 > 2.
    TruncationOutcome out = truncate_nf_level(g, Rat(1), theta);
    REQUIRE(out.status == TruncationOutcome::Status::Found);
    CHECK(out.level == 2);
    CHECK(out.lhs == 3);
    CHECK(out.rhs == 2);

    Vec flat{Rat(0), Rat(1), Rat(1), Rat(0), Rat(0)};
    TruncationOutcome miss = truncate_nf_level(g, Rat(1), flat);
    REQUIRE(miss.status == TruncationOutcome::Status::NotFound);
    CHECK(miss.lhs == 2);
    CHECK(miss.rhs == 2);
}

TEST_CASE("truncation search can stop at the first candidate") {
    Vec theta{Rat(0), Rat(2), Rat(1), Rat(1), Rat(0)};
    TruncationOutcome out =
        truncate_nf_level(double_target4(), Rat(1), theta);
    REQUIRE(out.status == TruncationOutcome::Status::Found);
    CHECK(out.level == 3);
    CHECK(out.lhs == 4);  // paths (1,1,1) against weights (2,1,1)
    CHECK(out.rhs == 3);
}

TEST_CASE("leading pair gap on pinned graphs") {
    CHECK(leading_pair_gap(chain_graph(1)) == 0);
    CHECK(leading_pair_gap(chain_graph(2)) == 1);
    CHECK(leading_pair_gap(chain_graph(3)) == 1);
    CHECK(leading_pair_gap(branched3()) == 1);
    // p = (4, 2, 1, 1): 6*5 - 16 - 2*6.
    CHECK(leading_pair_gap(complete4()) == 2);
}

TEST_CASE("chain split margin on pinned graphs") {
    CHECK(chain_split_margin(chain_graph(3), 2) == 1);
    CHECK(chain_split_margin(chain_graph(1), 1) == 0);
    CHECK(chain_split_margin(chain_graph(4), 1) == 0);
    CHECK(chain_split_margin(chain_graph(4), 2) == 2);
    CHECK(chain_split_margin(chain_graph(4), 4) == 0);
    CHECK(chain_split_margin(branched3(), 2) == 0);
}

TEST_CASE("chain split margin rejects non-chain prefixes") {
    CHECK_THROWS_AS(chain_split_margin(branched3(), 3), ChainViolated);
    CHECK_THROWS_AS(chain_split_margin(chain_graph(4), 0), ChainViolated);
    CHECK_THROWS_AS(chain_split_margin(chain_graph(4), 5), ChainViolated);
    CHECK_THROWS_AS(chain_split_quadratic_ok(branched3(), 3), ChainViolated);
}

TEST_CASE("chain split quadratic condition") {
    CHECK(chain_split_quadratic_ok(chain_graph(3), 2));
    CHECK(chain_split_quadratic_ok(chain_graph(4), 1));  // margin exactly 0
    CHECK(chain_split_quadratic_ok(branched3(), 2));

    // Complete graph, k = 1: p = (4, 2, 1, 1) gives margin
    // 4*5 - 22 = -2, so some parameter value breaks the quadratic.
    CHECK(chain_split_margin(complete4(), 1) == -2);
    CHECK_FALSE(chain_split_quadratic_ok(complete4(), 1));
}

TEST_CASE("chain split quadratic coefficients tie to the margin") {
    // Coefficients spelled out for the three-chain with k = 2:
    // low = 2, total = 3, q = 3 gives 4a^2 - 4a + 4.
    Rat qa(4), qb(-4), qc(4);
    CHECK(4 * qa * qc - qb * qb == 16 * 3 * chain_split_margin(chain_graph(3), 2));
    for (Rat a = -5; a <= 1; a += make_rat(1, 4))
        CHECK(qa * a * a + qb * a + qc > 0);

    // Complete graph, k = 1: low = 4, total = 8, q = 22 gives
    // 16a^2 + 16a - 7, negative at a = 1/4.
    Rat wa(16), wb(16), wc(-7);
    CHECK(4 * wa * wc - wb * wb ==
          16 * 22 * chain_split_margin(complete4(), 1));
    Rat at_quarter = wa * make_rat(1, 16) + wb * make_rat(1, 4) + wc;
    CHECK(at_quarter == -2);
}

TEST_CASE("gap and margins are nonnegative after class reduction") {
    for (int i = 0; i < 200; ++i) {
        BlowupGraph star =
            simplify_full(random_valid_graph(90000 + i, 8, LRule::Uniform));
        CHECK(sign(leading_pair_gap(star)) >= 0);
        int kmax = longest_chain_prefix(star);
        for (int k = 1; k <= kmax; ++k) {
            CHECK(sign(chain_split_margin(star, k)) >= 0);
            CHECK(chain_split_quadratic_ok(star, k));
        }
    }
}

TEST_CASE("surface quadratic spot values") {
    CHECK(surface_quadratic_f(Rat(1), Rat(2), Rat(2), Vec{Rat(2)}) == -4);
    CHECK(surface_quadratic_f(Rat(1), Rat(0), Rat(0), Vec{}) == 8);
    CHECK(surface_quadratic_f(Rat(1), Rat(1), Rat(1), Vec{Rat(1), Rat(1)}) ==
          0);
    CHECK(surface_quadratic_f(Rat(1), Rat(1), Rat(0), Vec{}) == 2);
}

TEST_CASE("surface quadratic slice maximum spot values") {
    CHECK(surface_quadratic_max(Rat(1), 1, Rat(1)) == make_rat(-3, 2));
    CHECK(surface_quadratic_max(Rat(1), 2, Rat(1)) == -2);
    CHECK(surface_quadratic_max(Rat(1), 1, Rat(0)) == 1);
    CHECK(surface_quadratic_max(Rat(1), 1, Rat(2)) == -1);
}

TEST_CASE("surface quadratic maximum is attained at the stationary point") {
    struct Probe {
        Rat n;
        int k;
        Rat nu1;
    };
    const Probe probes[] = {{Rat(1), 1, Rat(1)},
                            {Rat(1), 2, Rat(1)},
                            {Rat(2), 3, Rat(1)},
                            {Rat(1), 1, Rat(2)},
                            {make_rat(3, 2), 2, make_rat(1, 2)}};
    for (const auto& p : probes) {
        Rat rest_val = ((p.k + 2) * p.n - p.nu1) / p.k;
        Rat nu_minus = (3 * p.nu1 - 2 * p.n) / 2;
        Vec rest(p.k, rest_val);
        CHECK(surface_quadratic_f(p.n, p.nu1, nu_minus, rest) ==
              surface_quadratic_max(p.n, p.k, p.nu1));
    }
}

TEST_CASE("surface quadratic maximum dominates the affine slice") {
    const Rat n(1);
    const Rat step = make_rat(1, 2);
    for (int k = 1; k <= 2; ++k) {
        for (Rat nu1 = 0; nu1 <= 2 * n; nu1 += step) {
            Rat budget = (k + 2) * n - nu1;
            Rat bound = surface_quadratic_max(n, k, nu1);
            for (Rat t = 0; t <= budget; t += step) {
                Vec rest = k == 1 ? Vec{budget} : Vec{t, budget - t};
                for (Rat nm = -2; nm <= 2; nm += step)
                    CHECK(surface_quadratic_f(n, nu1, nm, rest) <= bound);
                if (k == 1) break;  // single split, t plays no role
            }
        }
    }
}

TEST_CASE("surface quadratic maximum rejects bad arguments") {
    CHECK_THROWS_AS(surface_quadratic_max(Rat(1), 0, Rat(1)),
                    PreconditionViolated);
    CHECK_THROWS_AS(surface_quadratic_max(Rat(1), 1, make_rat(-1, 2)),
                    PreconditionViolated);
    CHECK_THROWS_AS(surface_quadratic_max(Rat(1), 1, Rat(3)),
                    PreconditionViolated);
}
