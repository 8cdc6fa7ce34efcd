#include "doctest.h"

#include <sstream>
#include <string>

#include "rigidity/errors.hpp"
#include "rigidity/graph.hpp"
#include "rigidity/io.hpp"
#include "rigidity/multiplicity.hpp"

using namespace rigidity;

namespace {

template <typename Reader>
std::string parse_failure(Reader reader, const std::string& text) {
    std::istringstream in(text);
    try {
        reader(in, "t.in");
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("graph files round trip") {
    BlowupGraph g;
    g.n_vertices = 3;
    g.point_count = 2;
    g.arrows = {{2, 1}, {3, 1}, {3, 2}};
    std::ostringstream out;
    write_graph(out, g);
    std::istringstream in(out.str());
    BlowupGraph back = read_graph(in, "round.g");
    CHECK(back.n_vertices == g.n_vertices);
    CHECK(back.point_count == g.point_count);
    CHECK(back.arrows == g.arrows);
}

TEST_CASE("graph reader accepts comments and blank lines") {
    std::istringstream in("# header\nN 2\n\nL 2\nA 2 1  # mandatory\n");
    BlowupGraph g = read_graph(in, "c.g");
    CHECK(g.n_vertices == 2);
    CHECK(g.arrows == std::vector<std::pair<int, int>>{{2, 1}});
}

TEST_CASE("graph reader reports file and line on malformed input") {
    std::string msg = parse_failure(read_graph, "N 2\nL 2\nA 2\n");
    CHECK(msg.find("t.in:3") == 0);
    CHECK_FALSE(parse_failure(read_graph, "N x\n").empty());
    CHECK_FALSE(parse_failure(read_graph, "L 2\nA 2 1\n").empty());   // N missing
    CHECK_FALSE(parse_failure(read_graph, "N 2\nL 2\nZ 1 2\n").empty());
}

TEST_CASE("valuation files round trip with curve data") {
    ValuationData v = make_threefold_valuation(chain_graph(3, 2),
                                               Vec{Rat(0), Rat(2), Rat(2), Rat(1)},
                                               {{3, Int(2)}}, make_rat(3, 2));
    REQUIRE(validate_valuation(v).empty());
    std::ostringstream out;
    write_valuation(out, v);
    std::istringstream in(out.str());
    ValuationData back = read_valuation(in, "round.v");
    CHECK(back.graph.n_vertices == 3);
    CHECK(back.graph.point_count == 2);
    CHECK(back.nu == v.nu);
    CHECK(back.delta == v.delta);
    CHECK(back.beta == v.beta);
    CHECK(back.n == make_rat(3, 2));
}

TEST_CASE("valuation reader complains about missing pieces") {
    // no THRESH
    CHECK_FALSE(parse_failure(read_valuation,
                              "N 1\nL 1\nNU 1 2\nDELTA 1 2\n").empty());
    // NU for a vertex that does not exist
    CHECK_FALSE(parse_failure(read_valuation,
                              "N 1\nL 1\nNU 2 1\nDELTA 1 2\nTHRESH 1\n").empty());
    // NU missing entirely
    CHECK_FALSE(parse_failure(read_valuation,
                              "N 1\nL 1\nDELTA 1 2\nTHRESH 1\n").empty());
}

TEST_CASE("system files round trip both row kinds") {
    LinearSystem s;
    s.num_vars = 2;
    s.rows.push_back({Vec{Rat(2), Rat(-1)}, Rat(0), Relation::GE});
    s.rows.push_back({Vec{Rat(1), Rat(1)}, make_rat(5, 2), Relation::EQ});
    std::ostringstream out;
    write_system(out, s);
    std::istringstream in(out.str());
    LinearSystem back = read_system(in, "round.s");
    CHECK(back.num_vars == 2);
    REQUIRE(back.rows.size() == 2);
    CHECK(back.rows[0].coeffs == s.rows[0].coeffs);
    CHECK(back.rows[0].rel == Relation::GE);
    CHECK(back.rows[1].rhs == make_rat(5, 2));
    CHECK(back.rows[1].rel == Relation::EQ);
}

TEST_CASE("system reader rejects bad rows") {
    CHECK_FALSE(parse_failure(read_system, "VARS 2\nROW GE 1 | 0\n").empty());
    CHECK_FALSE(parse_failure(read_system, "VARS 2\nROW XX 1 1 | 0\n").empty());
    CHECK_FALSE(parse_failure(read_system, "ROW GE 1 | 0\n").empty());
    CHECK_FALSE(parse_failure(read_system, "VARS 2\nROW GE 1 1 0\n").empty());
}

TEST_CASE("lattice files round trip") {
    LatticeFileData d;
    d.labels = {"Ct+", "Ct-", "T1"};
    d.gram = Mat(3, 3);
    const long g[3][3] = {{-2, 2, 1}, {2, -2, 1}, {1, 1, -2}};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) d.gram.at(r, c) = Rat(g[r][c]);
    d.h_class = Vec{Rat(1), Rat(1), Rat(0), Rat(2)};
    std::ostringstream out;
    write_lattice(out, d);
    std::istringstream in(out.str());
    LatticeFileData back = read_lattice(in, "round.lat");
    CHECK(back.labels == d.labels);
    CHECK(back.gram == d.gram);
    CHECK(back.h_class == d.h_class);
}

TEST_CASE("lattice reader rejects ragged grams") {
    CHECK_FALSE(parse_failure(read_lattice,
                              "BASIS a b\nGRAM -2 1\nGRAM 1\nH 1 1 2\n").empty());
    CHECK_FALSE(parse_failure(read_lattice,
                              "BASIS a b\nGRAM -2 1\nGRAM 1 -2\nH 1 2\n").empty());
    CHECK_FALSE(parse_failure(read_lattice, "GRAM -2\nH 1 2\n").empty());
}
