#include "rigidity/lattice.hpp"

#include <string>
#include <vector>

#include "doctest.h"
#include "rigidity/errors.hpp"
#include "rigidity/matrix.hpp"
#include "rigidity/rational.hpp"

using namespace rigidity;

namespace {

Mat mat_of(const std::vector<std::vector<Rat>>& rows) {
    Mat m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = rows[r][c];
    return m;
}

// Lattice with the standard labels and hyperplane data over a custom gram.
IntersectionLattice custom_lattice(Mat gram) {
    IntersectionLattice lat;
    lat.labels = {"Ct+", "Ct-"};
    for (std::size_t i = 1; i + 2 <= gram.rows(); ++i)
        lat.labels.push_back("T" + std::to_string(i));
    lat.form = SymmetricForm(std::move(gram));
    lat.h_pairings.assign(lat.form.dim(), Rat(0));
    lat.h_pairings[0] = Rat(1);
    lat.h_pairings[1] = Rat(1);
    lat.h_self = Rat(2);
    return lat;
}

const SurfaceCaseName kAllCases[] = {SurfaceCaseName::A, SurfaceCaseName::B,
                                     SurfaceCaseName::C, SurfaceCaseName::D,
                                     SurfaceCaseName::E, SurfaceCaseName::F};

}  // namespace

TEST_CASE("case letters round trip") {
    for (SurfaceCaseName name : kAllCases)
        CHECK(case_from_letter(case_letter(name)) == name);
    CHECK(case_from_letter('A') == SurfaceCaseName::A);
    CHECK(case_from_letter('F') == SurfaceCaseName::F);
    CHECK_THROWS_AS(case_from_letter('G'), ParseError);
    CHECK_THROWS_AS(case_from_letter('a'), ParseError);
}

TEST_CASE("built-in lattices carry the expected shape") {
    SurfaceCase a = builtin_case(SurfaceCaseName::A);
    CHECK(a.lattice.labels ==
          std::vector<std::string>{"Ct+", "Ct-", "T1"});
    CHECK(a.lattice.dim() == 3);
    CHECK(a.lattice.exceptional_count() == 1);
    CHECK(a.lattice.form.gram() == mat_of({{Rat(-2), Rat(2), Rat(1)},
                                           {Rat(2), Rat(-2), Rat(1)},
                                           {Rat(1), Rat(1), Rat(-2)}}));
    CHECK(a.lattice.h_pairings == Vec{Rat(1), Rat(1), Rat(0)});
    CHECK(a.lattice.h_self == 2);

    // Dimensions 3, 4, 5, 4, 5, 5; every gram is symmetric by construction
    // (the form constructor rejects anything else) and pairs each curve
    // component once with the hyperplane class.
    const int dims[] = {3, 4, 5, 4, 5, 5};
    for (int i = 0; i < 6; ++i) {
        SurfaceCase sc = builtin_case(kAllCases[i]);
        CHECK(sc.lattice.dim() == dims[i]);
        CHECK(sc.lattice.labels.size() == static_cast<std::size_t>(dims[i]));
        CHECK(sc.lattice.h_pairings[0] == 1);
        CHECK(sc.lattice.h_pairings[1] == 1);
        CHECK(sc.lattice.h_self == 2);
    }

    // Spot entries distinguishing the tables.
    CHECK(builtin_case(SurfaceCaseName::C).lattice.form.gram().at(2, 4) == 1);
    CHECK(builtin_case(SurfaceCaseName::D).lattice.form.gram().at(2, 3) == 0);
    CHECK(builtin_case(SurfaceCaseName::E).lattice.form.gram().at(0, 4) == 1);
    CHECK(builtin_case(SurfaceCaseName::F).lattice.form.gram().at(0, 1) == 0);
}

TEST_CASE("exceptional blocks of the built-in cases") {
    CHECK(exceptional_gram(builtin_case(SurfaceCaseName::A).lattice) ==
          mat_of({{Rat(-2)}}));
    CHECK(exceptional_gram(builtin_case(SurfaceCaseName::B).lattice) ==
          mat_of({{Rat(-2), Rat(1)}, {Rat(1), Rat(-2)}}));
    CHECK(exceptional_gram(builtin_case(SurfaceCaseName::C).lattice) ==
          mat_of({{Rat(-2), Rat(0), Rat(1)},
                  {Rat(0), Rat(-2), Rat(1)},
                  {Rat(1), Rat(1), Rat(-2)}}));
    CHECK(exceptional_gram(builtin_case(SurfaceCaseName::D).lattice) ==
          mat_of({{Rat(-2), Rat(0)}, {Rat(0), Rat(-2)}}));
    CHECK(exceptional_gram(builtin_case(SurfaceCaseName::E).lattice) ==
          mat_of({{Rat(-2), Rat(1), Rat(0)},
                  {Rat(1), Rat(-2), Rat(0)},
                  {Rat(0), Rat(0), Rat(-2)}}));
    CHECK(exceptional_gram(builtin_case(SurfaceCaseName::F).lattice) ==
          mat_of({{Rat(-2), Rat(0), Rat(0)},
                  {Rat(0), Rat(-2), Rat(0)},
                  {Rat(0), Rat(0), Rat(-2)}}));
}

TEST_CASE("exceptional block must be negative definite") {
    IntersectionLattice bad = custom_lattice(mat_of({{Rat(-2), Rat(2), Rat(1)},
                                                     {Rat(2), Rat(-2), Rat(1)},
                                                     {Rat(1), Rat(1), Rat(2)}}));
    CHECK_THROWS_AS(exceptional_gram(bad), NotNegativeDefinite);
}

TEST_CASE("inverse sign split between connected and split blocks") {
    InverseSignReport a = check_inverse_sign(builtin_case(SurfaceCaseName::A).lattice);
    CHECK(a.inverse == mat_of({{make_rat(-1, 2)}}));
    CHECK(a.strictly_negative);
    CHECK(a.nonpositive);

    InverseSignReport b = check_inverse_sign(builtin_case(SurfaceCaseName::B).lattice);
    CHECK(b.inverse == mat_of({{make_rat(-2, 3), make_rat(-1, 3)},
                               {make_rat(-1, 3), make_rat(-2, 3)}}));
    CHECK(b.strictly_negative);

    InverseSignReport c = check_inverse_sign(builtin_case(SurfaceCaseName::C).lattice);
    CHECK(c.inverse == mat_of({{make_rat(-3, 4), make_rat(-1, 4), make_rat(-1, 2)},
                               {make_rat(-1, 4), make_rat(-3, 4), make_rat(-1, 2)},
                               {make_rat(-1, 2), make_rat(-1, 2), Rat(-1)}}));
    CHECK(c.strictly_negative);

    // D, E, F have zero off-diagonal entries, so only the weak sign holds.
    InverseSignReport d = check_inverse_sign(builtin_case(SurfaceCaseName::D).lattice);
    CHECK(d.inverse == mat_of({{make_rat(-1, 2), Rat(0)}, {Rat(0), make_rat(-1, 2)}}));
    CHECK_FALSE(d.strictly_negative);
    CHECK(d.nonpositive);

    InverseSignReport e = check_inverse_sign(builtin_case(SurfaceCaseName::E).lattice);
    CHECK(e.inverse == mat_of({{make_rat(-2, 3), make_rat(-1, 3), Rat(0)},
                               {make_rat(-1, 3), make_rat(-2, 3), Rat(0)},
                               {Rat(0), Rat(0), make_rat(-1, 2)}}));
    CHECK_FALSE(e.strictly_negative);
    CHECK(e.nonpositive);

    InverseSignReport f = check_inverse_sign(builtin_case(SurfaceCaseName::F).lattice);
    CHECK_FALSE(f.strictly_negative);
    CHECK(f.nonpositive);
}

TEST_CASE("orthogonal shifts of the built-in cases") {
    auto shift = [](SurfaceCaseName name, int sgn) {
        return orthogonal_shift(builtin_case(name).lattice, sgn);
    };
    CHECK(shift(SurfaceCaseName::A, +1) == Vec{make_rat(1, 2)});
    CHECK(shift(SurfaceCaseName::A, -1) == Vec{make_rat(1, 2)});
    CHECK(shift(SurfaceCaseName::B, +1) == Vec{make_rat(2, 3), make_rat(1, 3)});
    CHECK(shift(SurfaceCaseName::B, -1) == Vec{make_rat(1, 3), make_rat(2, 3)});
    CHECK(shift(SurfaceCaseName::C, +1) ==
          Vec{make_rat(3, 4), make_rat(1, 4), make_rat(1, 2)});
    CHECK(shift(SurfaceCaseName::C, -1) ==
          Vec{make_rat(1, 4), make_rat(3, 4), make_rat(1, 2)});
    CHECK(shift(SurfaceCaseName::D, +1) == Vec{make_rat(1, 2), make_rat(1, 2)});
    CHECK(shift(SurfaceCaseName::D, -1) == Vec{make_rat(1, 2), make_rat(1, 2)});
    CHECK(shift(SurfaceCaseName::E, +1) ==
          Vec{make_rat(2, 3), make_rat(1, 3), make_rat(1, 2)});
    CHECK(shift(SurfaceCaseName::E, -1) ==
          Vec{make_rat(1, 3), make_rat(2, 3), make_rat(1, 2)});
    CHECK(shift(SurfaceCaseName::F, +1) ==
          Vec{make_rat(1, 2), make_rat(1, 2), make_rat(1, 2)});
    CHECK(shift(SurfaceCaseName::F, -1) ==
          Vec{make_rat(1, 2), make_rat(1, 2), make_rat(1, 2)});
}

TEST_CASE("orthogonal shift rejects a negative coordinate") {
    IntersectionLattice bad =
        custom_lattice(mat_of({{Rat(-2), Rat(2), Rat(1), Rat(-1)},
                               {Rat(2), Rat(-2), Rat(1), Rat(1)},
                               {Rat(1), Rat(1), Rat(-2), Rat(0)},
                               {Rat(-1), Rat(1), Rat(0), Rat(-2)}}));
    CHECK_THROWS_AS(orthogonal_shift(bad, +1), NonpositiveCone);
}

TEST_CASE("r pairing values across the six cases") {
    const Rat expected_a[] = {make_rat(3, 2), make_rat(4, 3), make_rat(5, 4),
                              Rat(1),         make_rat(5, 6), make_rat(1, 2)};
    for (int i = 0; i < 6; ++i) {
        RPairingReport rep = r_pairing(builtin_case(kAllCases[i]).lattice);
        const Rat& a = expected_a[i];
        CHECK(rep.a == a);
        CHECK(rep.gram2.at(0, 0) == -a);
        CHECK(rep.gram2.at(0, 1) == 1 + a);
        CHECK(rep.gram2.at(1, 0) == 1 + a);
        CHECK(rep.gram2.at(1, 1) == -a);
        CHECK(rep.inverse2.at(0, 0) == a / (1 + 2 * a));
        CHECK(rep.inverse2.at(0, 1) == (1 + a) / (1 + 2 * a));
        CHECK(mat_mul(rep.gram2, rep.inverse2) == Mat::identity(2));
    }
    RPairingReport a_rep = r_pairing(builtin_case(SurfaceCaseName::A).lattice);
    CHECK(a_rep.inverse2 == mat_of({{make_rat(3, 8), make_rat(5, 8)},
                                    {make_rat(5, 8), make_rat(3, 8)}}));
}

TEST_CASE("r pairing detects broken lattices") {
    // Unequal squares of the two curve components.
    CHECK_THROWS_AS(r_pairing(custom_lattice(mat_of({{Rat(-2), Rat(2), Rat(1)},
                                                     {Rat(2), Rat(-3), Rat(1)},
                                                     {Rat(1), Rat(1), Rat(-2)}}))),
                    AsymmetricLattice);
    // Zero square after orthogonalization.
    CHECK_THROWS_AS(r_pairing(custom_lattice(mat_of({{Rat(0), Rat(2), Rat(0)},
                                                     {Rat(2), Rat(0), Rat(0)},
                                                     {Rat(0), Rat(0), Rat(-2)}}))),
                    NonNegativeSquare);
    // Cross pairing out of step with the common square.
    CHECK_THROWS_AS(r_pairing(custom_lattice(mat_of({{Rat(-2), Rat(1), Rat(0)},
                                                     {Rat(1), Rat(-2), Rat(0)},
                                                     {Rat(0), Rat(0), Rat(-2)}}))),
                    AsymmetricLattice);
    // Hyperplane pairings off.
    IntersectionLattice skew = builtin_case(SurfaceCaseName::A).lattice;
    skew.h_pairings[1] = Rat(2);
    CHECK_THROWS_AS(r_pairing(skew), AsymmetricLattice);
    // Hyperplane self-intersection off.
    IntersectionLattice wrong_h = builtin_case(SurfaceCaseName::A).lattice;
    wrong_h.h_self = Rat(3);
    CHECK_THROWS_AS(r_pairing(wrong_h), AsymmetricLattice);
}

TEST_CASE("elimination chain of the one-exceptional case, step by step") {
    EliminationChain chain = derive_mult_bound(builtin_case(SurfaceCaseName::A));
    CHECK(chain.var_names ==
          std::vector<std::string>{"nu+", "nu-", "b1", "n"});
    REQUIRE(chain.start.rows.size() == 3);
    CHECK(chain.start.rows[0].coeffs == Vec{Rat(2), Rat(-2), Rat(-1), Rat(2)});
    CHECK(chain.start.rows[1].coeffs == Vec{Rat(-2), Rat(2), Rat(-1), Rat(2)});
    CHECK(chain.start.rows[2].coeffs == Vec{Rat(-1), Rat(-1), Rat(2), Rat(0)});
    for (const auto& row : chain.start.rows) CHECK(row.rhs == 0);

    REQUIRE(chain.steps.size() == 3);
    CHECK(chain.steps[0].description == "eliminate b1: 2*(row 0) + 1*(row 2)");
    CHECK(chain.steps[0].row.coeffs == Vec{Rat(3), Rat(-5), Rat(0), Rat(4)});
    CHECK(chain.steps[1].description == "eliminate b1: 2*(row 1) + 1*(row 2)");
    CHECK(chain.steps[1].row.coeffs == Vec{Rat(-5), Rat(3), Rat(0), Rat(4)});
    CHECK(chain.steps[2].description == "eliminate nu-: 3*(row 3) + 5*(row 4)");
    CHECK(chain.steps[2].row.coeffs == Vec{Rat(-16), Rat(0), Rat(0), Rat(32)});

    CHECK(chain.final_row.coeffs == chain.steps[2].row.coeffs);
    CHECK(chain.c == 32);
    CHECK(chain.d == 16);
}

TEST_CASE("every case bounds the first multiplicity by twice the threshold") {
    for (SurfaceCaseName name : kAllCases) {
        EliminationChain chain = derive_mult_bound(builtin_case(name));
        CHECK(sign(chain.c) > 0);
        CHECK(sign(chain.d) > 0);
        CHECK(chain.c / chain.d == 2);
        CHECK(chain.final_row.coeffs.front() == -chain.d);
        CHECK(chain.final_row.coeffs.back() == chain.c);
        CHECK(chain.final_row.rhs == 0);
        for (std::size_t i = 1; i + 1 < chain.final_row.coeffs.size(); ++i)
            CHECK(chain.final_row.coeffs[i] == 0);
        CHECK(chain.var_names.front() == "nu+");
        CHECK(chain.var_names.back() == "n");
    }
    CHECK(derive_mult_bound(builtin_case(SurfaceCaseName::C)).c == 448);
    CHECK(derive_mult_bound(builtin_case(SurfaceCaseName::C)).d == 224);
    CHECK(derive_mult_bound(builtin_case(SurfaceCaseName::D)).c == 96);
    CHECK(derive_mult_bound(builtin_case(SurfaceCaseName::D)).d == 48);
}

TEST_CASE("the derived bound is attained with every row tight") {
    // nu+ = nu- = 2, all b_i = 2, n = 1 pairs to zero against the whole
    // basis, so the ratio 2 cannot be improved.
    for (SurfaceCaseName name : kAllCases) {
        EliminationChain chain = derive_mult_bound(builtin_case(name));
        Vec w(chain.start.num_vars, Rat(2));
        w.back() = Rat(1);
        CHECK(satisfies(chain.start, w));
        for (const auto& row : chain.start.rows) {
            Rat dot(0);
            for (std::size_t i = 0; i < w.size(); ++i)
                dot += row.coeffs[i] * w[i];
            CHECK(dot == row.rhs);
        }
    }
}

TEST_CASE("conic restriction pins both multiplicities") {
    RestrictionReport rep = restriction_system(RestrictionKind::Conic, 4, Rat(1));
    REQUIRE(rep.system.rows.size() == 2);
    CHECK(rep.system.rows[0].coeffs == Vec{Rat(2), Rat(-6)});
    CHECK(rep.system.rows[0].rhs == -4);
    CHECK(rep.system.rows[1].coeffs == Vec{Rat(-6), Rat(2)});
    CHECK(rep.system.rows[1].rhs == -4);
    REQUIRE(rep.bounds.size() == 2);
    CHECK(rep.bounds[0].description == "nu+ <= n");
    CHECK(rep.bounds[0].value == 1);
    CHECK(rep.bounds[1].description == "nu- <= n");
    CHECK(rep.bounds[1].value == 1);

    RestrictionReport high =
        restriction_system(RestrictionKind::Conic, 7, make_rat(2, 3));
    CHECK(high.bounds[0].value == make_rat(2, 3));
    CHECK(high.bounds[1].value == make_rat(2, 3));

    CHECK_THROWS_AS(restriction_system(RestrictionKind::Conic, 3, Rat(1)),
                    PreconditionViolated);
}

TEST_CASE("cone restriction leaves a conditional lower bound") {
    RestrictionReport rep = restriction_system(RestrictionKind::Cone, 5, Rat(1));
    REQUIRE(rep.system.rows.size() == 2);
    CHECK(rep.system.rows[0].coeffs == Vec{Rat(-4), Rat(3)});
    CHECK(rep.system.rows[0].rhs == -2);
    CHECK(rep.system.rows[1].coeffs == Vec{Rat(3), Rat(-4)});
    CHECK(rep.system.rows[1].rhs == -2);
    REQUIRE(rep.bounds.size() == 1);
    CHECK(rep.bounds[0].description == "nu- > (M-3)/(M-2) n given nu+ > n");
    CHECK(rep.bounds[0].value == make_rat(2, 3));

    CHECK(restriction_system(RestrictionKind::Cone, 4, Rat(1)).bounds[0].value ==
          make_rat(1, 2));
    CHECK_THROWS_AS(restriction_system(RestrictionKind::Cone, 3, Rat(1)),
                    PreconditionViolated);
}

TEST_CASE("k3 pencil restriction bounds nu+ by twice the threshold") {
    RestrictionReport rep =
        restriction_system(RestrictionKind::K3Pencil, 4, Rat(1));
    REQUIRE(rep.system.rows.size() == 2);
    CHECK(rep.system.rows[0].coeffs == Vec{Rat(2), Rat(-3)});
    CHECK(rep.system.rows[0].rhs == -2);
    CHECK(rep.system.rows[1].coeffs == Vec{Rat(-3), Rat(2)});
    CHECK(rep.system.rows[1].rhs == -2);
    REQUIRE(rep.bounds.size() == 1);
    CHECK(rep.bounds[0].description == "nu+ <= 2n");
    CHECK(rep.bounds[0].value == 2);
    CHECK(restriction_system(RestrictionKind::K3Pencil, 4, make_rat(5, 2))
              .bounds[0].value == 5);

    // The projection that produces the bound, spelled out.
    LinearSystem proj = fourier_motzkin(rep.system, 1);
    bool found = false;
    for (const auto& row : proj.rows)
        if (row.coeffs == Vec{Rat(-5), Rat(0)} && row.rhs == -10) found = true;
    CHECK(found);
}

TEST_CASE("degree floor flags impossible multiplicity pairs") {
    DegreeContradiction high = degree_contradiction(7, Rat(1), make_rat(1, 2), Rat(8));
    CHECK(high.min_lhs == make_rat(35, 4));
    CHECK(high.contradiction);

    DegreeContradiction mid = degree_contradiction(6, Rat(1), make_rat(2, 3), Rat(8));
    CHECK(mid.min_lhs == make_rat(26, 3));
    CHECK(mid.contradiction);

    DegreeContradiction low = degree_contradiction(1, Rat(1), Rat(0), Rat(8));
    CHECK(low.min_lhs == 1);
    CHECK_FALSE(low.contradiction);

    DegreeContradiction edge = degree_contradiction(2, Rat(2), Rat(0), Rat(8));
    CHECK(edge.min_lhs == 8);
    CHECK(edge.contradiction);
}
