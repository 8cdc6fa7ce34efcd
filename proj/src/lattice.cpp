#include "rigidity/lattice.hpp"

#include <initializer_list>
#include <utility>

#include "rigidity/errors.hpp"

namespace rigidity {

namespace {

Mat make_mat(std::initializer_list<std::initializer_list<int>> rows) {
    Mat m(rows.size(), rows.begin()->size());
    std::size_t r = 0;
    for (const auto& row : rows) {
        std::size_t c = 0;
        for (int x : row) m.at(r, c++) = Rat(x);
        ++r;
    }
    return m;
}

IntersectionLattice make_lattice(Mat gram) {
    IntersectionLattice lat;
    std::size_t dim = gram.rows();
    lat.labels = {"Ct+", "Ct-"};
    for (std::size_t i = 1; i + 2 <= dim; ++i)
        lat.labels.push_back("T" + std::to_string(i));
    lat.form = SymmetricForm(std::move(gram));
    lat.h_pairings.assign(dim, Rat(0));
    lat.h_pairings[0] = Rat(1);
    lat.h_pairings[1] = Rat(1);
    lat.h_self = Rat(2);
    return lat;
}

// Basis coordinates of Ct_sign + shift, sign in {+1, -1}.
Vec shifted_class(const IntersectionLattice& lat, int sgn, const Vec& shift) {
    Vec r(lat.dim(), Rat(0));
    r[sgn > 0 ? 0 : 1] = Rat(1);
    for (int i = 0; i < lat.exceptional_count(); ++i) r[2 + i] = shift[i];
    return r;
}

}  // namespace

SurfaceCase builtin_case(SurfaceCaseName name) {
    Mat gram;
    switch (name) {
        case SurfaceCaseName::A:
            gram = make_mat({{-2, 2, 1}, {2, -2, 1}, {1, 1, -2}});
            break;
        case SurfaceCaseName::B:
            gram = make_mat({{-2, 2, 1, 0},
                             {2, -2, 0, 1},
                             {1, 0, -2, 1},
                             {0, 1, 1, -2}});
            break;
        case SurfaceCaseName::C:
            gram = make_mat({{-2, 2, 1, 0, 0},
                             {2, -2, 0, 1, 0},
                             {1, 0, -2, 0, 1},
                             {0, 1, 0, -2, 1},
                             {0, 0, 1, 1, -2}});
            break;
        case SurfaceCaseName::D:
            gram = make_mat({{-2, 1, 1, 1},
                             {1, -2, 1, 1},
                             {1, 1, -2, 0},
                             {1, 1, 0, -2}});
            break;
        case SurfaceCaseName::E:
            gram = make_mat({{-2, 1, 1, 0, 1},
                             {1, -2, 0, 1, 1},
                             {1, 0, -2, 1, 0},
                             {0, 1, 1, -2, 0},
                             {1, 1, 0, 0, -2}});
            break;
        case SurfaceCaseName::F:
            gram = make_mat({{-2, 0, 1, 1, 1},
                             {0, -2, 1, 1, 1},
                             {1, 1, -2, 0, 0},
                             {1, 1, 0, -2, 0},
                             {1, 1, 0, 0, -2}});
            break;
    }
    return {name, make_lattice(std::move(gram))};
}

SurfaceCaseName case_from_letter(char c) {
    if (c < 'A' || c > 'F') throw ParseError(std::string("unknown case '") + c + "'");
    return static_cast<SurfaceCaseName>(c - 'A');
}

char case_letter(SurfaceCaseName name) {
    return static_cast<char>('A' + static_cast<int>(name));
}

Mat exceptional_gram(const IntersectionLattice& lat) {
    int k = lat.exceptional_count();
    Mat theta(k, k);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) theta.at(r, c) = lat.form.gram().at(2 + r, 2 + c);
    if (!is_negative_definite(theta))
        throw NotNegativeDefinite("exceptional block is not negative definite");
    return theta;
}

InverseSignReport check_inverse_sign(const IntersectionLattice& lat) {
    InverseSignReport rep;
    rep.inverse = mat_inverse(exceptional_gram(lat));
    rep.strictly_negative = true;
    rep.nonpositive = true;
    for (std::size_t r = 0; r < rep.inverse.rows(); ++r) {
        for (std::size_t c = 0; c < rep.inverse.cols(); ++c) {
            int sg = sign(rep.inverse.at(r, c));
            if (sg >= 0) rep.strictly_negative = false;
            if (sg > 0) rep.nonpositive = false;
            if (r == c && sg >= 0) rep.nonpositive = false;
        }
    }
    return rep;
}

Vec orthogonal_shift(const IntersectionLattice& lat, int sgn) {
    int k = lat.exceptional_count();
    int row = sgn > 0 ? 0 : 1;
    Vec c(k);
    for (int i = 0; i < k; ++i) c[i] = lat.form.gram().at(row, 2 + i);
    Vec e = mat_apply(mat_inverse(exceptional_gram(lat)), c);
    for (auto& x : e) x = -x;
    for (const auto& x : e)
        if (sign(x) < 0)
            throw NonpositiveCone("orthogonal shift has a negative coordinate");
    return e;
}

RPairingReport r_pairing(const IntersectionLattice& lat) {
    Vec rp = shifted_class(lat, +1, orthogonal_shift(lat, +1));
    Vec rm = shifted_class(lat, -1, orthogonal_shift(lat, -1));

    Rat sq_p = lat.form.pair(rp, rp);
    Rat sq_m = lat.form.pair(rm, rm);
    if (sq_p != sq_m)
        throw AsymmetricLattice("the two orthogonalized classes have unequal squares");
    if (sign(sq_p) >= 0)
        throw NonNegativeSquare("orthogonalized class has nonnegative square");

    Rat a = -sq_p;
    Rat cross = lat.form.pair(rp, rm);
    if (cross != 1 + a)
        throw AsymmetricLattice("cross pairing is not 1 + a");

    Rat h_p(0), h_m(0);
    for (std::size_t i = 0; i < rp.size(); ++i) {
        h_p += rp[i] * lat.h_pairings[i];
        h_m += rm[i] * lat.h_pairings[i];
    }
    if (h_p != 1 || h_m != 1)
        throw AsymmetricLattice("orthogonalized classes do not meet the hyperplane once");
    if (sq_p + 2 * cross + sq_m != lat.h_self)
        throw AsymmetricLattice("sum of classes does not recover the hyperplane square");

    RPairingReport rep;
    rep.a = a;
    rep.gram2 = Mat(2, 2);
    rep.gram2.at(0, 0) = -a;
    rep.gram2.at(0, 1) = 1 + a;
    rep.gram2.at(1, 0) = 1 + a;
    rep.gram2.at(1, 1) = -a;
    rep.inverse2 = mat_inverse(rep.gram2);
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c)
            if (sign(rep.inverse2.at(r, c)) <= 0)
                throw NonNegativeSquare("2x2 inverse entry not positive");
    return rep;
}

EliminationChain derive_mult_bound(const SurfaceCase& sc) {
    const IntersectionLattice& lat = sc.lattice;
    const int k = lat.exceptional_count();
    const int nv = k + 3;  // nu+, nu-, b_1..b_k, n

    EliminationChain chain;
    chain.var_names = {"nu+", "nu-"};
    for (int i = 1; i <= k; ++i) chain.var_names.push_back("b" + std::to_string(i));
    chain.var_names.push_back("n");

    chain.start.num_vars = nv;
    for (int x = 0; x < k + 2; ++x) {
        LinearRow row;
        row.coeffs.assign(nv, Rat(0));
        row.coeffs[0] = -lat.form.gram().at(0, x);
        row.coeffs[1] = -lat.form.gram().at(1, x);
        for (int i = 0; i < k; ++i) row.coeffs[2 + i] = -lat.form.gram().at(2 + i, x);
        row.coeffs[nv - 1] = 2 * lat.h_pairings[x];
        row.rhs = Rat(0);
        chain.start.rows.push_back(std::move(row));
    }

    // Recorded Fourier-Motzkin: rows keep global ids so descriptions can
    // cite the exact positive combination used.
    std::vector<std::pair<int, LinearRow>> work;
    int next_id = 0;
    for (const auto& row : chain.start.rows) work.emplace_back(next_id++, row);

    std::vector<int> order;
    for (int i = 0; i < k; ++i) order.push_back(2 + i);
    order.push_back(1);

    for (int var : order) {
        std::vector<std::pair<int, LinearRow>> keep, pos, neg;
        for (auto& item : work) {
            int sg = sign(item.second.coeffs[var]);
            if (sg > 0) pos.push_back(std::move(item));
            else if (sg < 0) neg.push_back(std::move(item));
            else keep.push_back(std::move(item));
        }
        for (const auto& [pid, prow] : pos) {
            for (const auto& [qid, qrow] : neg) {
                Rat mp = prow.coeffs[var];
                Rat mq = -qrow.coeffs[var];
                LinearRow combined;
                combined.rel = Relation::GE;
                combined.coeffs.resize(nv);
                for (int c = 0; c < nv; ++c)
                    combined.coeffs[c] = mp * qrow.coeffs[c] + mq * prow.coeffs[c];
                combined.rhs = mp * qrow.rhs + mq * prow.rhs;
                EliminationStep step;
                step.description = "eliminate " + chain.var_names[var] + ": " +
                                   rat_str(mp) + "*(row " + std::to_string(qid) +
                                   ") + " + rat_str(mq) + "*(row " +
                                   std::to_string(pid) + ")";
                step.row = combined;
                chain.steps.push_back(std::move(step));
                keep.emplace_back(next_id++, std::move(combined));
            }
        }
        work = std::move(keep);
    }

    // Tightest surviving bound c n - d nu+ >= 0 with c, d > 0.
    bool have = false;
    Rat best_ratio;
    for (const auto& [id, row] : work) {
        Rat c = row.coeffs[nv - 1];
        Rat d = -row.coeffs[0];
        if (sign(c) <= 0 || sign(d) <= 0) continue;
        bool clean = row.coeffs[1] == 0;
        for (int i = 0; i < k && clean; ++i)
            if (row.coeffs[2 + i] != 0) clean = false;
        if (!clean) continue;
        Rat ratio = c / d;
        if (!have || ratio < best_ratio) {
            have = true;
            best_ratio = ratio;
            chain.final_row = row;
            chain.c = c;
            chain.d = d;
        }
    }
    if (!have)
        throw EliminationFailed("no surviving row bounds nu+ by n");
    return chain;
}

RestrictionReport restriction_system(RestrictionKind kind, int M, const Rat& n) {
    RestrictionReport rep;
    rep.system.num_vars = 2;
    Rat mm(M);

    auto add_row = [&rep](Rat c0, Rat c1, Rat rhs) {
        rep.system.rows.push_back({{std::move(c0), std::move(c1)}, std::move(rhs),
                                   Relation::GE});
    };

    switch (kind) {
        case RestrictionKind::Conic: {
            if (M < 4) throw PreconditionViolated("surface degree at least 4 required");
            add_row(2 * (mm - 3), -2 * (mm - 1), -4 * n);
            add_row(-2 * (mm - 1), 2 * (mm - 3), -4 * n);
            for (int var : {1, 0}) {
                LinearSystem proj = fourier_motzkin(rep.system, var);
                for (const auto& row : proj.rows) {
                    int other = 1 - var;
                    if (sign(row.coeffs[other]) < 0 && row.coeffs[var] == 0) {
                        std::string who = other == 0 ? "nu+" : "nu-";
                        rep.bounds.push_back(
                            {who + " <= n", row.rhs / row.coeffs[other]});
                        break;
                    }
                }
            }
            break;
        }
        case RestrictionKind::Cone: {
            if (M < 4) throw PreconditionViolated("surface degree at least 4 required");
            add_row(-(mm - 1), mm - 2, -2 * n);
            add_row(mm - 2, -(mm - 1), -2 * n);
            // first row at nu+ > n: (M-2) nu- > (M-1) n - 2n
            rep.bounds.push_back({"nu- > (M-3)/(M-2) n given nu+ > n",
                                  ((mm - 1) * n - 2 * n) / (mm - 2)});
            break;
        }
        case RestrictionKind::K3Pencil: {
            add_row(Rat(2), Rat(-3), -2 * n);
            add_row(Rat(-3), Rat(2), -2 * n);
            LinearSystem proj = fourier_motzkin(rep.system, 1);
            for (const auto& row : proj.rows) {
                if (sign(row.coeffs[0]) < 0 && row.coeffs[1] == 0) {
                    rep.bounds.push_back({"nu+ <= 2n", row.rhs / row.coeffs[0]});
                    break;
                }
            }
            break;
        }
    }
    return rep;
}

DegreeContradiction degree_contradiction(int deg, const Rat& b_plus,
                                         const Rat& b_minus, const Rat& budget) {
    DegreeContradiction out;
    out.min_lhs = deg * (b_plus * b_plus + b_minus * b_minus);
    out.contradiction = out.min_lhs >= budget;
    return out;
}

}  // namespace rigidity
