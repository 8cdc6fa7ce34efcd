// Command-line front end.  Every subcommand prints exact rationals; the
// --decimal flag only appends approximations, it never changes a verdict.
// Exit codes: 0 all checks pass, 1 some check fails, 2 malformed input.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "acceptance.hpp"
#include "rigidity/argument.hpp"
#include "rigidity/errors.hpp"
#include "rigidity/graph.hpp"
#include "rigidity/io.hpp"
#include "rigidity/lattice.hpp"
#include "rigidity/lp.hpp"
#include "rigidity/matrix.hpp"
#include "rigidity/multiplicity.hpp"
#include "rigidity/polytope.hpp"
#include "rigidity/rational.hpp"
#include "rigidity/square.hpp"

namespace {

using namespace rigidity;

constexpr const char* kToolId = "rigidity-kit 1.0.0";

struct Options {
    bool decimal = false;
    std::string format = "text";  // "text" or "json-lines"
    std::uint64_t seed = 1729;
};

/// Input that parsed but cannot be used (bad flag value, unusable file
/// contents).  Reported on stderr and mapped to exit code 2.
struct BadInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rat flag_rat(const std::string& text, const std::string& flag) {
    auto r = parse_rat(text);
    if (!r) throw BadInput(flag + ": not a rational: '" + text + "'");
    return *r;
}

/// Uniform check reporting.  Text mode prints a commented header once,
/// then one "CHECK <name> <verdict> ..." line per check; json-lines mode
/// prints one object per check with the same fields.
class Reporter {
public:
    Reporter(const Options& opt, std::string case_id)
        : opt_(opt), case_id_(std::move(case_id)) {}

    void check(const std::string& name, const std::string& verdict,
               const std::optional<Rat>& value = std::nullopt,
               const std::string& note = "") {
        if (verdict == "FAIL") any_fail_ = true;
        if (opt_.format == "json-lines") {
            nlohmann::json j;
            j["tool"] = kToolId;
            j["case"] = case_id_;
            j["check"] = name;
            j["verdict"] = verdict;
            if (value) {
                j["value"] = rat_str(*value);
                if (opt_.decimal) j["decimal"] = rat_decimal(*value);
            }
            if (!note.empty()) j["note"] = note;
            std::cout << j.dump() << "\n";
            return;
        }
        header();
        std::cout << "CHECK " << name << ' ' << verdict;
        if (value) std::cout << " value=" << value_text(*value);
        if (!note.empty()) std::cout << " note=" << note;
        std::cout << "\n";
    }

    void pass(const std::string& name, const std::optional<Rat>& value = std::nullopt,
              const std::string& note = "") {
        check(name, "PASS", value, note);
    }
    void fail(const std::string& name, const std::optional<Rat>& value = std::nullopt,
              const std::string& note = "") {
        check(name, "FAIL", value, note);
    }

    /// Free-form detail line.  Text mode emits it verbatim; json-lines mode
    /// wraps it so that every output line stays one JSON object.
    void detail(const std::string& kind, const std::string& text) {
        if (opt_.format == "json-lines") {
            nlohmann::json j;
            j["tool"] = kToolId;
            j["case"] = case_id_;
            j["detail"] = kind;
            j["text"] = text;
            std::cout << j.dump() << "\n";
            return;
        }
        header();
        std::cout << text << "\n";
    }

    std::string value_text(const Rat& v) const {
        std::string s = rat_str(v);
        if (opt_.decimal) s += " (~" + rat_decimal(v) + ")";
        return s;
    }

    bool any_fail() const { return any_fail_; }

private:
    void header() {
        if (header_done_) return;
        header_done_ = true;
        std::cout << "# " << kToolId << "\n# case " << case_id_ << "\n";
    }

    const Options& opt_;
    std::string case_id_;
    bool any_fail_ = false;
    bool header_done_ = false;
};

/// Raw machine output (native file formats, single computed values).
/// These bypass the check framing so the output round-trips through the
/// readers; --format only affects check-style subcommands.
void raw_line(const std::string& text) { std::cout << text << "\n"; }

ValuationData load_valuation(const std::string& path) {
    ValuationData v = read_valuation_file(path);
    auto problems = validate_valuation(v);
    if (!problems.empty()) throw BadInput(path + ": " + problems.front());
    return v;
}

WeightFunction read_weights_file(const std::string& path, int point_count) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    WeightFunction w;
    w.a.assign(static_cast<std::size_t>(point_count) + 1, Rat(0));
    std::vector<bool> seen(static_cast<std::size_t>(point_count) + 1, false);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream is(line);
        std::string tag;
        if (!(is >> tag)) continue;
        std::string where = path + ":" + std::to_string(lineno) + ": ";
        if (tag != "A") throw ParseError(where + "expected 'A <vertex> <value>'");
        int i = 0;
        std::string value;
        if (!(is >> i >> value)) throw ParseError(where + "expected 'A <vertex> <value>'");
        if (i < 1 || i > point_count)
            throw ParseError(where + "vertex " + std::to_string(i) + " out of range 1.." +
                             std::to_string(point_count));
        if (seen[static_cast<std::size_t>(i)]) throw ParseError(where + "duplicate vertex");
        auto r = parse_rat(value);
        if (!r) throw ParseError(where + "not a rational: '" + value + "'");
        w.a[static_cast<std::size_t>(i)] = *r;
        seen[static_cast<std::size_t>(i)] = true;
    }
    for (int i = 1; i <= point_count; ++i)
        if (!seen[static_cast<std::size_t>(i)])
            throw ParseError(path + ": missing weight for vertex " + std::to_string(i));
    return w;
}

/// Default counting weights: the path-count row of the top point vertex in
/// the simplified graph.  Always compatible by construction.
WeightFunction default_weights(const BlowupGraph& g) {
    BlowupGraph s = simplify(g);
    PathTable p = path_table(s);
    WeightFunction w;
    w.a.assign(static_cast<std::size_t>(s.n_vertices) + 1, Rat(0));
    for (int i = 1; i <= s.n_vertices; ++i)
        w.a[static_cast<std::size_t>(i)] =
            Rat(p[static_cast<std::size_t>(s.n_vertices)][static_cast<std::size_t>(i)]);
    return w;
}

void emit_trace(Reporter& rep, const Options& opt, const ArgumentTrace& trace) {
    if (opt.format == "json-lines") {
        int k = 0;
        for (const auto& step : trace.steps) {
            ++k;
            nlohmann::json j;
            j["tool"] = kToolId;
            j["step"] = k;
            j["description"] = step.description;
            j["value"] = rat_str(step.value);
            if (opt.decimal) j["decimal"] = rat_decimal(step.value);
            j["ok"] = step.satisfied;
            std::cout << j.dump() << "\n";
        }
        nlohmann::json j;
        j["tool"] = kToolId;
        j["conclusion"] = trace.conclusion_text;
        j["holds"] = trace.conclusion_holds;
        std::cout << j.dump() << "\n";
        return;
    }
    std::string text = trace_to_string(trace);
    while (!text.empty() && text.back() == '\n') text.pop_back();
    rep.detail("trace", text);
}

int run_graph_validate(const Options& opt, const std::string& file) {
    BlowupGraph g = read_graph_file(file);
    Reporter rep(opt, file);
    auto problems = validate_graph(g);
    if (problems.empty()) {
        rep.pass("graph_valid", std::nullopt,
                 "N=" + std::to_string(g.n_vertices) + " L=" + std::to_string(g.point_count) +
                     " arrows=" + std::to_string(g.arrows.size()));
    } else {
        for (const auto& msg : problems) rep.fail("graph_valid", std::nullopt, msg);
    }
    return rep.any_fail() ? 1 : 0;
}

int run_graph_paths(const std::string& file, int from, int to) {
    BlowupGraph g = read_graph_file(file);
    raw_line(path_count(g, from, to).get_str());
    return 0;
}

int run_graph_simplify(const std::string& file, bool restrict_to_points) {
    BlowupGraph g = read_graph_file(file);
    auto problems = validate_graph(g);
    if (!problems.empty()) throw BadInput(file + ": " + problems.front());
    write_graph(std::cout, restrict_to_points ? simplify(g) : simplify_full(g));
    return 0;
}

int run_nf_excess(const Options& opt, const std::string& file, ExcessMode mode) {
    ValuationData v = load_valuation(file);
    Reporter rep(opt, file);
    Rat excess = nf_excess(v, mode);
    const char* name = mode == ExcessMode::Log ? "log_excess" : "canonical_excess";
    rep.check(name, excess > 0 ? "PASS" : "FAIL", excess,
              excess > 0 ? "positive excess" : "no positive excess");
    return rep.any_fail() ? 1 : 0;
}

int run_count_bound(const Options& opt, const std::string& file,
                    const std::string& weights_path) {
    ValuationData v = load_valuation(file);
    Reporter rep(opt, file);
    WeightFunction w = weights_path.empty()
                           ? default_weights(v.graph)
                           : read_weights_file(weights_path, v.graph.point_count);
    try {
        Rat bound = counting_bound(v, w);
        rep.pass("counting_bound", bound,
                 weights_path.empty() ? "default path-count weights" : weights_path);
    } catch (const IncompatibleWeights& e) {
        rep.fail("counting_bound", std::nullopt, e.what());
    }
    return rep.any_fail() ? 1 : 0;
}

int run_count_lines(int M) {
    LineCountReport r = line_count(M);
    raw_line(r.count.get_str());
    std::string degrees = "degrees:";
    for (int d : r.degrees) degrees += " " + std::to_string(d);
    raw_line(degrees);
    return 0;
}

int run_count_rank(int M, int target_rank) {
    RankConditionReport r = rank_condition_count(M, target_rank);
    raw_line("conditions=" + r.conditions.get_str() + " threshold=" + r.threshold.get_str() +
             " exceeds=" + (r.exceeds ? "true" : "false"));
    return 0;
}

int run_lp_build(const std::string& file, const Rat& m) {
    BlowupGraph g = read_graph_file(file);
    auto problems = validate_graph(g);
    if (!problems.empty()) throw BadInput(file + ": " + problems.front());
    write_system(std::cout, build_nf_system(g, m));
    return 0;
}

int run_lp_min(const Options& opt, const std::string& file, const std::string& objective) {
    LinearSystem sys = read_system_file(file);
    Vec obj(static_cast<std::size_t>(sys.num_vars), Rat(0));
    if (objective.empty()) {
        if (sys.num_vars >= 1) obj[0] = 2;
        if (sys.num_vars >= 2) obj[1] = 1;
    } else {
        std::istringstream is(objective);
        std::string piece;
        std::size_t idx = 0;
        while (std::getline(is, piece, ',')) {
            if (idx >= obj.size()) throw BadInput("--objective: more entries than variables");
            obj[idx++] = flag_rat(piece, "--objective");
        }
        if (idx != obj.size())
            throw BadInput("--objective: expected " + std::to_string(sys.num_vars) + " entries");
    }
    Reporter rep(opt, file);
    try {
        LPResult res = minimize(sys, obj);
        raw_line("value=" + rep.value_text(res.value) + " vertex=" + vec_str(res.witness));
        return 0;
    } catch (const Infeasible&) {
        rep.fail("lp_feasible", std::nullopt, "system is infeasible");
        return 1;
    } catch (const Unbounded&) {
        rep.fail("lp_bounded", std::nullopt, "objective is unbounded below");
        return 1;
    }
}

int run_lp_a13(const Options& opt, const std::string& file, const Rat& m) {
    BlowupGraph g = read_graph_file(file);
    auto problems = validate_graph(g);
    if (!problems.empty()) throw BadInput(file + ": " + problems.front());
    Reporter rep(opt, file);
    LeadingPairReport r = leading_pair_check(g, m);
    rep.check("leading_pair_lower_bound", r.passes ? "PASS" : "FAIL", r.lp_value,
              "closed_form=" + rat_str(r.closed_form) + " threshold=" + rat_str(2 * m));
    return rep.any_fail() ? 1 : 0;
}

int run_lattice_verify(const Options& opt, const std::string& case_letter_arg,
                       const std::string& file) {
    SurfaceCase sc;
    std::string case_id;
    if (!case_letter_arg.empty()) {
        if (case_letter_arg.size() != 1)
            throw BadInput("--case: expected a single letter A..F");
        sc = builtin_case(case_from_letter(case_letter_arg[0]));
        case_id = case_letter_arg;
    } else {
        LatticeFileData d = read_lattice_file(file);
        Vec h_pairings(d.h_class.begin(), d.h_class.end() - 1);
        sc.name = SurfaceCaseName::A;  // unused for file-backed lattices
        sc.lattice = IntersectionLattice{d.labels, SymmetricForm(d.gram), h_pairings,
                                         d.h_class.back()};
        case_id = file;
    }
    Reporter rep(opt, case_id);

    try {
        Mat theta = exceptional_gram(sc.lattice);
        rep.pass("negative_definite", std::nullopt,
                 "exceptional block " + std::to_string(theta.rows()) + "x" +
                     std::to_string(theta.cols()));
    } catch (const NotNegativeDefinite& e) {
        rep.fail("negative_definite", std::nullopt, e.what());
        return 1;
    }

    InverseSignReport inv = check_inverse_sign(sc.lattice);
    rep.pass("theta_inverse", std::nullopt, mat_str(inv.inverse));
    if (inv.strictly_negative)
        rep.pass("inverse_sign", std::nullopt, "all entries negative");
    else if (inv.nonpositive)
        rep.check("inverse_sign", "DEGENERATE", std::nullopt,
                  "nonpositive with zero off-diagonal entries");
    else
        rep.fail("inverse_sign", std::nullopt, "positive entry present");

    try {
        Vec plus = orthogonal_shift(sc.lattice, +1);
        Vec minus = orthogonal_shift(sc.lattice, -1);
        rep.pass("shift_plus", std::nullopt, vec_str(plus));
        rep.pass("shift_minus", std::nullopt, vec_str(minus));
    } catch (const NonpositiveCone& e) {
        rep.fail("orthogonal_shift", std::nullopt, e.what());
        return 1;
    }

    try {
        RPairingReport rp = r_pairing(sc.lattice);
        rep.pass("r_pairing", rp.a, "cross=" + rat_str(1 + rp.a) + " inverse2 positive");
    } catch (const AsymmetricLattice& e) {
        rep.fail("r_pairing", std::nullopt, e.what());
        return 1;
    } catch (const NonNegativeSquare& e) {
        rep.fail("r_pairing", std::nullopt, e.what());
        return 1;
    }

    try {
        EliminationChain chain = derive_mult_bound(sc);
        for (const auto& step : chain.steps)
            rep.detail("elimination",
                       step.description + ": " + row_to_string(step.row, chain.var_names));
        rep.pass("elimination_bound", chain.c / chain.d,
                 row_to_string(chain.final_row, chain.var_names));
    } catch (const EliminationFailed& e) {
        rep.fail("elimination_bound", std::nullopt, e.what());
    }
    return rep.any_fail() ? 1 : 0;
}

int run_lattice_restrict(const Options& opt, const std::string& kind_token, int M,
                         const Rat& n) {
    RestrictionKind kind;
    if (kind_token == "conic22")
        kind = RestrictionKind::Conic;
    else if (kind_token == "cone23")
        kind = RestrictionKind::Cone;
    else if (kind_token == "k3")
        kind = RestrictionKind::K3Pencil;
    else
        throw BadInput("--kind: expected conic22, cone23 or k3");
    RestrictionReport r = restriction_system(kind, M, n);
    Reporter rep(opt, kind_token + " M=" + std::to_string(M) + " n=" + rat_str(n));
    std::vector<std::string> names{"nu+", "nu-"};
    for (const auto& row : r.system.rows) rep.detail("row", row_to_string(row, names));
    for (const auto& b : r.bounds) rep.pass("restriction_bound", b.value, b.description);
    return 0;
}

int run_square_sqrt(const Options& opt, const std::string& coeffs) {
    Vec b;
    std::istringstream is(coeffs);
    std::string piece;
    while (std::getline(is, piece, ',')) b.push_back(flag_rat(piece, "--coeffs"));
    if (b.empty() || b.size() % 2 != 0)
        throw BadInput("--coeffs: expected an even, positive number of entries");
    Reporter rep(opt, "sqrt " + coeffs);
    SquareCertificate cert = truncated_sqrt(b);
    if (cert.is_square) {
        rep.pass("full_square", std::nullopt, "root=" + vec_str(cert.root));
    } else {
        rep.fail("full_square", Rat(*cert.failure_index),
                 "first mismatch at coefficient index " + std::to_string(*cert.failure_index));
    }
    return rep.any_fail() ? 1 : 0;
}

int run_square_apoly(int m, int i) {
    WeightedPoly p = a_poly(m, i);
    raw_line("A[" + std::to_string(m) + "," + std::to_string(i) + "] = " + poly_to_string(p));
    return 0;
}

int run_argue_composition(const Options& opt, const std::string& file, int k, const Rat& b,
                          const std::optional<Rat>& degz1) {
    ValuationData v = load_valuation(file);
    Rat dz = degz1 ? *degz1 : 8 * v.n * v.n - 2 * b;
    Reporter rep(opt, file);
    ArgumentTrace trace = run_composition_argument(v, k, b, dz);
    emit_trace(rep, opt, trace);
    return trace.conclusion_holds ? 0 : 1;
}

int run_argue_budget(const Options& opt, const std::string& file, const Rat& n, const Rat& m1,
                     const Rat& m2) {
    BlowupGraph g = read_graph_file(file);
    auto problems = validate_graph(g);
    if (!problems.empty()) throw BadInput(file + ": " + problems.front());
    Reporter rep(opt, file);
    ArgumentTrace trace = run_budget_skeleton(g, n, m1, m2);
    emit_trace(rep, opt, trace);
    return trace.conclusion_holds ? 0 : 1;
}

int run_suite(const Options& opt) {
    Reporter rep(opt, "suite");
    auto results = acceptance::run_all(opt.seed);
    for (const auto& r : results) {
        char idx[8];
        std::snprintf(idx, sizeof idx, "%02d", r.index);
        rep.check("criterion_" + std::string(idx) + "_" + r.name, r.pass ? "PASS" : "FAIL",
                  std::nullopt, r.note);
    }
    return rep.any_fail() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification toolkit for resolution graphs, multiplicity bounds and "
                 "intersection lattices"};
    app.set_version_flag("--version", std::string(kToolId));
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--decimal", opt.decimal,
                 "append decimal approximations to exact values (display only)");
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json-lines"}))
        ->capture_default_str();
    app.add_option("--seed", opt.seed, "seed for randomized sweeps")
        ->envname("RIGIDITY_SEED")
        ->capture_default_str();

    int rc = 0;

    // graph validate|paths|simplify
    auto* graph_cmd = app.add_subcommand("graph", "resolution graph utilities");
    graph_cmd->require_subcommand(1);
    {
        auto* c = graph_cmd->add_subcommand("validate", "check every structural invariant");
        auto file = std::make_shared<std::string>();
        c->add_option("file", *file, "graph file")->required();
        c->callback([&, file] { rc = run_graph_validate(opt, *file); });
    }
    {
        auto* c = graph_cmd->add_subcommand("paths", "count directed paths between vertices");
        auto file = std::make_shared<std::string>();
        auto from = std::make_shared<int>(0);
        auto to = std::make_shared<int>(0);
        c->add_option("file", *file, "graph file")->required();
        c->add_option("--from", *from, "start vertex")->required();
        c->add_option("--to", *to, "end vertex")->required();
        c->callback([&, file, from, to] { rc = run_graph_paths(*file, *from, *to); });
    }
    {
        auto* c = graph_cmd->add_subcommand("simplify",
                                            "reduce every vertex to class at most 2");
        auto file = std::make_shared<std::string>();
        auto restrict_flag = std::make_shared<bool>(false);
        c->add_option("file", *file, "graph file")->required();
        c->add_flag("--restrict", *restrict_flag,
                    "also drop curve vertices, keeping only 1..L");
        c->callback([&, file, restrict_flag] {
            rc = run_graph_simplify(*file, *restrict_flag);
        });
    }

    // nf excess
    auto* nf_cmd = app.add_subcommand("nf", "multiplicity excess of a valuation");
    nf_cmd->require_subcommand(1);
    {
        auto* c = nf_cmd->add_subcommand("excess", "signed excess over the threshold");
        auto file = std::make_shared<std::string>();
        auto log_flag = std::make_shared<bool>(false);
        auto canonical_flag = std::make_shared<bool>(false);
        c->add_option("file", *file, "valuation file")->required();
        auto* lf = c->add_flag("--log", *log_flag, "log variant (default)");
        c->add_flag("--canonical", *canonical_flag, "canonical variant")->excludes(lf);
        c->callback([&, file, log_flag, canonical_flag] {
            ExcessMode mode = *canonical_flag ? ExcessMode::Canonical : ExcessMode::Log;
            rc = run_nf_excess(opt, *file, mode);
        });
    }

    // count bound|lines|rank
    auto* count_cmd = app.add_subcommand("count", "counting bounds and enumerative checks");
    count_cmd->require_subcommand(1);
    {
        auto* c = count_cmd->add_subcommand("bound", "weighted multiplicity counting bound");
        auto file = std::make_shared<std::string>();
        auto weights = std::make_shared<std::string>();
        c->add_option("file", *file, "valuation file")->required();
        c->add_option("--weights", *weights, "weight file, lines 'A <vertex> <p/q>'");
        c->callback([&, file, weights] { rc = run_count_bound(opt, *file, *weights); });
    }
    {
        auto* c = count_cmd->add_subcommand("lines", "line count on the degree-M model");
        auto M = std::make_shared<int>(0);
        c->add_option("--M", *M, "degree parameter")->required();
        c->callback([&, M] { rc = run_count_lines(*M); });
    }
    {
        auto* c = count_cmd->add_subcommand("rank", "rank-drop condition count");
        auto M = std::make_shared<int>(0);
        auto rank = std::make_shared<int>(0);
        c->add_option("--M", *M, "degree parameter")->required();
        c->add_option("--rank", *rank, "target rank")->required();
        c->callback([&, M, rank] { rc = run_count_rank(*M, *rank); });
    }

    // lp build|min|a13
    auto* lp_cmd = app.add_subcommand("lp", "exact linear programs");
    lp_cmd->require_subcommand(1);
    {
        auto* c = lp_cmd->add_subcommand("build", "emit the valuation system of a graph");
        auto file = std::make_shared<std::string>();
        auto m = std::make_shared<std::string>("1");
        c->add_option("file", *file, "graph file")->required();
        c->add_option("--m", *m, "threshold")->capture_default_str();
        c->callback([&, file, m] { rc = run_lp_build(*file, flag_rat(*m, "--m")); });
    }
    {
        auto* c = lp_cmd->add_subcommand("min", "minimize an objective over a system");
        auto file = std::make_shared<std::string>();
        auto objective = std::make_shared<std::string>();
        c->add_option("file", *file, "system file")->required();
        c->add_option("--objective", *objective,
                      "comma-separated coefficients (default 2,1,0,...)");
        c->callback([&, file, objective] { rc = run_lp_min(opt, *file, *objective); });
    }
    {
        auto* c = lp_cmd->add_subcommand("a13", "leading-pair lower bound for a graph");
        auto file = std::make_shared<std::string>();
        auto m = std::make_shared<std::string>("1");
        c->add_option("file", *file, "graph file")->required();
        c->add_option("--m", *m, "threshold")->capture_default_str();
        c->callback([&, file, m] { rc = run_lp_a13(opt, *file, flag_rat(*m, "--m")); });
    }

    // lattice verify|restrict
    auto* lattice_cmd = app.add_subcommand("lattice", "intersection lattice checks");
    lattice_cmd->require_subcommand(1);
    {
        auto* c = lattice_cmd->add_subcommand("verify", "full certificate for one lattice");
        auto case_letter_arg = std::make_shared<std::string>();
        auto file = std::make_shared<std::string>();
        auto* co = c->add_option("--case", *case_letter_arg, "built-in case A..F");
        c->add_option("--file", *file, "lattice file")->excludes(co);
        c->callback([&, case_letter_arg, file] {
            if (case_letter_arg->empty() && file->empty())
                throw BadInput("lattice verify: need --case or --file");
            rc = run_lattice_verify(opt, *case_letter_arg, *file);
        });
    }
    {
        auto* c = lattice_cmd->add_subcommand("restrict", "two-variable restriction system");
        auto kind = std::make_shared<std::string>();
        auto M = std::make_shared<int>(4);
        auto n = std::make_shared<std::string>("1");
        c->add_option("--kind", *kind, "conic22, cone23 or k3")->required();
        c->add_option("--M", *M, "surface degree")->capture_default_str();
        c->add_option("--n", *n, "threshold")->capture_default_str();
        c->callback([&, kind, M, n] {
            rc = run_lattice_restrict(opt, *kind, *M, flag_rat(*n, "--n"));
        });
    }

    // square sqrt|apoly
    auto* square_cmd = app.add_subcommand("square", "truncated power series squares");
    square_cmd->require_subcommand(1);
    {
        auto* c = square_cmd->add_subcommand("sqrt", "decide full-square truncation");
        auto coeffs = std::make_shared<std::string>();
        c->add_option("--coeffs", *coeffs, "comma-separated b_1..b_2m")->required();
        c->callback([&, coeffs] { rc = run_square_sqrt(opt, *coeffs); });
    }
    {
        auto* c = square_cmd->add_subcommand("apoly", "symbolic square-root coefficient");
        auto m = std::make_shared<int>(0);
        auto i = std::make_shared<int>(0);
        c->add_option("--m", *m, "truncation order")->required();
        c->add_option("--i", *i, "coefficient index in m+1..2m")->required();
        c->callback([&, m, i] { rc = run_square_apoly(*m, *i); });
    }

    // argue s63|s4
    auto* argue_cmd = app.add_subcommand("argue", "auditable contradiction arguments");
    argue_cmd->require_subcommand(1);
    {
        auto* c = argue_cmd->add_subcommand("s63", "fixed-curve composition argument");
        auto file = std::make_shared<std::string>();
        auto k = std::make_shared<int>(0);
        auto b = std::make_shared<std::string>();
        auto degz1 = std::make_shared<std::string>();
        c->add_option("file", *file, "valuation file")->required();
        c->add_option("--k", *k, "chain prefix length")->required();
        c->add_option("--b", *b, "fixed-part coefficient")->required();
        c->add_option("--degz1", *degz1, "residual degree (default 8n^2 - 2b)");
        c->callback([&, file, k, b, degz1] {
            std::optional<Rat> dz;
            if (!degz1->empty()) dz = flag_rat(*degz1, "--degz1");
            rc = run_argue_composition(opt, *file, *k, flag_rat(*b, "--b"), dz);
        });
    }
    {
        auto* c = argue_cmd->add_subcommand("s4", "two-point budget skeleton");
        auto file = std::make_shared<std::string>();
        auto n = std::make_shared<std::string>("1");
        auto m1 = std::make_shared<std::string>();
        auto m2 = std::make_shared<std::string>();
        c->add_option("file", *file, "graph file")->required();
        c->add_option("--n", *n, "threshold")->capture_default_str();
        c->add_option("--m1", *m1, "first assumed multiplicity")->required();
        c->add_option("--m2", *m2, "second assumed multiplicity")->required();
        c->callback([&, file, n, m1, m2] {
            rc = run_argue_budget(opt, *file, flag_rat(*n, "--n"), flag_rat(*m1, "--m1"),
                                  flag_rat(*m2, "--m2"));
        });
    }

    // suite
    {
        auto* c = app.add_subcommand("suite", "run the full acceptance battery");
        c->callback([&] { rc = run_suite(opt); });
    }

    // Let --decimal/--format/--seed appear after the subcommand too.
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
        for (CLI::App* sub : a->get_subcommands(nullptr)) {
            sub->fallthrough();
            enable_fallthrough(sub);
        }
    };
    enable_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const BadInput& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const PreconditionViolated& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const InvalidVertex& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
