#include "rigidity/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "rigidity/errors.hpp"

namespace rigidity {

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

// Tokenized content lines; '#' starts a comment, blank lines are skipped.
std::vector<Line> tokenize(std::istream& in) {
    std::vector<Line> out;
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        Line line{number, {}};
        std::string tok;
        while (ls >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) out.push_back(std::move(line));
    }
    return out;
}

[[noreturn]] void fail(const std::string& filename, int line, const std::string& msg) {
    throw ParseError(filename + ":" + std::to_string(line) + ": " + msg);
}

int parse_int(const std::string& filename, int line, const std::string& tok) {
    try {
        size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        fail(filename, line, "expected an integer, got '" + tok + "'");
    }
}

Rat parse_rat_or_fail(const std::string& filename, int line, const std::string& tok) {
    auto r = parse_rat(tok);
    if (!r) fail(filename, line, "expected a rational p/q, got '" + tok + "'");
    return *r;
}

std::ifstream open_or_fail(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    return in;
}

// Shared by the graph and valuation readers; extra lines are returned for
// the valuation reader to consume.
BlowupGraph graph_from_lines(const std::vector<Line>& lines, const std::string& filename,
                             std::vector<Line>* leftover) {
    BlowupGraph g;
    bool have_n = false, have_l = false;
    for (const auto& line : lines) {
        const auto& t = line.tokens;
        if (t[0] == "N") {
            if (t.size() != 2) fail(filename, line.number, "N takes one value");
            g.n_vertices = parse_int(filename, line.number, t[1]);
            have_n = true;
        } else if (t[0] == "L") {
            if (t.size() != 2) fail(filename, line.number, "L takes one value");
            g.point_count = parse_int(filename, line.number, t[1]);
            have_l = true;
        } else if (t[0] == "A") {
            if (t.size() != 3) fail(filename, line.number, "A takes two vertices");
            int i = parse_int(filename, line.number, t[1]);
            int j = parse_int(filename, line.number, t[2]);
            g.arrows.emplace_back(i, j);
        } else if (leftover) {
            leftover->push_back(line);
        } else {
            fail(filename, line.number, "unknown directive '" + t[0] + "'");
        }
    }
    if (!have_n) throw ParseError(filename + ": missing N line");
    if (!have_l) throw ParseError(filename + ": missing L line");
    return g;
}

}  // namespace

BlowupGraph read_graph(std::istream& in, const std::string& filename) {
    return graph_from_lines(tokenize(in), filename, nullptr);
}

BlowupGraph read_graph_file(const std::string& path) {
    auto in = open_or_fail(path);
    return read_graph(in, path);
}

void write_graph(std::ostream& out, const BlowupGraph& g) {
    out << "N " << g.n_vertices << "\n";
    out << "L " << g.point_count << "\n";
    auto arrows = g.arrows;
    std::sort(arrows.begin(), arrows.end());
    for (const auto& [i, j] : arrows) out << "A " << i << " " << j << "\n";
}

std::string graph_to_string(const BlowupGraph& g) {
    std::ostringstream os;
    write_graph(os, g);
    return os.str();
}

ValuationData read_valuation(std::istream& in, const std::string& filename) {
    std::vector<Line> leftover;
    BlowupGraph g = graph_from_lines(tokenize(in), filename, &leftover);
    int N = g.n_vertices;

    ValuationData v;
    v.graph = std::move(g);
    v.nu.assign(N + 1, Rat(0));
    v.delta.assign(N + 1, 0);
    std::vector<bool> have_nu(N + 1, false), have_delta(N + 1, false);
    bool have_thresh = false;

    auto vertex_of = [&](const Line& line) {
        int i = parse_int(filename, line.number, line.tokens[1]);
        if (i < 1 || i > N) fail(filename, line.number, "vertex out of range");
        return i;
    };

    for (const auto& line : leftover) {
        const auto& t = line.tokens;
        if (t[0] == "NU") {
            if (t.size() != 3) fail(filename, line.number, "NU takes vertex and value");
            int i = vertex_of(line);
            v.nu[i] = parse_rat_or_fail(filename, line.number, t[2]);
            have_nu[i] = true;
        } else if (t[0] == "DELTA") {
            if (t.size() != 3) fail(filename, line.number, "DELTA takes vertex and value");
            int i = vertex_of(line);
            v.delta[i] = parse_int(filename, line.number, t[2]);
            have_delta[i] = true;
        } else if (t[0] == "BETA") {
            if (t.size() != 3) fail(filename, line.number, "BETA takes vertex and value");
            int i = vertex_of(line);
            if (i <= v.graph.point_count)
                fail(filename, line.number, "BETA is defined only for curve vertices");
            v.beta[i] = Int(parse_int(filename, line.number, t[2]));
        } else if (t[0] == "THRESH") {
            if (t.size() != 2) fail(filename, line.number, "THRESH takes one value");
            v.n = parse_rat_or_fail(filename, line.number, t[1]);
            have_thresh = true;
        } else {
            fail(filename, line.number, "unknown directive '" + t[0] + "'");
        }
    }

    if (!have_thresh) throw ParseError(filename + ": missing THRESH line");
    for (int i = 1; i <= N; ++i) {
        if (!have_nu[i])
            throw ParseError(filename + ": missing NU for vertex " + std::to_string(i));
        if (!have_delta[i])
            throw ParseError(filename + ": missing DELTA for vertex " + std::to_string(i));
    }
    for (int i = v.graph.point_count + 1; i <= N; ++i) {
        if (!v.beta.count(i))
            throw ParseError(filename + ": missing BETA for curve vertex " + std::to_string(i));
    }
    return v;
}

ValuationData read_valuation_file(const std::string& path) {
    auto in = open_or_fail(path);
    return read_valuation(in, path);
}

void write_valuation(std::ostream& out, const ValuationData& v) {
    write_graph(out, v.graph);
    for (int i = 1; i <= v.graph.n_vertices; ++i)
        out << "NU " << i << " " << rat_str(v.nu[i]) << "\n";
    for (int i = 1; i <= v.graph.n_vertices; ++i)
        out << "DELTA " << i << " " << v.delta[i] << "\n";
    for (const auto& [i, b] : v.beta) out << "BETA " << i << " " << b.get_str() << "\n";
    out << "THRESH " << rat_str(v.n) << "\n";
}

LinearSystem read_system(std::istream& in, const std::string& filename) {
    auto lines = tokenize(in);
    LinearSystem s;
    bool have_vars = false;
    for (const auto& line : lines) {
        const auto& t = line.tokens;
        if (t[0] == "VARS") {
            if (t.size() != 2) fail(filename, line.number, "VARS takes one value");
            s.num_vars = parse_int(filename, line.number, t[1]);
            if (s.num_vars < 1) fail(filename, line.number, "VARS must be positive");
            have_vars = true;
        } else if (t[0] == "ROW") {
            if (!have_vars) fail(filename, line.number, "ROW before VARS");
            // ROW GE|EQ c1 ... ck | rhs
            if (static_cast<int>(t.size()) != s.num_vars + 4)
                fail(filename, line.number, "ROW needs relation, " +
                     std::to_string(s.num_vars) + " coefficients, '|', and rhs");
            LinearRow row;
            if (t[1] == "GE") row.rel = Relation::GE;
            else if (t[1] == "EQ") row.rel = Relation::EQ;
            else fail(filename, line.number, "relation must be GE or EQ");
            for (int j = 0; j < s.num_vars; ++j)
                row.coeffs.push_back(parse_rat_or_fail(filename, line.number, t[2 + j]));
            if (t[2 + s.num_vars] != "|")
                fail(filename, line.number, "expected '|' before rhs");
            row.rhs = parse_rat_or_fail(filename, line.number, t[3 + s.num_vars]);
            s.rows.push_back(std::move(row));
        } else {
            fail(filename, line.number, "unknown directive '" + t[0] + "'");
        }
    }
    if (!have_vars) throw ParseError(filename + ": missing VARS line");
    return s;
}

LinearSystem read_system_file(const std::string& path) {
    auto in = open_or_fail(path);
    return read_system(in, path);
}

void write_system(std::ostream& out, const LinearSystem& s) {
    out << "VARS " << s.num_vars << "\n";
    for (const auto& row : s.rows) {
        out << "ROW " << (row.rel == Relation::GE ? "GE" : "EQ");
        for (const auto& c : row.coeffs) out << " " << rat_str(c);
        out << " | " << rat_str(row.rhs) << "\n";
    }
}

LatticeFileData read_lattice(std::istream& in, const std::string& filename) {
    auto lines = tokenize(in);
    LatticeFileData d;
    std::vector<Vec> gram_rows;
    for (const auto& line : lines) {
        const auto& t = line.tokens;
        if (t[0] == "BASIS") {
            if (t.size() < 2) fail(filename, line.number, "BASIS needs labels");
            d.labels.assign(t.begin() + 1, t.end());
        } else if (t[0] == "GRAM") {
            if (d.labels.empty()) fail(filename, line.number, "GRAM before BASIS");
            if (t.size() != d.labels.size() + 1)
                fail(filename, line.number, "GRAM row needs " +
                     std::to_string(d.labels.size()) + " entries");
            Vec row;
            for (size_t j = 1; j < t.size(); ++j)
                row.push_back(parse_rat_or_fail(filename, line.number, t[j]));
            gram_rows.push_back(std::move(row));
        } else if (t[0] == "H") {
            if (d.labels.empty()) fail(filename, line.number, "H before BASIS");
            if (t.size() != d.labels.size() + 2)
                fail(filename, line.number, "H needs one pairing per basis vector plus the self-pairing");
            for (size_t j = 1; j < t.size(); ++j)
                d.h_class.push_back(parse_rat_or_fail(filename, line.number, t[j]));
        } else {
            fail(filename, line.number, "unknown directive '" + t[0] + "'");
        }
    }
    if (d.labels.empty()) throw ParseError(filename + ": missing BASIS line");
    int k = static_cast<int>(d.labels.size());
    if (static_cast<int>(gram_rows.size()) != k)
        throw ParseError(filename + ": expected " + std::to_string(k) + " GRAM rows");
    if (d.h_class.empty()) throw ParseError(filename + ": missing H line");
    d.gram = Mat(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) d.gram.at(i, j) = gram_rows[i][j];
    return d;
}

LatticeFileData read_lattice_file(const std::string& path) {
    auto in = open_or_fail(path);
    return read_lattice(in, path);
}

void write_lattice(std::ostream& out, const LatticeFileData& d) {
    out << "BASIS";
    for (const auto& l : d.labels) out << " " << l;
    out << "\n";
    for (std::size_t i = 0; i < d.gram.rows(); ++i) {
        out << "GRAM";
        for (std::size_t j = 0; j < d.gram.cols(); ++j) out << " " << rat_str(d.gram.at(i, j));
        out << "\n";
    }
    out << "H";
    for (const auto& h : d.h_class) out << " " << rat_str(h);
    out << "\n";
}

}  // namespace rigidity
