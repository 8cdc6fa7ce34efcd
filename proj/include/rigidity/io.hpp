#ifndef RIGIDITY_IO_HPP
#define RIGIDITY_IO_HPP

#include <iosfwd>
#include <string>

#include "rigidity/graph.hpp"
#include "rigidity/lp.hpp"
#include "rigidity/matrix.hpp"
#include "rigidity/multiplicity.hpp"
#include "rigidity/rational.hpp"

namespace rigidity {

/// Line-oriented readers and writers for the four on-disk formats.
/// All readers accept '#' comments and blank lines and throw ParseError
/// with "<file>:<line>: <message>" on malformed input.

// Graph file: "N <int>", "L <int>", then "A <i> <j>" per arrow.
// Duplicate arrows are preserved so that validation can flag them.
BlowupGraph read_graph(std::istream& in, const std::string& filename);
BlowupGraph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const BlowupGraph& g);
std::string graph_to_string(const BlowupGraph& g);

// Valuation file: graph lines followed by "NU <i> <p/q>", "DELTA <i> <int>",
// "BETA <i> <int>" and "THRESH <p/q>".  Every vertex needs NU and DELTA;
// BETA is required exactly for curve vertices i > L.
ValuationData read_valuation(std::istream& in, const std::string& filename);
ValuationData read_valuation_file(const std::string& path);
void write_valuation(std::ostream& out, const ValuationData& v);

// System file: "VARS <k>" then "ROW GE|EQ c1 ... ck | rhs".
LinearSystem read_system(std::istream& in, const std::string& filename);
LinearSystem read_system_file(const std::string& path);
void write_system(std::ostream& out, const LinearSystem& s);

// Lattice file: "BASIS <label> ...", one "GRAM <row>" per basis vector,
// "H <pairings with each basis vector> <self-pairing>".
struct LatticeFileData {
    std::vector<std::string> labels;
    Mat gram;
    Vec h_class;  // pairings with each basis vector, then the self-pairing
};
LatticeFileData read_lattice(std::istream& in, const std::string& filename);
LatticeFileData read_lattice_file(const std::string& path);
void write_lattice(std::ostream& out, const LatticeFileData& d);

}  // namespace rigidity

#endif
