#ifndef RIGIDITY_ERRORS_HPP
#define RIGIDITY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rigidity {

struct SingularMatrix : std::runtime_error {
    explicit SingularMatrix(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatch : std::runtime_error {
    explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidVertex : std::runtime_error {
    explicit InvalidVertex(const std::string& what) : std::runtime_error(what) {}
};

struct LengthMismatch : std::runtime_error {
    explicit LengthMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct IncompatibleWeights : std::runtime_error {
    explicit IncompatibleWeights(const std::string& what) : std::runtime_error(what) {}
};

struct HypothesisViolated : std::runtime_error {
    explicit HypothesisViolated(const std::string& what) : std::runtime_error(what) {}
};

struct PreconditionViolated : std::runtime_error {
    explicit PreconditionViolated(const std::string& what) : std::runtime_error(what) {}
};

struct ChainViolated : std::runtime_error {
    explicit ChainViolated(const std::string& what) : std::runtime_error(what) {}
};

struct Infeasible : std::runtime_error {
    explicit Infeasible(const std::string& what) : std::runtime_error(what) {}
};

struct Unbounded : std::runtime_error {
    explicit Unbounded(const std::string& what) : std::runtime_error(what) {}
};

struct NotNegativeDefinite : std::runtime_error {
    explicit NotNegativeDefinite(const std::string& what) : std::runtime_error(what) {}
};

struct NonpositiveCone : std::runtime_error {
    explicit NonpositiveCone(const std::string& what) : std::runtime_error(what) {}
};

struct AsymmetricLattice : std::runtime_error {
    explicit AsymmetricLattice(const std::string& what) : std::runtime_error(what) {}
};

struct NonNegativeSquare : std::runtime_error {
    explicit NonNegativeSquare(const std::string& what) : std::runtime_error(what) {}
};

struct EliminationFailed : std::runtime_error {
    explicit EliminationFailed(const std::string& what) : std::runtime_error(what) {}
};

// malformed input files; message carries file and line
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rigidity

#endif
