#ifndef RIGIDITY_ACCEPTANCE_HPP
#define RIGIDITY_ACCEPTANCE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace rigidity::acceptance {

/// One release-gate criterion outcome.  The note carries deterministic
/// detail: sweep sizes, witness values, or the first failure found.
struct CriterionResult {
    int index = 0;
    std::string name;
    bool pass = false;
    std::string note;
};

// Runs the full release gate.  Deterministic for a fixed seed; the last
// entry aggregates the others plus the wall-clock budget.
std::vector<CriterionResult> run_all(std::uint64_t seed);

}  // namespace rigidity::acceptance

#endif
