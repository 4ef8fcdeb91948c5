// Error taxonomy shared by the library and the CLI exit-code mapping.
#pragma once

#include <stdexcept>
#include <string>

namespace kgrip {

// Malformed input text (edge lists, graph6 lines).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Structurally impossible request: disconnected input, k larger than the
// placeable set, odd family parameter, out-of-domain sizes.
struct InfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A linear-algebra step failed (singular solve, eigensolver breakdown).
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A configured enumeration/subset budget would be exceeded.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace kgrip
