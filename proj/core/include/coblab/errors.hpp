#pragma once

#include <stdexcept>

namespace coblab {

// Input sizes disagree (mixed orders, mismatched n).
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Instance exceeds an exact-computation cap.
struct CapacityError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A structural invariant was violated (illegal square, broken closure).
struct InvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace coblab
