#pragma once

#include <stdexcept>
#include <string>

namespace frobdim {

// Malformed input: bad files, non-homogeneous data, violated preconditions.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A configured resource cap was exceeded. Callers surface this as an
// inconclusive outcome, never as a mathematical answer.
struct LimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two independent computation routes disagreed, or an internal contract broke.
struct InternalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace frobdim
