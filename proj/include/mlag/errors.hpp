#pragma once

#include <stdexcept>
#include <string>

namespace mlag {

// An id in one input that does not resolve in another (control without an
// alignment row, edge with an unknown vulnerability, ...). Kept distinct from
// parse errors so callers can map it to its own exit code.
struct CrossReferenceError : std::runtime_error {
    explicit CrossReferenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mlag
