#pragma once

#include <stdexcept>
#include <string>

namespace mroute {

// Bad caller input: unknown names, malformed walks, invalid weights.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input-file syntax or semantic problem; carries a 1-based line number.
struct parse_error : input_error {
    parse_error(int line_, const std::string& what_)
        : input_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
    int line;
};

// Raised when a query is run on a network that fails the properness rules.
struct properness_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Reference-implementation failures (negative cycle, enumeration cutoff).
struct oracle_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace mroute
