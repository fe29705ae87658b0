#pragma once

#include <stdexcept>
#include <string>

namespace brush {

// Base class for all library errors.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An operation was handed an argument outside its contract
// (degenerate graph, mismatched orientation, bad allocation, ...).
class invalid_input : public error {
public:
    using error::error;
};

// The instance exceeds a configured solver cap.
class cap_exceeded : public error {
public:
    using error::error;
};

enum class parse_error_kind {
    malformed_line,
    bad_header,
    self_loop,
    duplicate_edge,
    vertex_out_of_range,
    missing_problem_line,
    duplicate_problem_line,
    edge_count_mismatch,
};

// Failure in one of the text formats; carries the 1-based source line.
class parse_error : public error {
public:
    parse_error(parse_error_kind kind, int line, const std::string& message)
        : error("line " + std::to_string(line) + ": " + message),
          kind_(kind),
          line_(line) {}

    parse_error_kind kind() const noexcept { return kind_; }
    int line() const noexcept { return line_; }

private:
    parse_error_kind kind_;
    int line_;
};

}  // namespace brush
