#pragma once

#include <stdexcept>
#include <string>

namespace matchpoly {

/// Malformed textual input (edge lists, graph6, polynomial text).
/// line() is 1-based; 0 when no line context applies.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                      : std::move(message)),
          line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

/// A proven identity failed to hold, or an internal data-structure
/// invariant broke. This is always an implementation bug, never bad input;
/// the verification suite records it as a failure with a witness.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& message) : std::logic_error(message) {}
};

/// Exhaustive subset scans refuse to run above the enumeration cap
/// unless explicitly overridden.
class CapExceeded : public std::domain_error {
public:
    explicit CapExceeded(const std::string& message) : std::domain_error(message) {}
};

}  // namespace matchpoly
