#pragma once

#include <stdexcept>
#include <string>

namespace aqn {

// Raised when a request exceeds a documented size/time budget
// (materialization caps, enumeration budgets, engine timeouts).
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// Raised by graph importers; carries the 1-based offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line)
        : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

}  // namespace aqn
