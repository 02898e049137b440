#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace netsparsity {

/// Malformed input text (edge lists, sequence files, frequency tables, flags).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message : message),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A reference total that is not positive or is below the actual total mass.
class ReferenceTotalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A degree sequence that cannot be realized as a simple graph.
class RealizationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace netsparsity
