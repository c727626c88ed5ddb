#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace backlimit {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text. Line and column are 1-based; 0 when not applicable.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t line = 0, std::size_t column = 0);
    [[nodiscard]] std::size_t line() const { return line_; }
    [[nodiscard]] std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// A map (or other value) violates one or more structural invariants.
class ValidationError : public Error {
public:
    explicit ValidationError(std::vector<std::string> violations);
    [[nodiscard]] const std::vector<std::string>& violations() const { return violations_; }

private:
    std::vector<std::string> violations_;
};

/// Argument outside the domain of an operation (point not in the interval,
/// branch too short, bad parameter).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A node, branch or lap cap was hit. `completed` is the deepest level (or
/// largest period) that finished before the cap.
class CapExceeded : public Error {
public:
    CapExceeded(const std::string& what, std::size_t completed);
    [[nodiscard]] std::size_t completed() const { return completed_; }

private:
    std::size_t completed_;
};

}  // namespace backlimit
