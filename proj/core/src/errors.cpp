#include "backlimit/errors.hpp"

namespace backlimit {

namespace {

std::string located(const std::string& msg, std::size_t line, std::size_t column) {
    if (line == 0) return msg;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg;
}

std::string joined(const std::vector<std::string>& parts) {
    std::string out = "invalid map: ";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i != 0) out += "; ";
        out += parts[i];
    }
    return out;
}

}  // namespace

ParseError::ParseError(const std::string& msg, std::size_t line, std::size_t column)
    : Error(located(msg, line, column)), line_(line), column_(column) {}

ValidationError::ValidationError(std::vector<std::string> violations)
    : Error(joined(violations)), violations_(std::move(violations)) {}

CapExceeded::CapExceeded(const std::string& what, std::size_t completed)
    : Error(what + " (completed " + std::to_string(completed) + ")"), completed_(completed) {}

}  // namespace backlimit
