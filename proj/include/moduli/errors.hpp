#pragma once

#include <stdexcept>
#include <string>

namespace moduli {

// Violation of an operation precondition or a domain invariant.
// CLI maps these to exit code 1.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Syntax error in a textual input (ring expression, tree JSON).
// Carries a 1-based position; CLI maps these to exit code 2.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line, int col)
        : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                             std::to_string(col) + ")"),
          line_(line),
          col_(col) {}

    int line() const { return line_; }
    int column() const { return col_; }

private:
    int line_;
    int col_;
};

}  // namespace moduli
