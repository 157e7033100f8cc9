#ifndef MONOSEP_ERRORS_HPP_
#define MONOSEP_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace monosep {

// Malformed input text. `line` is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// A caller violated a documented precondition.
class ContractError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An exhaustive oracle was asked to run beyond its hard cap.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An internal invariant failed; always a bug, never a user error.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace monosep

#endif  // MONOSEP_ERRORS_HPP_
