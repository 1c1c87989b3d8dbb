#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace alphadom {

/// Invalid argument passed to a library operation (bad vertex, bad spec).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed or inconsistent graph/solution/config file.
class IngestError : public std::runtime_error {
public:
    IngestError(const std::string& file, std::size_t line, const std::string& what)
        : std::runtime_error(file + (line ? ":" + std::to_string(line) : std::string()) + ": " + what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// The LP solver lost feasibility or failed to certify optimality.
class SolverFault : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A solver returned an output that violates its postcondition.
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Request exceeds a hard size guard (e.g. brute force above 22 vertices).
class InstanceTooLarge : public InputError {
public:
    using InputError::InputError;
};

}  // namespace alphadom
