#pragma once

#include <stdexcept>
#include <string>

namespace sigforge {

// Input that violates an operation's precondition (bad polynomial shape,
// out-of-range index, malformed matrix dimensions).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Text or JSON that cannot be parsed into a domain value.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A matrix failed the determinant condition of its declared parity.
class ParityViolation : public std::runtime_error {
public:
    ParityViolation(const std::string& what, std::string determinant)
        : std::runtime_error(what), determinant_(std::move(determinant)) {}

    const std::string& determinant() const noexcept { return determinant_; }

private:
    std::string determinant_;
};

// A constructor's postcondition did not hold on its own output.
class VerificationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace sigforge
