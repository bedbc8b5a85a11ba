#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sfill {

// Input outside the domain of an operation (e.g. expanding q >= -1).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Caller broke a documented precondition.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed text; position is a 0-based byte offset into the input.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"),
          detail_(what),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }
    // Message without the position suffix.
    const std::string& detail() const noexcept { return detail_; }

private:
    std::string detail_;
    std::size_t position_;
};

// A result that contradicts a proven invariant. Always a bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace sfill
