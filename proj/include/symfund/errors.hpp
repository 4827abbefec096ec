#pragma once

#include <stdexcept>
#include <string>

namespace symfund {

/// Raised when two routes that must agree do not, or an exact division that
/// must be integral is not. Always indicates a bug, never bad input.
class InternalConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A documented precondition on the shape of the input does not hold.
class HypothesisError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position)
    {
    }
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace symfund
