#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ktdom {

// Caller passed an out-of-range id, a bad size, or an unsupported parameter.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A constructor's mathematical hypothesis does not hold for the given graph.
class PreconditionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class GenerationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed interchange text. `position` is a byte offset (graph6) or a
// 1-based line number (DIMACS), depending on the format.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace ktdom
