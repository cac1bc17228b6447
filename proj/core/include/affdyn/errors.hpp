#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace affdyn {

// Syntax error with the byte offset of the offending token.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// The requested bound cannot be held even in log2 form: the factor p^M
// exceeds the exponent range of the high-precision float type.
class BoundNotRepresentable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace affdyn
