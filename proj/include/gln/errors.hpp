#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gln {

// Error for malformed text input; carries the byte offset of the problem.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

}  // namespace gln
