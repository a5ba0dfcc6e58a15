#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace edf {

// Raised for inputs the library understands but does not handle
// (non-abelian automorphism groups, orders above a configured bound).
class UnsupportedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Text-format errors. Line and column are 1-based; 0 means "not known".
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t line = 0, std::size_t column = 0);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace edf
