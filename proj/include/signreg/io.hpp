#pragma once

// Plain-text matrix files:
//
//   # comment lines start with '#'
//   m n
//   <m lines of n whitespace-separated rationals such as 3, -1/2>
//
// Tokens are exact: an optional sign, digits, optionally '/' and digits.
// Decimals are rejected.

#include "signreg/matrix.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace signreg {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what);
    [[nodiscard]] std::size_t line() const { return line_; }
    [[nodiscard]] std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

RatMatrix parse_matrix(std::string_view text);
RatMatrix read_matrix_file(const std::string& path);
std::string emit_matrix(const RatMatrix& a);

/// Parses each token as an exact rational; column is the 1-based token index.
RatVector parse_vector(const std::vector<std::string>& tokens);

}  // namespace signreg
