#ifndef GCV_PARSE_HPP
#define GCV_PARSE_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "gcv/mpoly.hpp"

namespace gcv {

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"), offset(offset) {}
    std::size_t offset;
};

// Grammar: integers, variable names, + - * ^, parentheses; whitespace-insensitive;
// exponents are nonnegative decimal integers. Adjacency does not imply
// multiplication: "2x" is a syntax error, write "2*x".
MPoly parse_poly(const std::string& text, const std::vector<std::string>& var_names);

} // namespace gcv

#endif
