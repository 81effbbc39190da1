#ifndef IDG_PARSER_HPP
#define IDG_PARSER_HPP

#include "idg/ratfunc.hpp"

namespace idg {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

// Grammar: integers, the variable symbol, + - * / ^ and parentheses, with
// nonnegative integer exponents. For extension fields (m > 1) the symbol
// 'a' denotes the field generator. Whitespace is ignored.
RatFunc parse_expr(const std::string& text, const FiniteField& field, char variable);

// "GF(p)" or "GF(p^m; modulus=<poly in a>)"
FiniteField parse_field(const std::string& designator);

}   // namespace idg

#endif
