#pragma once

#include "polycore/intpoly.hpp"

#include <json.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace polycore {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t pos);
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

// Accepts either an expression in x ("x^80 - 2x^78 + 3", "(x+1)^3 (x-2)",
// "2*x^2") or a bracketed coefficient list read from the top degree down
// ("[1, 2, 1, 1]" is x^3+2x^2+x+1).
IntPoly parse(std::string_view text);

std::string format_expr(const IntPoly& p);  // "2x^8 + 2x^7 - 4x^6 + ... - 45x + 5"
std::string format_list(const IntPoly& p);  // "[2, 2, -4, ...]", "[0]" for zero

// {"coeffs_desc": ["2", "2", "-4", ...]}; strings because coefficients
// routinely exceed 2^53.
nlohmann::json to_json(const IntPoly& p);
IntPoly from_json(const nlohmann::json& j);
// Descending list of decimal strings (or plain integers) to a polynomial.
IntPoly from_desc_strings(const nlohmann::json& arr);

std::string to_decimal(const mpz_class& z);

}  // namespace polycore
