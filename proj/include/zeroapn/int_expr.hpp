#pragma once

#include <cstdint>
#include <map>
#include <string_view>

namespace zapn {

/// Evaluates integer expressions such as "3*2^5-7", "-9" or "5(2^k+2^(k-1)+1)".
///
/// Grammar: + and - (binary and unary), * or juxtaposition before '(' or a
/// variable, right-associative ^ with a non-negative exponent, parentheses,
/// decimal literals, and single-letter variables bound in `vars`. Unary minus
/// binds looser than ^, so "-2^3" is -8. Throws std::invalid_argument on
/// syntax errors and std::overflow_error when a value leaves int64.
std::int64_t evaluate_int_expression(std::string_view text, const std::map<char, std::int64_t>& vars = {});

}  // namespace zapn
