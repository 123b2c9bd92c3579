#pragma once

#include "gwpairs/assembly/pt_series.hpp"

#include <string>

namespace gwpairs {

/// Parses integers, i, q, s1..s3, c1..c3 (elementary symmetric in s), the
/// operators + - * / ^ (integer exponents) and parentheses. Division needs a
/// divisor of the form c(s) P(q). Throws std::invalid_argument on syntax
/// errors, std::domain_error on division by zero or an unsupported divisor.
PTSeries parse_expression(const std::string& text);

/// As parse_expression, rejecting any dependence on q.
SymRatFunc parse_sym_expression(const std::string& text);

}  // namespace gwpairs
