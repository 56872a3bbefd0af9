#pragma once

#include "dquad/form.hpp"
#include "dquad/polynomial.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace dquad {

/// Recursive-descent parser for polynomial expressions.
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := ('+' | '-') unary | power
///   power   := primary ('^' integer)*
///   primary := integer | identifier | '(' expr ')'
///
/// `^` binds tightest and takes a non-negative integer literal. Division is only allowed by a
/// nonzero constant, which is how rational literals such as 3/4 are written. Juxtaposition
/// ("2x0") is rejected. Identifiers resolve against `names`; underscores are ignored when the
/// exact spelling is not found, so "x_3" names x3.
Polynomial parse_polynomial(std::string_view text, std::span<const std::string> names, const Domain& domain,
                            MonomialOrder order = MonomialOrder::grevlex());

/// Parses a homogeneous form in x0..x{nvars-1}. The zero form takes `degree` (default 0).
Form parse_form(std::string_view text, int nvars, const Domain& domain = Domain::rationals(),
                std::optional<int> degree = std::nullopt);

std::vector<std::string> default_variable_names(int nvars);

}  // namespace dquad
