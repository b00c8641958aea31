#pragma once

#include "curvess/poly.hpp"

#include <string_view>

namespace curvess {

/// Parses an expression over the declared variables.
///
///     expr     := term (('+'|'-') term)*
///     term     := ['-'] factor ('*' factor)*
///     factor   := base ('^' NAT)?
///     base     := RATIONAL | VAR | '(' expr ')'
///     RATIONAL := INT ('/' POSINT)?
///
/// Whitespace is insignificant and there is no implicit multiplication.
/// Failures raise SyntaxError with the offending offset and one of
/// ErrorKind::{Syntax, UndeclaredVariable, BadExponent}.
Poly parse_poly(std::string_view source, const VarList& ambient);

/// Splits "u,v" into {"u", "v"}; rejects empty or malformed names.
VarList parse_var_list(std::string_view text);

} // namespace curvess
