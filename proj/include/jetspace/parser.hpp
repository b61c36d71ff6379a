#pragma once

#include <string_view>

#include "jetspace/polynomial.hpp"

namespace jetspace {

/// Parses
///
///   expr   := ('+'|'-')? term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' uint)?
///   atom   := var | int | int '/' uint | '(' expr ')'
///
/// with blanks allowed between tokens. Throws ParseError (with the character
/// offset) on bad syntax and on names that are not variables of `ring`.
Polynomial parse_polynomial(std::string_view text, const Ring& ring);

}  // namespace jetspace
