#pragma once

#include <string_view>
#include <vector>

#include "diffops/multipoly.hpp"
#include "diffops/ore.hpp"

namespace diffops {

// expr   := term (('+'|'-') term)*
// term   := factor ('*' factor)*
// factor := rational | var ('^' uint)? | '(' expr ')' | '-' factor
// rational := int ('/' uint)?
// Juxtaposition is rejected; errors carry the byte offset.
MultiPoly parse_poly(std::string_view text, const RingPtr& ring);

// Splits on ';' and parses each non-empty piece.
std::vector<MultiPoly> parse_poly_list(std::string_view text, const RingPtr& ring);

// Operator literal over h and x with the Ore product, e.g. "(h^2 + h - 2)*x^-2".
// Powers of x may be negative; h powers are nonnegative.
GradedOp parse_op(std::string_view text);

}  // namespace diffops
