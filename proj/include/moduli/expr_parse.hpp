#pragma once

#include <string>

#include "moduli/ring.hpp"

namespace moduli {

// Grammar for ring elements over a generator universe:
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := rational | generator
//   rational  := digits ['/' digits]
//   generator := PREFIX '{' labels '|' labels '}'   e.g. D{1,2|3,4,5}
// Generators are canonicalized on parse, so D{3,4|1,2} equals D{1,2|3,4}.
// Printing an element (RingElement::str) reparses to an equal value.
RingElement parse_ring_expression(const std::string& text, const RingContextPtr& ctx);

}  // namespace moduli
