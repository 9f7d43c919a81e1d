#pragma once

#include "hodge/polyform.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace hodge {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Polynomial text: sums of terms like `3/2*x1^2*x3 - x2 + 7`. Variables are
// x1..xn (1-based). Printing is canonical (graded-lex, highest first) and
// parse(print(p)) == p.
Polynomial parse_polynomial(std::string_view text, int n);
std::string format_polynomial(const Polynomial &p);

// Form text:
//   n=3; k=1
//   idx=[1]; poly=x2*x3
//   idx=[3]; poly=-1/2*x1
// Indices are 1-based, blank lines and `#` comments are ignored, repeated
// indices accumulate. The zero form prints only the header line.
PolyForm parse_polyform(std::string_view text);
std::string format_polyform(const PolyForm &f);

} // namespace hodge
