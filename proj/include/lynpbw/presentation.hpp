#ifndef LYNPBW_PRESENTATION_HPP
#define LYNPBW_PRESENTATION_HPP

#include <map>
#include <string>

#include "lynpbw/braiding.hpp"
#include "lynpbw/coalg.hpp"

namespace lynpbw {

// Everything a command needs: field, graded alphabet, braiding, relations,
// optional comultiplication overrides, and the truncation degree.
struct Presentation {
    Context ctx;
    Bicharacter chi = Bicharacter::trivial(Field::rationals(), 1);
    std::vector<Polynomial> relations;
    std::map<int, TensorPolynomial> comult;  // letters with a custom image
    long max_degree = 0;

    // standard images patched with the overrides
    Comultiplication comultiplication() const;

    bool same(const Presentation& other) const;
};

// Line-oriented document; see the corpus files for the layout.  Raises
// SyntaxError (with a line number) or ValidationError.
Presentation parse_presentation(const std::string& text);

// Canonical document for the presentation; parses back to the same data.
std::string print_presentation(const Presentation& p);

// Expression parsers shared with the command layer.
Polynomial parse_poly(const Context& ctx, const std::string& text);
TensorPolynomial parse_tensor(const Context& ctx, const std::string& text);

} // namespace lynpbw

#endif
