#pragma once

#include <stdexcept>
#include <string>

#include "ahm6/kform.hpp"

namespace ahm6 {

/// Syntax error with the offending position (0-based offset into the input).
struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, size_t position)
        : std::runtime_error(msg + " at position " + std::to_string(position)), pos(position) {}
    size_t pos;
};

/// Parses the shared form grammar  term (+/- term)*  with
/// term = [coeff *] e<digits> and coeff an integer or p/q, e.g.
/// "2*e123 - e356 + 1/2*e145". All terms must have one grade; indices must
/// not exceed dim. The canonical serialization is KForm::str().
KForm parse_form(const std::string& text, int dim);

} // namespace ahm6
