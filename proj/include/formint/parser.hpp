#pragma once

#include <string_view>

#include "formint/forms.hpp"

namespace formint {

/// Result of parsing: either a scalar rational function or a differential form.
struct ParsedValue {
  bool is_form = false;
  RatFunc scalar;
  DiffForm form;
};

/// Parses infix text over `ring`; the first `nform_vars` ring variables may
/// appear inside d(...). Throws ParseError.
ParsedValue parse_expression(std::string_view src, const RingPtr& ring, int nform_vars);

RatFunc parse_ratfunc(std::string_view src, const RingPtr& ring);
/// A scalar parses as a 0-form.
DiffForm parse_form(std::string_view src, const RingPtr& ring, int nform_vars);
MPoly parse_poly(std::string_view src, const RingPtr& ring);

}  // namespace formint
