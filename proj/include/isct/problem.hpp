#pragma once

#include <string>

#include "isct/hypersurface.hpp"

namespace isct {

// Line-oriented problem format: `key = value` pairs, '#' comments.
//
//   n = 3
//   degree = 5
//   singularity = brieskorn_pham
//   exponents = 2,2,2,2
//
// Alternative germ form: `singularity = weighted_homogeneous` with
// `weights = ...` and `wdegree = ...`. Required keys must appear exactly
// once; unknown keys are rejected. Errors carry file:line positions.
HypersurfaceFamily parse_input(const std::string& path);

// Same parser over in-memory text; `display_name` stands in for the path in
// error messages.
HypersurfaceFamily parse_input_text(const std::string& text,
                                    const std::string& display_name);

}  // namespace isct
