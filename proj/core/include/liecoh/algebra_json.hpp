#pragma once

#include <string>
#include <string_view>

#include "liecoh/lie_algebra.hpp"

namespace liecoh {

// JSON algebra schema:
//   {"dim": 3,
//    "brackets": [{"i": 1, "j": 2, "coeffs": {"0": "1"}}],
//    "labels": ["Z", "X1", "X2"]}
// Coefficients are strings "p/q" (also "p/q+r/si") or objects
// {"re": "p/q", "im": "r/s"}; coefficient keys are decimal basis indices.
// "labels" is optional.

/// Throws ParseError on schema violations; algebra errors (JacobiViolation,
/// IndexOutOfRange, DuplicatePair) propagate unchanged.
LieAlgebra algebra_from_json(std::string_view text);

/// Canonical serialization: brackets in (i, j) order, coefficient keys in
/// increasing index order, real values as strings.
std::string algebra_to_json(const LieAlgebra& g, int indent = -1);

}  // namespace liecoh
