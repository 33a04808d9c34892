#pragma once

// curve.json: the exact serialization of a projective curve.  Coefficients
// are stored as canonical "p/q" strings per real and imaginary part, so a
// save/load cycle is bit-exact.
//
// {
//   "components": [ [ ["p/q","p/q"], ... ]  x4 ],   // lowest degree first
//   "provenance": { "kind": ..., "f": expr, "g": expr, "h": expr,
//                   "c": ["p/q","p/q"], "a": ..., "b": ...,
//                   "cleared": [ ["p/q","p/q"], ... ] }
// }

#include <iosfwd>
#include <string>

#include "legendrian/projective_curve.hpp"

namespace legendrian {

std::string curve_to_json(const ProjectiveCurve& C);
ProjectiveCurve curve_from_json(const std::string& text);

void save_curve(const ProjectiveCurve& C, const std::string& path);
ProjectiveCurve load_curve(const std::string& path);

}  // namespace legendrian
