#pragma once

// Line-oriented problem files.
//
//   # nodal curves, r = 1
//   [vars]
//   z10 1
//   z01 1
//   [bundle] L
//   [surface] generic-surface
//   [numerator]
//   -(z10 - z01)^2
//   chern 2
//   [denominator]
//   z10^2
//   z01^2
//   [segre] order=2 vars=z10,z01
//   [prefactor] 1/2
//
// [vars] lists residue variables in expansion order (innermost first) with
// an optional weight.  Numerator lines multiply; `chern m [vars=...]` is
// e_m of the bundle roots twisted by the listed variables (default all).
// Denominator lines are linear forms with an optional `^n`.  [surface] takes
// a preset name or `custom`, followed by `dim n` and `segre s1 ; s2 ; ...`.

#include <string>
#include <string_view>

#include "hilbres/assembler.hpp"

namespace hilbres {

Assembled parse_problem_config(std::string_view text);
Assembled load_problem_config(const std::string& path);

}  // namespace hilbres
