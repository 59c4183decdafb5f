#pragma once

#include "barops/barratt_eccles.hpp"
#include "barops/surjection.hpp"

namespace barops {

// Operad morphism from permutation tuples to surjection words.  tr(x) for
// x = (w_0..w_d) of arity r sums over compositions r+d = r_0+...+r_d with
// r_i >= 1: row i takes the first r_i values of w_i that are not yet closed;
// after a non-final row every entry but the last closes, the last entry (the
// row's caesura) stays open; the final row lists everything still open in
// w_d order.  Degenerate flattened words drop; duplicates cancel mod 2.
SurjectionSum table_reduction(const PermSimplex& x);

} // namespace barops
