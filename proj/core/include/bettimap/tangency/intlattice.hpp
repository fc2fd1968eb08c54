#pragma once

#include <optional>
#include <vector>

#include "bettimap/exact/rational.hpp"

namespace bettimap::tangency {

using exact::Integer;
using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;  // list of rows

// Row Hermite normal form of the row span: echelon, positive pivots, entries
// above each pivot reduced into [0, pivot). Zero rows are dropped, so the
// result is a basis of the lattice generated by the rows.
IntMatrix hermite_normal_form(IntMatrix rows);

// Nonzero invariant factors d1 | d2 | ... of the Smith normal form.
std::vector<Integer> smith_invariants(IntMatrix a);

std::size_t rank(const IntMatrix& rows);

// LLL-reduced basis (delta = 3/4) of linearly independent rows.
IntMatrix lll_reduce(IntMatrix rows);

// Integer coordinates of v in the basis given in Hermite normal form, or
// nothing when v is not in the lattice.
std::optional<IntVector> hnf_coordinates(const IntMatrix& hnf, const IntVector& v);

// All lattice vectors with max-norm at most bound (rows in Hermite form).
std::vector<IntVector> enumerate_box(const IntMatrix& hnf, long bound);

}  // namespace bettimap::tangency
