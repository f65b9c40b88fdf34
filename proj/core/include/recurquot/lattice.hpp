#pragma once

#include <vector>

#include "recurquot/rational.hpp"

namespace recurquot {

using IntVector = std::vector<Integer>;
/// Row-major; all rows share one length.
using IntMatrix = std::vector<IntVector>;

/// Row-style Hermite normal form: `transform * input == form`, `transform`
/// unimodular. The first `rank` rows of `form` are echelon with positive
/// pivots and entries above each pivot reduced into [0, pivot); the rest are
/// zero, and the matching rows of `transform` span the left kernel.
struct HermiteDecomposition {
  IntMatrix form;
  IntMatrix transform;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

HermiteDecomposition hermite_form(const IntMatrix& input, std::size_t columns);

/// Non-zero invariant factors d1 | d2 | ... of the Smith normal form.
std::vector<Integer> smith_invariants(const IntMatrix& input, std::size_t columns);

/// Solves coeffs * H = target for an echelon H from hermite_form. Returns
/// false if target is not in the row lattice.
bool solve_in_lattice(const HermiteDecomposition& hnf, const IntVector& target, IntVector& coeffs);

}  // namespace recurquot
