#pragma once

/* Exact Gaussian elimination over the rationals, deterministic pivoting. */

#include "f1hall/rational.hpp"

#include <vector>

namespace f1hall {

using RatMatrix = std::vector<std::vector<Rat>>;

/// Row-reduces in place (first nonzero pivot in column order) and returns
/// the rank.
int row_reduce(RatMatrix& m);

int rank(RatMatrix m);

/// Whether v lies in the row span of basis.
bool in_span(const RatMatrix& basis, const std::vector<Rat>& v);

}  // namespace f1hall
