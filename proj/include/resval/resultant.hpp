#pragma once

#include <vector>

#include "resval/exact.hpp"
#include "resval/polynomial.hpp"

namespace resval {

using IntegerMatrix = std::vector<std::vector<Integer>>;

/// Sylvester matrix of f and g, size (deg f + deg g) square.
IntegerMatrix sylvester_matrix(const Polynomial& f, const Polynomial& g);

/// Determinant by Bareiss fraction-free elimination with row pivoting.
Integer bareiss_determinant(IntegerMatrix m);

/// Resultant of two monic nonconstant polynomials, i.e. the product of
/// (alpha_i - beta_j) over their roots. The sign is not normalized: callers
/// use |r| or v_p(r). Throws NotMonicError for non-monic or constant input.
Integer resultant(const Polynomial& f, const Polynomial& g);

}  // namespace resval
