#pragma once

#include <vector>

#include "qpd/numerics/matrix.hpp"

namespace qpd::num {

/// Singular values of a complex matrix, sorted descending. One-sided Jacobi
/// orthogonalization on the columns; singular values keep high relative
/// accuracy, which the rank threshold downstream depends on. Throws
/// std::invalid_argument on non-finite entries.
std::vector<double> singular_values(const Matrix& matrix);

}  // namespace qpd::num
