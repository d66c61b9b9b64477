#pragma once

#include "gknn/mathcore/svd.hpp"

namespace gknn::mathcore {

// Determinant of a square matrix with cols <= 8, by partially pivoted LU.
double determinant(const SmallMatrix& m);

} // namespace gknn::mathcore
