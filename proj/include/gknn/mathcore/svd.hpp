#pragma once

// Small dense matrices and singular value extraction.
//
// The SVD here is deliberately minimal: estimator neighborhoods produce tall
// thin matrices with very few columns, so singular values and right singular
// vectors are recovered from a cyclic Jacobi eigendecomposition of the d x d
// Gram matrix. Left singular vectors are never formed.

#include <cstddef>
#include <vector>

#include "gknn/common.hpp"

namespace gknn::mathcore {

// Dense row-major matrix. rows >= 1 and cols >= 1 are enforced on
// construction; finiteness is checked by the operations that require it.
struct SmallMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> entries; // row-major, rows * cols

    SmallMatrix(std::size_t r, std::size_t c, double fill = 0.0);
    SmallMatrix(std::size_t r, std::size_t c, std::vector<double> data);

    double& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
    double at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }

    bool all_finite() const;
    static SmallMatrix identity(std::size_t d);
};

// Eigendecomposition of a symmetric matrix: values sorted nonincreasing,
// vectors as the matching columns of an orthonormal matrix.
struct EigenResult {
    std::vector<double> values;
    SmallMatrix vectors;
};

// Cyclic Jacobi iteration, run until the off-diagonal Frobenius mass drops
// below 1e-14 relative to the input norm. The input must be symmetric.
EigenResult symmetric_jacobi_eigen(const SmallMatrix& sym);

struct SvdResult {
    std::vector<double> singular_values;  // nonincreasing, >= 0
    SmallMatrix right_singular_vectors;   // d x d, column l = v^(l)

    std::vector<double> singular_vector(std::size_t l) const;
};

// Singular values and right singular vectors of m via the Gram system m^T m.
// Values below 1e-300 are reported as exactly zero; the caller owns any
// degenerate-geometry policy. Requires cols <= 64 and finite entries.
SvdResult svd_thin(const SmallMatrix& m);

} // namespace gknn::mathcore
