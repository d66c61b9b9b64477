#pragma once

// Data-parallel inner loops for distance sweeps over column-major point data.
//
// Every kernel exists in a scalar reference form and, on capable hardware, a
// SIMD form (AVX2 on x86-64, NEON on aarch64). The active variant is chosen
// once at startup from CPU features and can be forced with GKNN_SIMD=scalar
// or GKNN_SIMD=avx2 / GKNN_SIMD=neon.
//
// All variants are required to produce bit-identical results: each output
// element is computed with the same IEEE operations in the same order in
// every lane, and the build disables FP contraction. The equivalence is
// enforced by tests, so higher layers may treat the dispatch as invisible.

#include <cstddef>

namespace gknn::simd {

// acc[i] += (col[i] - q)^2 for i in [0, n). One coordinate's contribution to
// squared Euclidean distances; callers sweep coordinates in ascending order.
void accumulate_sq_diff(double* acc, const double* col, double q, std::size_t n);

// acc[i] = max(acc[i], |col[i] - q|) for i in [0, n). Max-norm analogue.
void accumulate_abs_diff_max(double* acc, const double* col, double q, std::size_t n);

// Number of i in [0, n) with vals[i] < threshold (strict) or <= (non-strict).
std::size_t count_below(const double* vals, std::size_t n, double threshold, bool strict);

enum class variant { scalar, avx2, neon };

// The variant the dispatcher selected for this process.
variant active_variant();
const char* variant_name(variant v);

namespace detail {
// Direct entry points, exposed for the equivalence tests.
void accumulate_sq_diff_scalar(double* acc, const double* col, double q, std::size_t n);
void accumulate_abs_diff_max_scalar(double* acc, const double* col, double q, std::size_t n);
std::size_t count_below_scalar(const double* vals, std::size_t n, double threshold, bool strict);
#if defined(__x86_64__) || defined(_M_X64)
void accumulate_sq_diff_avx2(double* acc, const double* col, double q, std::size_t n);
void accumulate_abs_diff_max_avx2(double* acc, const double* col, double q, std::size_t n);
std::size_t count_below_avx2(const double* vals, std::size_t n, double threshold, bool strict);
#endif
#if defined(__aarch64__)
void accumulate_sq_diff_neon(double* acc, const double* col, double q, std::size_t n);
void accumulate_abs_diff_max_neon(double* acc, const double* col, double q, std::size_t n);
std::size_t count_below_neon(const double* vals, std::size_t n, double threshold, bool strict);
#endif
} // namespace detail

} // namespace gknn::simd
