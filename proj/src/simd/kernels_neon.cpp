// NEON kernel variants for aarch64. Plain sub/mul/add only, matching the
// scalar reference bit-for-bit (no vfma).

#include "gknn/simd/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace gknn::simd::detail {

void accumulate_sq_diff_neon(double* acc, const double* col, double q, std::size_t n) {
    const float64x2_t qv = vdupq_n_f64(q);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t x = vld1q_f64(col + i);
        const float64x2_t a = vld1q_f64(acc + i);
        const float64x2_t t = vsubq_f64(x, qv);
        vst1q_f64(acc + i, vaddq_f64(a, vmulq_f64(t, t)));
    }
    for (; i < n; ++i) {
        const double t = col[i] - q;
        acc[i] += t * t;
    }
}

void accumulate_abs_diff_max_neon(double* acc, const double* col, double q, std::size_t n) {
    const float64x2_t qv = vdupq_n_f64(q);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t x = vld1q_f64(col + i);
        const float64x2_t a = vld1q_f64(acc + i);
        const float64x2_t t = vabsq_f64(vsubq_f64(x, qv));
        vst1q_f64(acc + i, vmaxq_f64(a, t));
    }
    for (; i < n; ++i) {
        double t = col[i] - q;
        if (t < 0.0) t = -t;
        if (t > acc[i]) acc[i] = t;
    }
}

std::size_t count_below_neon(const double* vals, std::size_t n, double threshold, bool strict) {
    const float64x2_t tv = vdupq_n_f64(threshold);
    std::size_t c = 0;
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t x = vld1q_f64(vals + i);
        const uint64x2_t m = strict ? vcltq_f64(x, tv) : vcleq_f64(x, tv);
        c += (vgetq_lane_u64(m, 0) & 1u) + (vgetq_lane_u64(m, 1) & 1u);
    }
    if (strict) {
        for (; i < n; ++i) c += vals[i] < threshold ? 1 : 0;
    } else {
        for (; i < n; ++i) c += vals[i] <= threshold ? 1 : 0;
    }
    return c;
}

} // namespace gknn::simd::detail

#endif // aarch64
