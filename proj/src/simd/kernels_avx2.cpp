// AVX2 kernel variants. This translation unit is compiled with -mavx2 (no
// FMA: fused multiply-add would round differently from the scalar path and
// break bitwise equivalence). The dispatcher only calls these after a cpuid
// check.

#include "gknn/simd/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace gknn::simd::detail {

void accumulate_sq_diff_avx2(double* acc, const double* col, double q, std::size_t n) {
    const __m256d qv = _mm256_set1_pd(q);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d x = _mm256_loadu_pd(col + i);
        const __m256d a = _mm256_loadu_pd(acc + i);
        const __m256d t = _mm256_sub_pd(x, qv);
        const __m256d r = _mm256_add_pd(a, _mm256_mul_pd(t, t));
        _mm256_storeu_pd(acc + i, r);
    }
    for (; i < n; ++i) {
        const double t = col[i] - q;
        acc[i] += t * t;
    }
}

void accumulate_abs_diff_max_avx2(double* acc, const double* col, double q, std::size_t n) {
    const __m256d qv = _mm256_set1_pd(q);
    const __m256d sign_mask = _mm256_set1_pd(-0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d x = _mm256_loadu_pd(col + i);
        const __m256d a = _mm256_loadu_pd(acc + i);
        const __m256d t = _mm256_andnot_pd(sign_mask, _mm256_sub_pd(x, qv));
        _mm256_storeu_pd(acc + i, _mm256_max_pd(a, t));
    }
    for (; i < n; ++i) {
        double t = col[i] - q;
        if (t < 0.0) t = -t;
        if (t > acc[i]) acc[i] = t;
    }
}

std::size_t count_below_avx2(const double* vals, std::size_t n, double threshold, bool strict) {
    const __m256d tv = _mm256_set1_pd(threshold);
    std::size_t c = 0;
    std::size_t i = 0;
    if (strict) {
        for (; i + 4 <= n; i += 4) {
            const __m256d x = _mm256_loadu_pd(vals + i);
            const int mask = _mm256_movemask_pd(_mm256_cmp_pd(x, tv, _CMP_LT_OQ));
            c += static_cast<std::size_t>(__builtin_popcount(mask));
        }
        for (; i < n; ++i) c += vals[i] < threshold ? 1 : 0;
    } else {
        for (; i + 4 <= n; i += 4) {
            const __m256d x = _mm256_loadu_pd(vals + i);
            const int mask = _mm256_movemask_pd(_mm256_cmp_pd(x, tv, _CMP_LE_OQ));
            c += static_cast<std::size_t>(__builtin_popcount(mask));
        }
        for (; i < n; ++i) c += vals[i] <= threshold ? 1 : 0;
    }
    return c;
}

} // namespace gknn::simd::detail

#endif // x86-64
