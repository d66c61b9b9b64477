#include "gknn/simd/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace gknn::simd {

namespace detail {

void accumulate_sq_diff_scalar(double* acc, const double* col, double q, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double t = col[i] - q;
        acc[i] += t * t;
    }
}

void accumulate_abs_diff_max_scalar(double* acc, const double* col, double q, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        double t = col[i] - q;
        if (t < 0.0) t = -t;
        if (t > acc[i]) acc[i] = t;
    }
}

std::size_t count_below_scalar(const double* vals, std::size_t n, double threshold, bool strict) {
    std::size_t c = 0;
    if (strict) {
        for (std::size_t i = 0; i < n; ++i) c += vals[i] < threshold ? 1 : 0;
    } else {
        for (std::size_t i = 0; i < n; ++i) c += vals[i] <= threshold ? 1 : 0;
    }
    return c;
}

} // namespace detail

namespace {

struct kernel_table {
    void (*acc_sq)(double*, const double*, double, std::size_t);
    void (*acc_max)(double*, const double*, double, std::size_t);
    std::size_t (*count)(const double*, std::size_t, double, bool);
    variant which;
};

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

kernel_table select_kernels() {
    kernel_table t{detail::accumulate_sq_diff_scalar,
                   detail::accumulate_abs_diff_max_scalar,
                   detail::count_below_scalar,
                   variant::scalar};
    const char* force = std::getenv("GKNN_SIMD");
    const bool want_scalar = force && std::strcmp(force, "scalar") == 0;
#if defined(__x86_64__) || defined(_M_X64)
    const bool want_avx2 = !force || std::strcmp(force, "avx2") == 0;
    if (!want_scalar && want_avx2 && cpu_has_avx2()) {
        t = {detail::accumulate_sq_diff_avx2,
             detail::accumulate_abs_diff_max_avx2,
             detail::count_below_avx2,
             variant::avx2};
    }
#elif defined(__aarch64__)
    const bool want_neon = !force || std::strcmp(force, "neon") == 0;
    if (!want_scalar && want_neon) {
        t = {detail::accumulate_sq_diff_neon,
             detail::accumulate_abs_diff_max_neon,
             detail::count_below_neon,
             variant::neon};
    }
#endif
    (void)want_scalar;
    return t;
}

const kernel_table& kernels() {
    static const kernel_table t = select_kernels();
    return t;
}

} // namespace

void accumulate_sq_diff(double* acc, const double* col, double q, std::size_t n) {
    kernels().acc_sq(acc, col, q, n);
}

void accumulate_abs_diff_max(double* acc, const double* col, double q, std::size_t n) {
    kernels().acc_max(acc, col, q, n);
}

std::size_t count_below(const double* vals, std::size_t n, double threshold, bool strict) {
    return kernels().count(vals, n, threshold, strict);
}

variant active_variant() { return kernels().which; }

const char* variant_name(variant v) {
    switch (v) {
        case variant::scalar: return "scalar";
        case variant::avx2: return "avx2";
        case variant::neon: return "neon";
    }
    return "unknown";
}

} // namespace gknn::simd
