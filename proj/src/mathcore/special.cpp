#include "gknn/mathcore/special.hpp"

#include <cmath>

#include "gknn/common.hpp"

namespace gknn::mathcore {

namespace {

// Lanczos g = 7, n = 9 coefficient set.
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

constexpr double kHalfLogTwoPi = 0.91893853320467274178; // ln(2*pi)/2

double log_gamma_lanczos(double x) {
    // valid for x >= 0.5
    double acc = kLanczos[0];
    for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (x - 1.0 + i);
    const double t = x + kLanczosG - 0.5;
    return kHalfLogTwoPi + (x - 0.5) * std::log(t) - t + std::log(acc);
}

} // namespace

double log_gamma(double x) {
    if (!(x > 0.0)) throw domain_error("log_gamma: x must be > 0");
    if (x >= 0.5) return log_gamma_lanczos(x);
    // reflection for (0, 0.5)
    constexpr double pi = 3.14159265358979323846;
    return std::log(pi / std::sin(pi * x)) - log_gamma_lanczos(1.0 - x);
}

double digamma(double x) {
    if (!(x > 0.0)) throw domain_error("digamma: x must be > 0");
    double result = 0.0;
    while (x < 10.0) {
        result -= 1.0 / x;
        x += 1.0;
    }
    // asymptotic expansion, Bernoulli terms through B14
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    const double series =
        inv2 * (1.0 / 12.0 -
                inv2 * (1.0 / 120.0 -
                        inv2 * (1.0 / 252.0 -
                                inv2 * (1.0 / 240.0 -
                                        inv2 * (1.0 / 132.0 -
                                                inv2 * (691.0 / 32760.0 -
                                                        inv2 * (1.0 / 12.0)))))));
    return result + std::log(x) - 0.5 * inv - series;
}

double unit_ball_volume(std::size_t d) {
    if (d < 1 || d > 64) throw domain_error("unit_ball_volume: d must be in [1, 64]");
    constexpr double log_pi = 1.1447298858494001741; // ln(pi)
    const double half_d = 0.5 * static_cast<double>(d);
    return std::exp(half_d * log_pi - log_gamma(1.0 + half_d));
}

double ellipsoid_volume(const std::vector<double>& radii) {
    if (radii.empty()) throw domain_error("ellipsoid_volume: empty radii");
    double prod = 1.0;
    for (double r : radii) {
        if (!(r > 0.0)) throw domain_error("ellipsoid_volume: degenerate radius <= 0");
        prod *= r;
    }
    return unit_ball_volume(radii.size()) * prod;
}

} // namespace gknn::mathcore
