#pragma once

// Special functions and volume formulas. Self-contained implementations so
// results do not depend on the host libm.

#include <cstddef>
#include <vector>

namespace gknn::mathcore {

// ln Gamma(x) for x > 0, Lanczos approximation (g = 7, 9 terms).
double log_gamma(double x);

// psi(x) for x > 0: recurrence up into the asymptotic region, then the
// Bernoulli series.
double digamma(double x);

// Volume of the unit ball in R^d, pi^{d/2} / Gamma(1 + d/2). 1 <= d <= 64.
double unit_ball_volume(std::size_t d);

// Volume of an axis-length-r ellipsoid: unit_ball_volume(d) * prod(radii).
// Any radius <= 0 is a degenerate-volume error.
double ellipsoid_volume(const std::vector<double>& radii);

} // namespace gknn::mathcore
