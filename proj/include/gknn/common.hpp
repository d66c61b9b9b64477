#pragma once

// Shared error types and small utilities used across the library.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace gknn {

// Base class for all library errors. CLI maps subclasses to exit codes:
// invalid_input_error -> usage (1), everything else -> data/numerical (2).
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed arguments or inputs (non-finite entries, bad shapes, bad flags).
class invalid_input_error : public error {
public:
    explicit invalid_input_error(const std::string& what) : error(what) {}
};

// Argument outside a function's mathematical domain.
class domain_error : public error {
public:
    explicit domain_error(const std::string& what) : error(what) {}
};

// All k+1 points of a neighborhood coincide; the SVD has no usable direction.
class degenerate_neighborhood_error : public error {
public:
    degenerate_neighborhood_error(std::size_t point_index, const std::string& what)
        : error(what), point_index(point_index) {}
    std::size_t point_index;
};

// k-th neighbor at distance zero (at least k+1 coincident samples).
class coincident_points_error : public error {
public:
    coincident_points_error(std::size_t point_index, const std::string& what)
        : error(what), point_index(point_index) {}
    std::size_t point_index;
};

// Adaptive quadrature ran out of interval budget; carries the best value so far.
class quadrature_failure : public error {
public:
    quadrature_failure(double partial, const std::string& what)
        : error(what), partial_value(partial) {}
    double partial_value;
};

// Sample generation failed (e.g. trajectory repeatedly left the basin).
class generation_error : public error {
public:
    explicit generation_error(const std::string& what) : error(what) {}
};

// Resolves the worker-thread count: explicit request > GKNN_THREADS > hardware.
std::size_t resolve_thread_count(std::size_t requested);

// Runs fn(begin, end) over disjoint blocks of [0, n). Each index is handled by
// exactly one invocation, so writes to per-index slots are race-free. With
// threads <= 1 the call runs inline on the calling thread.
void parallel_for(std::size_t n, std::size_t threads,
                  const std::function<void(std::size_t, std::size_t)>& fn);

} // namespace gknn
