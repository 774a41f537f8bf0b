#pragma once

#include <stdexcept>

namespace primezeta {

// The alternating-series prefactor 1/(1 - 2^(1-s)) was evaluated too close to
// one of its poles (s = 1, or sigma = 1 with tau a multiple of 2*pi/ln 2).
struct PoleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A reciprocal was requested for a magnitude below the representable floor.
struct OverflowGuard : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A scan window contained no usable minimum (the argmin sat on the window edge
// or the window was empty).
struct NoMinimumError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A quadrature failed to reach the requested tolerance; the message carries the
// achieved error estimate.
struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace primezeta
