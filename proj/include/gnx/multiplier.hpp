#pragma once

#include <span>

#include "gnx/field.hpp"

namespace gnx {

enum class ZeroModePolicy { zero, error };

// Fourier multiplier |xi|^order, realizing D^order with D = sqrt(-Laplacian).
// For order >= 0 the symbol at xi = 0 is 0^order (0 for order > 0, 1 for
// order = 0). For order < 0 the zero mode is singular and handled per policy.
struct MultiplierSpec {
    double order = 0.0;
    ZeroModePolicy zero_mode = ZeroModePolicy::zero;
};

// Output comes back in the same space as the input.
Field apply_multiplier(const Field& f, const MultiplierSpec& m);

// Shift by a real vector: frequency coefficients pick up exp(-i xi . a),
// so translate(f, a)(x) = f(x - a); exact for on-lattice shifts.
Field translate(const Field& f, std::span<const double> shift);
Field translate(const Field& f, double shift);  // d = 1 convenience

}  // namespace gnx
