#pragma once

#include <cstdint>

#include "gnx/field.hpp"

namespace gnx {

// Deterministic test/initialization profiles, all returned in physical space.

// exp(-|x|^2 / (2 sigma^2)), peak 1 at the origin.
Field gaussian_profile(const Grid& grid, double sigma);

// sech(|x|); equals sech(x) in d = 1.
Field sech_profile(const Grid& grid);

// d = 1 only: frequency coefficients set to the indicator of the one-sided
// band xi in (1 - delta, 1 + delta) on the lattice, delta in (0, 1).
Field fourier_bump_profile(const Grid& grid, double delta);

// Seeded complex Gaussian frequency coefficients with algebraic spectral
// decay (1 + |xi|^2)^(-decay/2); identical seed gives identical fields.
Field random_profile(const Grid& grid, std::uint64_t seed, double decay);

}  // namespace gnx
