#include "gnx/profiles.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace gnx {

namespace {

double radius_sq(const Grid& g, std::size_t flat) {
    int idx[3];
    g.unflatten(flat, idx);
    double r2 = 0.0;
    for (int a = 0; a < g.dim(); ++a) {
        double x = g.coordinate(idx[a]);
        r2 += x * x;
    }
    return r2;
}

}  // namespace

Field gaussian_profile(const Grid& grid, double sigma) {
    if (!(sigma > 0.0)) throw std::invalid_argument("gaussian: sigma must be positive");
    Field f(grid, Space::physical);
    for (std::size_t i = 0; i < f.values.size(); ++i)
        f.values[i] = std::exp(-0.5 * radius_sq(grid, i) / (sigma * sigma));
    return f;
}

Field sech_profile(const Grid& grid) {
    Field f(grid, Space::physical);
    for (std::size_t i = 0; i < f.values.size(); ++i)
        f.values[i] = 1.0 / std::cosh(std::sqrt(radius_sq(grid, i)));
    return f;
}

Field fourier_bump_profile(const Grid& grid, double delta) {
    if (grid.dim() != 1)
        throw std::invalid_argument("fourier_bump: d = 1 only");
    if (!(delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("fourier_bump: delta must lie in (0, 1)");
    Field f(grid, Space::frequency);
    for (int k = 0; k < grid.points_per_axis(); ++k) {
        double xi = grid.frequency(k);
        if (xi > 1.0 - delta && xi < 1.0 + delta)
            f.values[static_cast<std::size_t>(k)] = 1.0;
    }
    return to_physical(f);
}

Field random_profile(const Grid& grid, std::uint64_t seed, double decay) {
    if (!(decay >= 0.0)) throw std::invalid_argument("random: decay must be >= 0");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    Field f(grid, Space::frequency);
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        double re = normal(rng), im = normal(rng);
        double xi2 = grid.freq_norm_sq(i);
        double amp = std::pow(1.0 + xi2, -0.5 * decay);
        f.values[i] = cplx(re, im) * amp;
    }
    return to_physical(f);
}

}  // namespace gnx
