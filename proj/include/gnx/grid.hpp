#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>

namespace gnx {

// Periodic rectangular discretization of R^d (d = 1..3), isotropic:
// the same number of points n and box side L on every axis.
// Samples live at x_j = -L/2 + j*h, h = L/n; the frequency lattice is
// xi_k = 2*pi*k/L with k in {-n/2, ..., n/2-1} per axis.
class Grid {
public:
    Grid() = default;

    static Grid make(int dim, int n, double box_side) {
        if (dim < 1 || dim > 3)
            throw std::invalid_argument("grid: dimension must be 1, 2 or 3");
        if (n < 8)
            throw std::invalid_argument("grid: need at least 8 points per axis");
        if (!(box_side > 0.0))
            throw std::invalid_argument("grid: box side must be positive");
        // FFT-friendly sizes only. Powers of two are the common choice; even
        // 3- and 5-smooth sizes (48, 96, ...) are accepted for convergence
        // studies between dyadic resolutions.
        int m = n;
        while (m % 2 == 0) m /= 2;
        while (m % 3 == 0) m /= 3;
        while (m % 5 == 0) m /= 5;
        if (m != 1 || n % 2 != 0)
            throw std::invalid_argument(
                "grid: points per axis must be an even 2/3/5-smooth number "
                "(power of two recommended)");
        Grid g;
        g.dim_ = dim;
        g.n_ = n;
        g.box_ = box_side;
        return g;
    }

    int dim() const { return dim_; }
    int points_per_axis() const { return n_; }
    double box_side() const { return box_; }
    double spacing() const { return box_ / n_; }
    double cell_volume() const { return std::pow(spacing(), dim_); }

    std::size_t size() const {
        std::size_t s = 1;
        for (int a = 0; a < dim_; ++a) s *= static_cast<std::size_t>(n_);
        return s;
    }

    // Signed lattice index for storage index k in [0, n): maps to {-n/2..n/2-1}.
    int signed_mode(int k) const { return k < n_ / 2 ? k : k - n_; }

    // Frequency of storage index k along one axis.
    double frequency(int k) const {
        return 2.0 * std::numbers::pi * signed_mode(k) / box_;
    }

    // Physical coordinate of storage index j along one axis.
    double coordinate(int j) const { return -0.5 * box_ + j * spacing(); }

    // Decompose a flat row-major index into per-axis storage indices.
    void unflatten(std::size_t flat, int idx[3]) const {
        for (int a = dim_ - 1; a >= 0; --a) {
            idx[a] = static_cast<int>(flat % n_);
            flat /= n_;
        }
    }

    // |xi|^2 at a flat frequency-storage index.
    double freq_norm_sq(std::size_t flat) const {
        int idx[3];
        unflatten(flat, idx);
        double s = 0.0;
        for (int a = 0; a < dim_; ++a) {
            double xi = frequency(idx[a]);
            s += xi * xi;
        }
        return s;
    }

    double max_frequency() const {
        return std::numbers::pi * n_ / box_;  // Nyquist |xi| per axis
    }
    double min_frequency() const { return 2.0 * std::numbers::pi / box_; }

    bool operator==(const Grid&) const = default;

private:
    int dim_ = 0;
    int n_ = 0;
    double box_ = 0.0;
};

}  // namespace gnx
