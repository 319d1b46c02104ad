#pragma once

#include <complex>

#include "gnx/field.hpp"
#include "gnx/regimes.hpp"

namespace gnx {

enum class RieszMethod { fourier, direct };

// Largest grid (total cells) on which the O(n^{2d}) direct Riesz sum runs.
inline constexpr std::size_t kDirectRieszCellLimit = 1u << 15;

// (h^d sum |f_i|^p)^(1/p); p = inf gives max |f_i|. Requires p > 1.
double lp_norm(const Field& f, double p);

// || |xi|^s fhat ||, i.e. the homogeneous Sobolev seminorm |f|_{H^s},
// evaluated in frequency space via Plancherel. Requires s > 0.
double sobolev_seminorm(const Field& f, double s);

// Mean of |x|^(-lambda) over one grid cell, used for the singular kernel
// cell; exposed for tests.
double cell_average_kernel(int d, double lambda, double h);

// Linear convolution of a complex field with the kernel |x|^(-lambda) on a
// zero-padded (doubled) grid; the singular cell carries its analytic cell
// average. Result is on the original grid, physical space.
Field kernel_convolve(const Field& v, double lambda);

// K_lambda * |f|^2 on the grid of f.
Field riesz_potential(const Field& f, double lambda);

// Approximates the double integral  iint |f(x)|^2 |f(y)|^2 |x-y|^(-lambda).
// fourier: zero-padded FFT convolution; direct: O(n^{2d}) double sum,
// permitted only for n^d <= 2^15 cells.
double riesz_energy(const Field& f, double lambda, RieszMethod method);

// Kernel bilinear form  B(g, h) = h^{2d} sum_ij conj(g_i) h_j K(x_i - x_j),
// same discretization (and singular-cell rule) as riesz_energy.
std::complex<double> kernel_bilinear(const Field& g, const Field& h, double lambda);

// ||D^r f||_q / (||f||_p^(1-theta) ||D^s f||_2^theta). Requires f != 0 and
// a non-Invalid parameter regime.
double gn_quotient(const Field& f, const GNParams& par);

// ||f||_{2p} / (|f|_{H^s}^(theta/(2-theta)) E^((1-theta)/(4-2theta))).
double riesz_quotient(const Field& f, const RieszParams& par);

// Variational gradient of log gn_quotient with respect to conj(f): the
// directional derivative of the log-quotient along h is Re<h, G> with
// <a, b> = h^d sum conj(a) b.
Field gn_gradient(const Field& f, const GNParams& par);
Field riesz_gradient(const Field& f, const RieszParams& par);

}  // namespace gnx
