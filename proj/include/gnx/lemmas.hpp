#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "gnx/field.hpp"

namespace gnx {

// Smooth radial cutoff chi0: identically 1 on [0, 1], identically 0 on
// [2, inf), C^infinity in between (standard mollifier profile).
double smooth_cutoff(double t);

// chi0(|D|) f and (1 - chi0)(|D|) f.
Field lowpass(const Field& f);
Field highpass(const Field& f);

struct PqrConstants {
    double eta = 0.0;    // superlevel threshold
    double m_cap = 0.0;  // middle-layer amplitude cap M
    double c = 0.0;      // measure lower bound
    double p = 0.0, q = 0.0, r = 0.0;
    double alpha = 0.0, beta = 0.0, gamma = 0.0;
};

// Constructive constants of the three-layer truncation argument:
//   eta = (beta/(4 alpha))^(1/(q-p)),  M = (4 gamma/beta)^(1/(r-q)),
//   c = beta / (2 M^q).
// Any f with ||f||_p^p <= alpha, ||f||_q^q >= beta, ||f||_r^r <= gamma has
// |{|f| > eta}| >= c. Requires 1 <= p < q < r < infinity.
PqrConstants pqr_constants(double p, double q, double r, double alpha,
                           double beta, double gamma);

// h^d times the number of cells with |f_i| > eta.
double superlevel_measure(const Field& f, double eta);

struct BLReport {
    std::vector<double> separations;
    std::vector<double> residuals;    // |E(f + g_a) - E(f) - E(g_a)|
    std::vector<double> cross_terms;  // |B(s_a, s_a)|, s_a = conj(f) g_a
    // remainder triples (R1, R2, R3) of the energy decomposition
    std::vector<std::array<double, 3>> remainders;
};

// Energy-splitting check for the family f_a = f + g(. - a e_1): measures
// how the Riesz energy of the sum deviates from the sum of energies as the
// separation grows. Separations must be on-lattice and at most L/2.
BLReport bl_nonlocal_verify(const Field& f, const Field& g,
                            const std::vector<double>& separations,
                            double lambda);

// (|B(g,h)|, sqrt(B(g,g)) * sqrt(B(h,h))) for the kernel bilinear form;
// the kernel is non-negative definite, so lhs <= rhs up to rounding.
std::pair<double, double> riesz_cauchy_schwarz(const Field& g, const Field& h,
                                               double lambda);

struct BesovScanResult {
    double value = 0.0;
    double scale = 0.0;       // maximizing A
    std::size_t argmax = 0;   // flat physical index of the maximizing cell
};

// Scan of A^(d/2+s) * max_x |(theta(A .) * f)(x)| over a dyadic (or finer,
// per_octave subdivisions) ladder of scales spanning the grid's frequency
// range; theta is the mollifier whose transform is smooth_cutoff.
BesovScanResult besov_scan(const Field& f, double s, int per_octave);

// The sup functional itself; requires 0 < s < d/2.
double besov_sup(const Field& f, double s, int per_octave = 1);

// max over the corpus of ||u||_q / (|u|_{H^s}^(2/q) besov_sup(u)^(1-2/q)),
// q = 2d/(d-2s). Requires 0 < s < d/2 and a nonempty corpus.
double refined_sobolev_ratio(const std::vector<Field>& corpus, double s);

// ||D^((d-lambda)/2) psi||_p / (||psi||_2^(1-theta)
//   ||D^(s+(d-lambda)/2) psi||_{2p/(p+1)}^theta), theta from riesz_theta.
double interm_gn_ratio(const Field& psi, double s, double lambda, double p);

// Deterministic 20-member corpus (gaussians across scales and centers,
// sech bumps, seeded smooth random fields) for the ratio probes.
std::vector<Field> standard_corpus(const Grid& grid);

}  // namespace gnx
