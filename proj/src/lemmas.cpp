#include "gnx/lemmas.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gnx/functionals.hpp"
#include "gnx/multiplier.hpp"
#include "gnx/profiles.hpp"
#include "gnx/regimes.hpp"

namespace gnx {

double smooth_cutoff(double t) {
    auto bump = [](double u) { return u > 0.0 ? std::exp(-1.0 / u) : 0.0; };
    if (t <= 1.0) return 1.0;
    if (t >= 2.0) return 0.0;
    double a = bump(2.0 - t);
    double b = bump(t - 1.0);
    return a / (a + b);
}

namespace {

Field apply_radial_symbol(const Field& f, double (*symbol)(double)) {
    Field g = to_frequency(f);
    for (std::size_t i = 0; i < g.values.size(); ++i)
        g.values[i] *= symbol(std::sqrt(g.grid.freq_norm_sq(i)));
    return in_space(g, f.space);
}

double chi1(double t) { return 1.0 - smooth_cutoff(t); }

}  // namespace

Field lowpass(const Field& f) { return apply_radial_symbol(f, &smooth_cutoff); }
Field highpass(const Field& f) { return apply_radial_symbol(f, &chi1); }

PqrConstants pqr_constants(double p, double q, double r, double alpha,
                           double beta, double gamma) {
    if (!(p >= 1.0 && p < q && q < r) || !std::isfinite(r))
        throw std::invalid_argument("pqr_constants: need 1 <= p < q < r < inf");
    if (!(alpha > 0.0 && beta > 0.0 && gamma > 0.0))
        throw std::invalid_argument("pqr_constants: alpha, beta, gamma must be positive");
    PqrConstants out;
    out.p = p; out.q = q; out.r = r;
    out.alpha = alpha; out.beta = beta; out.gamma = gamma;
    out.eta = std::pow(beta / (4.0 * alpha), 1.0 / (q - p));
    out.m_cap = std::pow(4.0 * gamma / beta, 1.0 / (r - q));
    out.c = beta / (2.0 * std::pow(out.m_cap, q));
    return out;
}

double superlevel_measure(const Field& f, double eta) {
    if (!(eta > 0.0)) throw std::invalid_argument("superlevel_measure: eta must be positive");
    Field phys = to_physical(f);
    std::size_t count = 0;
    for (const auto& v : phys.values)
        if (std::abs(v) > eta) ++count;
    return phys.grid.cell_volume() * static_cast<double>(count);
}

BLReport bl_nonlocal_verify(const Field& f, const Field& g,
                            const std::vector<double>& separations,
                            double lambda) {
    if (!(f.grid == g.grid))
        throw std::invalid_argument("bl_nonlocal_verify: grid mismatch");
    const Grid& grid = f.grid;
    const double h = grid.spacing();

    Field fp = to_physical(f);
    const double energy_f = riesz_energy(fp, lambda, RieszMethod::fourier);

    BLReport rep;
    for (double a : separations) {
        if (std::abs(a) > 0.5 * grid.box_side() + 1e-12)
            throw std::invalid_argument("bl_nonlocal_verify: separation exceeds L/2");
        double cells = a / h;
        if (std::abs(cells - std::round(cells)) > 1e-9)
            throw std::invalid_argument("bl_nonlocal_verify: separation must be on-lattice");

        std::vector<double> shift(grid.dim(), 0.0);
        shift[0] = a;
        Field ga = to_physical(translate(g, shift));

        Field fa(grid, Space::physical);
        for (std::size_t i = 0; i < fa.values.size(); ++i)
            fa.values[i] = fp.values[i] + ga.values[i];

        double lhs = riesz_energy(fa, lambda, RieszMethod::fourier);
        double rhs = energy_f + riesz_energy(ga, lambda, RieszMethod::fourier);

        // s_a = conj(f) * (f_a - f);  r_a = Re s_a
        Field sa(grid, Space::physical), ra(grid, Space::physical);
        Field rho_fa(grid, Space::physical), rho_f(grid, Space::physical);
        for (std::size_t i = 0; i < sa.values.size(); ++i) {
            sa.values[i] = std::conj(fp.values[i]) * ga.values[i];
            ra.values[i] = sa.values[i].real();
            rho_fa.values[i] = std::norm(fa.values[i]);
            rho_f.values[i] = std::norm(fp.values[i]);
        }
        double cross = std::abs(kernel_bilinear(sa, sa, lambda));
        double r1 = kernel_bilinear(ra, ra, lambda).real();
        double r2 = kernel_bilinear(ra, rho_fa, lambda).real();
        double r3 = kernel_bilinear(ra, rho_f, lambda).real();

        rep.separations.push_back(a);
        rep.residuals.push_back(std::abs(lhs - rhs));
        rep.cross_terms.push_back(cross);
        rep.remainders.push_back({r1, r2, r3});
    }
    return rep;
}

std::pair<double, double> riesz_cauchy_schwarz(const Field& g, const Field& h,
                                               double lambda) {
    double lhs = std::abs(kernel_bilinear(g, h, lambda));
    double bg = kernel_bilinear(g, g, lambda).real();
    double bh = kernel_bilinear(h, h, lambda).real();
    double rhs = std::sqrt(std::max(bg, 0.0)) * std::sqrt(std::max(bh, 0.0));
    return {lhs, rhs};
}

BesovScanResult besov_scan(const Field& f, double s, int per_octave) {
    if (per_octave < 1) throw std::invalid_argument("besov_scan: per_octave >= 1");
    Field freq = to_frequency(f);
    const Grid& grid = freq.grid;
    const int d = grid.dim();

    // The multiplier chi0(|xi|/A) is zero below A = xi_min/2 and identically
    // one above A = xi_max, where the functional decays like A^(s-d/2).
    const double a_lo = 0.5 * grid.min_frequency();
    const double a_hi = 2.0 * grid.max_frequency();
    const int jmin = static_cast<int>(std::floor(std::log2(a_lo) * per_octave));
    const int jmax = static_cast<int>(std::ceil(std::log2(a_hi) * per_octave));

    BesovScanResult best;
    for (int j = jmin; j <= jmax; ++j) {
        double A = std::pow(2.0, static_cast<double>(j) / per_octave);
        Field conv = freq;
        double amp = std::pow(A, -d);
        for (std::size_t i = 0; i < conv.values.size(); ++i) {
            double xi = std::sqrt(grid.freq_norm_sq(i));
            conv.values[i] *= amp * smooth_cutoff(xi / A);
        }
        Field phys = to_physical(conv);
        double m = 0.0;
        std::size_t arg = 0;
        for (std::size_t i = 0; i < phys.values.size(); ++i) {
            double v = std::abs(phys.values[i]);
            if (v > m) { m = v; arg = i; }
        }
        double value = std::pow(A, 0.5 * d + s) * m;
        if (value > best.value) {
            best.value = value;
            best.scale = A;
            best.argmax = arg;
        }
    }
    return best;
}

double besov_sup(const Field& f, double s, int per_octave) {
    if (!(s > 0.0 && s < 0.5 * f.grid.dim()))
        throw std::invalid_argument("besov_sup: need 0 < s < d/2");
    return besov_scan(f, s, per_octave).value;
}

double refined_sobolev_ratio(const std::vector<Field>& corpus, double s) {
    if (corpus.empty())
        throw std::invalid_argument("refined_sobolev_ratio: empty corpus");
    const int d = corpus.front().grid.dim();
    if (!(s > 0.0 && s < 0.5 * d))
        throw std::invalid_argument("refined_sobolev_ratio: need 0 < s < d/2");
    const double q = 2.0 * d / (d - 2.0 * s);
    double worst = 0.0;
    for (const Field& u : corpus) {
        double num = lp_norm(u, q);
        double den = std::pow(sobolev_seminorm(u, s), 2.0 / q) *
                     std::pow(besov_sup(u, s, 4), 1.0 - 2.0 / q);
        worst = std::max(worst, num / den);
    }
    return worst;
}

double interm_gn_ratio(const Field& psi, double s, double lambda, double p) {
    const int d = psi.grid.dim();
    if (!std::isfinite(p))
        throw std::invalid_argument("interm_gn_ratio: p must be finite");
    double theta = riesz_theta(d, s, lambda, p);
    double lo = (d - lambda) / (d + 2.0 * s - lambda);
    if (theta < lo - kRegimeTol || theta >= 1.0)
        throw std::domain_error("interm_gn_ratio: theta outside [(d-lambda)/(d+2s-lambda), 1)");
    const double a = 0.5 * (d - lambda);
    double lhs = lp_norm(apply_multiplier(psi, {a}), p);
    double rhs = std::pow(lp_norm(psi, 2.0), 1.0 - theta) *
                 std::pow(lp_norm(apply_multiplier(psi, {s + a}), 2.0 * p / (p + 1.0)),
                          theta);
    return lhs / rhs;
}

std::vector<Field> standard_corpus(const Grid& grid) {
    std::vector<Field> corpus;
    const double h = grid.spacing();
    const double sigmas[5] = {0.5, 0.75, 1.0, 1.5, 2.0};
    for (double sg : sigmas) corpus.push_back(gaussian_profile(grid, sg));
    // Translated copies, on-lattice.
    for (double sg : {0.5, 1.0, 2.0}) {
        std::vector<double> shift(grid.dim(), 0.0);
        shift[0] = std::round(0.125 * grid.box_side() / h) * h;
        corpus.push_back(translate(gaussian_profile(grid, sg), shift));
    }
    corpus.push_back(sech_profile(grid));
    {
        std::vector<double> shift(grid.dim(), 0.0);
        shift[0] = -std::round(0.1 * grid.box_side() / h) * h;
        corpus.push_back(translate(sech_profile(grid), shift));
    }
    // Two-bump superpositions.
    for (double amp : {0.5, 1.0}) {
        Field a = gaussian_profile(grid, 1.0);
        std::vector<double> shift(grid.dim(), 0.0);
        shift[0] = std::round(0.2 * grid.box_side() / h) * h;
        Field b = translate(gaussian_profile(grid, 0.75), shift);
        Field sum(grid, Space::physical);
        for (std::size_t i = 0; i < sum.values.size(); ++i)
            sum.values[i] = a.values[i] + amp * b.values[i];
        corpus.push_back(std::move(sum));
    }
    // Seeded smooth random fields.
    double decay = 0.5 * grid.dim() + 2.0;
    for (std::uint64_t seed = 1; seed <= 8; ++seed)
        corpus.push_back(random_profile(grid, seed, decay));
    return corpus;  // 20 members
}

}  // namespace gnx
