// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// criterion fails. argv[1] must be the path to the gnx binary (used for the
// exit-code checks).

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "gnx/functionals.hpp"
#include "gnx/lemmas.hpp"
#include "gnx/multiplier.hpp"
#include "gnx/profiles.hpp"
#include "gnx/regimes.hpp"
#include "gnx/solver.hpp"

using namespace gnx;
using std::numbers::pi;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& what) {
    std::printf("criterion %d: %s — %s\n", criterion, pass ? "PASS" : "FAIL",
                what.c_str());
    if (!pass) ++g_failures;
}

int run_cli(const std::string& binary, const std::string& args) {
    std::string cmd = binary + " " + args + " >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    if (status < 0) return -1;
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Field random_physical(const Grid& grid, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Field f(grid, Space::physical);
    for (auto& v : f.values) v = cplx(gauss(rng), gauss(rng));
    return f;
}

// ---- criterion 1: endpoint non-attainment demo --------------------------

void criterion1() {
    bool ok = true;
    auto rows = endpoint_demo({0.25, 0.125, 0.0625});
    ok &= std::abs(rows[0].closed_form - 0.980877) < 1e-4;
    ok &= std::abs(rows[1].closed_form - 0.994897) < 1e-4;
    for (const auto& r : rows) {
        ok &= std::abs(r.closed_form - r.grid_value) <= 1e-4;
        ok &= r.grid_value < 1.0;
    }
    ok &= rows[1].grid_value > rows[0].grid_value;
    ok &= rows[2].grid_value > rows[1].grid_value;
    report(1, ok, "endpoint demo: closed forms, 1e-4 grid match, monotone");
}

// ---- criterion 2: Weinstein case -----------------------------------------

void criterion2() {
    Grid grid = Grid::make(1, 512, 60.0);
    auto par = GNParams::make(1, 0.0, 1.0, 2.0, 4.0);
    OptimizerConfig cfg;
    bool ok = true;
    for (int which = 0; which < 2; ++which) {
        Field init = which == 0 ? gaussian_profile(grid, 1.0)
                                : random_profile(grid, 5, 2.5);
        auto rep = optimize_gn(par, grid, cfg, init);
        ok &= rep.converged;
        ok &= std::abs(rep.best_quotient - 0.871685) < 1e-3;

        Field prof = to_physical(rep.profile);
        double c = 0.0;
        std::size_t arg = 0;
        for (std::size_t i = 0; i < prof.values.size(); ++i)
            if (std::abs(prof.values[i]) > c) { c = std::abs(prof.values[i]); arg = i; }
        double l2sq = 0.0;
        for (const auto& v : prof.values) l2sq += std::norm(v);
        l2sq *= grid.spacing();
        double b = l2sq / (2.0 * c * c);  // int sech^2((x-a)/b) = 2b
        double a = grid.coordinate(static_cast<int>(arg));
        cplx phase = prof.values[arg] / std::abs(prof.values[arg]);
        long double num = 0.0L, den = 0.0L;
        for (std::size_t i = 0; i < prof.values.size(); ++i) {
            double fit = c / std::cosh((grid.coordinate(static_cast<int>(i)) - a) / b);
            num += std::norm(prof.values[i] / phase - fit);
            den += fit * fit;
        }
        ok &= std::sqrt(static_cast<double>(num / den)) <= 5e-2;
    }
    report(2, ok, "Weinstein optimizer: 0.871685 +/- 1e-3, sech fit <= 5e-2");
}

// ---- criterion 3: gaussian GN endpoint quotient --------------------------

void criterion3() {
    Grid grid = Grid::make(1, 512, 40.0);
    auto par = GNParams::make(1, 1.0, 2.0, 2.0, 2.0);
    double q = gn_quotient(gaussian_profile(grid, 1.0), par);
    bool ok = std::abs(q - std::pow(3.0, -0.25)) <= 1e-4;
    report(3, ok, "gaussian quotient 3^(-1/4) on (1, 512, 40)");
}

// ---- criterion 4: Riesz energy dual-method agreement ----------------------

void criterion4() {
    bool ok = true;
    Grid g16 = Grid::make(3, 16, 10.0);
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Field f = random_profile(g16, seed, 2.5);
        double a = riesz_energy(f, 1.0, RieszMethod::fourier);
        double b = riesz_energy(f, 1.0, RieszMethod::direct);
        ok &= std::abs(a - b) / b <= 1e-3;
    }
    Grid g32 = Grid::make(3, 32, 16.0);
    double e = riesz_energy(gaussian_profile(g32, 1.0), 1.0, RieszMethod::fourier);
    double expect = std::sqrt(2.0) * std::pow(pi, 2.5);
    ok &= std::abs(e - expect) / expect <= 0.02;
    report(4, ok, "fourier vs direct <= 1e-3 (20 fields); Coulomb within 2%");
}

// ---- criterion 5: Riesz optimizer ----------------------------------------

void criterion5(const std::string& binary) {
    bool ok = true;
    auto par = RieszParams::make(3, 1.0, 1.0, 2.0);
    OptimizerConfig cfg;
    double best[2] = {0.0, 0.0};
    Grid grids[2] = {Grid::make(3, 32, 16.0), Grid::make(3, 48, 24.0)};
    for (int k = 0; k < 2; ++k) {
        auto rep = optimize_riesz(par, grids[k], cfg, gaussian_profile(grids[k], 1.0));
        ok &= rep.final_gradient_norm <= 1e-4;
        for (std::size_t i = 1; i < rep.quotient_history.size(); ++i)
            ok &= rep.quotient_history[i] >= rep.quotient_history[i - 1];
        best[k] = rep.best_quotient;
    }
    ok &= std::abs(best[0] - best[1]) / best[1] <= 0.02;
    // Endpoint p's must be rejected with exit code 2 by the CLI.
    ok &= run_cli(binary,
                  "optimize riesz --d 3 --s 1 --lambda 1 --p 1.5 --n 16 --L 10") == 2;
    ok &= run_cli(binary,
                  "optimize riesz --d 3 --s 1 --lambda 1 --p 3 --n 16 --L 10") == 2;
    report(5, ok, "Riesz optimizer: monotone, grad <= 1e-4, grids agree 2%, "
                  "endpoint p exits 2");
}

// ---- criterion 6: pqr sweep -----------------------------------------------

void criterion6() {
    bool ok = true;
    auto k = pqr_constants(1.0, 2.0, 3.0, 1.0, 2.0, 4.0);
    ok &= k.eta == 0.5 && k.m_cap == 8.0 && k.c == 1.0 / 64.0;

    Grid g = Grid::make(1, 256, 10.0);
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> amp(0.0, 2.0);
    std::uniform_real_distribution<double> expo(1.0, 6.0);
    int done = 0;
    while (done < 1000) {
        double e1 = expo(rng), e2 = expo(rng), e3 = expo(rng);
        double p = std::min({e1, e2, e3});
        double r = std::max({e1, e2, e3});
        double q = e1 + e2 + e3 - p - r;
        if (q - p < 0.1 || r - q < 0.1) continue;
        Field f(g, Space::physical);
        long double mp = 0.0L, mq = 0.0L, mr = 0.0L;
        for (auto& v : f.values) {
            double a = amp(rng);
            v = a;
            mp += std::pow(a, p);
            mq += std::pow(a, q);
            mr += std::pow(a, r);
        }
        double h = g.spacing();
        auto kk = pqr_constants(p, q, r, static_cast<double>(mp) * h,
                                static_cast<double>(mq) * h,
                                static_cast<double>(mr) * h);
        if (superlevel_measure(f, kk.eta) < kk.c) ok = false;
        ++done;
    }
    report(6, ok, "pqr: 10^3 step functions, zero violations; worked example");
}

// ---- criterion 7: non-local splitting -------------------------------------

void criterion7() {
    Grid g = Grid::make(3, 48, 32.0);
    Field f = gaussian_profile(g, 1.0);
    auto rep = bl_nonlocal_verify(f, f, {4.0, 6.0, 8.0}, 1.0);
    bool ok = rep.residuals[0] > rep.residuals[1] &&
              rep.residuals[1] > rep.residuals[2];
    double slope = std::log(rep.residuals[2] / rep.residuals[0]) /
                   std::log(rep.separations[2] / rep.separations[0]);
    ok &= slope > -1.5 && slope < -0.5;
    Field zero(g, Space::physical);
    auto z = bl_nonlocal_verify(f, zero, {4.0}, 1.0);
    ok &= z.residuals[0] <= 1e-12 * riesz_energy(f, 1.0, RieszMethod::fourier);
    report(7, ok, "energy splitting: decreasing residuals, slope in "
                  "[-1.5,-0.5], zero bump -> zero residual");
}

// ---- criterion 8: numerical-analysis invariants ----------------------------

void criterion8() {
    bool ok = true;

    // Plancherel.
    Grid g2 = Grid::make(2, 64, 9.0);
    Field f2 = random_physical(g2, 8);
    Field fh = to_frequency(f2);
    double phys = 0.0, freq = 0.0;
    for (const auto& v : f2.values) phys += std::norm(v);
    for (const auto& v : fh.values) freq += std::norm(v);
    phys *= g2.cell_volume();
    freq /= std::pow(g2.box_side(), 2);
    ok &= std::abs(phys - freq) / phys <= 1e-12;

    // Gradients vs finite differences, both quotients.
    Grid g1 = Grid::make(1, 64, 20.0);
    Field f = gaussian_profile(g1, 1.0);
    double hd = g1.cell_volume();
    auto fd_check = [&](auto quotient, const Field& grad) {
        bool local = true;
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            Field dir = random_physical(g1, seed);
            cplx ip = 0.0;
            for (std::size_t i = 0; i < dir.values.size(); ++i)
                ip += std::conj(dir.values[i]) * grad.values[i];
            double analytic = (ip * hd).real();
            double scale = std::max(std::abs(analytic),
                                    lp_norm(grad, 2.0) * lp_norm(dir, 2.0));
            double best = 1e300;
            for (double eps : {1e-3, 1e-4, 1e-5}) {
                Field plus = f, minus = f;
                for (std::size_t i = 0; i < f.values.size(); ++i) {
                    plus.values[i] += eps * dir.values[i];
                    minus.values[i] -= eps * dir.values[i];
                }
                double fd = (std::log(quotient(plus)) - std::log(quotient(minus))) /
                            (2 * eps);
                best = std::min(best, std::abs(fd - analytic) / scale);
            }
            local &= best <= 1e-4;
        }
        return local;
    };
    auto gnp = GNParams::make(1, 0.5, 1.0, 2.0, 3.0);
    ok &= fd_check([&](const Field& u) { return gn_quotient(u, gnp); },
                   gn_gradient(f, gnp));
    auto rzp = RieszParams::make(1, 1.0, 0.5, 3.0);
    ok &= fd_check([&](const Field& u) { return riesz_quotient(u, rzp); },
                   riesz_gradient(f, rzp));

    // Scalar / translation invariance of the GN quotient.
    auto wpar = GNParams::make(1, 0.0, 1.0, 2.0, 4.0);
    Grid gw = Grid::make(1, 512, 60.0);
    Field fw = gaussian_profile(gw, 1.0);
    double q0 = gn_quotient(fw, wpar);
    Field fs = fw;
    for (auto& v : fs.values) v *= cplx(2.5, 0.5);
    ok &= std::abs(gn_quotient(fs, wpar) - q0) <= 1e-10 * q0;
    Field ft = translate(fw, gw.spacing() * 41);
    ok &= std::abs(gn_quotient(ft, wpar) - q0) <= 1e-12 + 1e-12 * q0;

    // Gaussian dilation-family spread.
    Grid gd = Grid::make(1, 512, 80.0);
    double lo = 1e300, hi = 0.0;
    for (double sg : {0.5, 1.0, 2.0}) {
        double q = gn_quotient(gaussian_profile(gd, sg), wpar);
        lo = std::min(lo, q);
        hi = std::max(hi, q);
    }
    ok &= hi - lo <= 1e-6;

    // Kernel Cauchy-Schwarz, 10^3 pairs.
    Grid gk = Grid::make(1, 64, 10.0);
    for (std::uint64_t t = 0; t < 1000; ++t) {
        Field a = random_profile(gk, 2 * t + 1, 1.0);
        Field b = random_profile(gk, 2 * t + 2, 1.0);
        auto [lhs, rhs] = riesz_cauchy_schwarz(a, b, 0.5);
        ok &= lhs <= rhs * (1.0 + 1e-9);
    }

    // Elementary inequality, 10^4 samples.
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int t = 0; t < 10000; ++t) {
        double a = 0.01 + 0.98 * u(rng);
        double b = 1.0 - a;
        double x = 50.0 * u(rng) / std::max(1e-9, u(rng));
        double y = 50.0 * u(rng) / std::max(1e-9, u(rng));
        ok &= std::pow(1.0 + x, a) * std::pow(1.0 + y, b) >=
              (1.0 + std::pow(x, a) * std::pow(y, b)) * (1.0 - 1e-12);
    }

    report(8, ok, "Plancherel, FD gradients, invariances, dilation spread, "
                  "Cauchy-Schwarz, elementary inequality");
}

// ---- criterion 9: regime classifier ----------------------------------------

bool brute_interior(double d, double s, double lambda, double p, int* which) {
    const double tol = 1e-12;
    *which = 0;
    if (!(s > 0.0) || !(lambda > 0.0) || !(lambda < d) || !(p > 1.0)) return false;
    const double p_lo = (d - lambda + 4.0 * s) / (d - lambda + 2.0 * s);
    auto eq = [tol](double a, double b) { return std::abs(a - b) <= tol; };
    if (lambda < 4.0 * s - tol && d < 2.0 * s - tol) {
        *which = 1;
        return p > p_lo + tol && !std::isinf(p);
    }
    if (lambda < 4.0 * s - tol && eq(d, 2.0 * s)) {
        *which = 2;
        return p > p_lo + tol && !std::isinf(p);
    }
    if (lambda < 4.0 * s - tol && d > 2.0 * s + tol) {
        *which = 3;
        return p > p_lo + tol && p < d / (d - 2.0 * s) - tol;
    }
    if (eq(lambda, 4.0 * s) && d > 2.0 * s + tol) {
        *which = 4;
        return false;  // single boundary point, never interior
    }
    if (lambda > 4.0 * s + tol && d > 2.0 * s + tol) {
        *which = 5;
        return p > d / (d - 2.0 * s) + tol && p < p_lo - tol;
    }
    return false;
}

void criterion9() {
    bool ok = true;
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int t = 0; t < 10000; ++t) {
        int d = 1 + static_cast<int>(u(rng) * 3);
        double s = 0.1 + 1.4 * u(rng);
        double lambda = 0.05 + (d - 0.1) * u(rng);
        double p = 1.01 + 9.0 * u(rng);
        int which = 0;
        bool interior = brute_interior(d, s, lambda, p, &which);
        auto rc = classify_riesz(RieszParams::make(d, s, lambda, p));
        if (interior) {
            ok &= rc.kind == Regime::Attained && rc.riesz_case == which;
        } else {
            ok &= rc.kind != Regime::Attained;
        }
    }
    ok &= classify_riesz(RieszParams::make(3, 1.0, 1.0, 2.0)).kind ==
          Regime::Attained;
    ok &= classify_riesz(RieszParams::make(3, 1.0, 1.0, 3.0)).kind ==
          Regime::EndpointPBoundary;
    ok &= classify_riesz(RieszParams::make(3, 0.25, 1.0, 1.2)).kind ==
          Regime::EndpointPBoundary;
    report(9, ok, "classifier vs brute force (10^4 tuples) and quoted rows");
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: acceptance <path-to-gnx-binary>\n");
        return 2;
    }
    std::string binary = argv[1];
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5(binary);
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    std::printf("%s\n", g_failures == 0 ? "all criteria passed"
                                        : "some criteria FAILED");
    return g_failures == 0 ? 0 : 1;
}
