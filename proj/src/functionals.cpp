#include "gnx/functionals.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <tuple>

#include "gnx/fft.hpp"
#include "gnx/multiplier.hpp"

namespace gnx {

namespace {

// Compensated (Kahan) accumulator; keeps reductions reproducible.
class KahanSum {
public:
    void add(double x) {
        double y = x - c_;
        double t = s_ + y;
        c_ = (t - s_) - y;
        s_ = t;
    }
    double value() const { return s_; }

private:
    double s_ = 0.0, c_ = 0.0;
};

void require_nonzero(const Field& f, const char* who) {
    for (const auto& v : f.values)
        if (v != cplx(0.0, 0.0)) return;
    throw std::domain_error(std::string(who) + ": zero field");
}

// Unit-cell integral  I(d, lambda) = int_{[-1/2,1/2]^d} |u|^(-lambda) du,
// via the Gaussian representation
//   |u|^(-lambda) = Gamma(lambda/2)^{-1} int_0^inf t^{lambda/2-1} e^{-t|u|^2} dt,
// whose cube integral factorizes into 1-d error functions. The substitution
// t = e^w makes the integrand decay exponentially at both ends, so the
// trapezoid rule converges rapidly.
double unit_cell_integral(int d, double lambda) {
    if (d == 1)
        return 2.0 * std::pow(0.5, 1.0 - lambda) / (1.0 - lambda);
    const double wmin = -60.0, wmax = 60.0, dw = 0.01;
    KahanSum acc;
    for (double w = wmin; w <= wmax; w += dw) {
        double t = std::exp(w);
        double g = std::sqrt(std::numbers::pi / t) * std::erf(0.5 * std::sqrt(t));
        acc.add(std::pow(t, 0.5 * lambda) * std::pow(g, d));
    }
    return acc.value() * dw / std::tgamma(0.5 * lambda);
}

struct KernelKey {
    int d, n;
    double L, lambda;
    auto operator<=>(const KernelKey&) const = default;
};

std::mutex kernel_mutex;
std::map<KernelKey, std::vector<cplx>>& kernel_cache() {
    static std::map<KernelKey, std::vector<cplx>> cache;
    return cache;
}

// DFT of the Riesz kernel sampled on the doubled (2n per axis) grid, with
// the singular cell replaced by the analytic cell average.
const std::vector<cplx>& padded_kernel_dft(const Grid& g, double lambda) {
    std::lock_guard<std::mutex> lock(kernel_mutex);
    KernelKey key{g.dim(), g.points_per_axis(), g.box_side(), lambda};
    auto& cache = kernel_cache();
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    const int d = g.dim();
    const int n2 = 2 * g.points_per_axis();
    const double h = g.spacing();
    std::size_t total = 1;
    for (int a = 0; a < d; ++a) total *= static_cast<std::size_t>(n2);

    std::vector<cplx> kern(total);
    const double singular = cell_average_kernel(d, lambda, h);
    for (std::size_t flat = 0; flat < total; ++flat) {
        std::size_t rem = flat;
        double r2 = 0.0;
        for (int a = d - 1; a >= 0; --a) {
            int m = static_cast<int>(rem % n2);
            rem /= n2;
            int ms = m < n2 / 2 ? m : m - n2;  // displacement in (-n, n)
            double x = ms * h;
            r2 += x * x;
        }
        kern[flat] = r2 == 0.0 ? singular : std::pow(r2, -0.5 * lambda);
    }
    fft::dft(kern.data(), d, n2, -1);
    auto [pos, inserted] = cache.emplace(key, std::move(kern));
    return pos->second;
}

double direct_riesz_sum(const Field& f, double lambda) {
    const Grid& g = f.grid;
    const std::size_t total = g.size();
    const double h = g.spacing();
    const int d = g.dim();
    std::vector<double> rho(total);
    for (std::size_t i = 0; i < total; ++i) rho[i] = std::norm(f.values[i]);

    int idx[3];
    std::vector<std::array<double, 3>> pos(total);
    for (std::size_t i = 0; i < total; ++i) {
        g.unflatten(i, idx);
        for (int a = 0; a < d; ++a) pos[i][a] = g.coordinate(idx[a]);
    }

    const double diag = cell_average_kernel(d, lambda, h);
    KahanSum acc;
    for (std::size_t i = 0; i < total; ++i) {
        if (rho[i] == 0.0) continue;
        acc.add(rho[i] * rho[i] * diag);
        for (std::size_t j = i + 1; j < total; ++j) {
            double r2 = 0.0;
            for (int a = 0; a < d; ++a) {
                double dx = pos[i][a] - pos[j][a];
                r2 += dx * dx;
            }
            acc.add(2.0 * rho[i] * rho[j] * std::pow(r2, -0.5 * lambda));
        }
    }
    return acc.value() * g.cell_volume() * g.cell_volume();
}

}  // namespace

double lp_norm(const Field& f, double p) {
    if (!(p > 1.0)) throw std::invalid_argument("lp_norm: p must exceed 1");
    Field phys = to_physical(f);
    if (std::isinf(p)) {
        double m = 0.0;
        for (const auto& v : phys.values) m = std::max(m, std::abs(v));
        return m;
    }
    KahanSum acc;
    for (const auto& v : phys.values) acc.add(std::pow(std::abs(v), p));
    return std::pow(phys.grid.cell_volume() * acc.value(), 1.0 / p);
}

double sobolev_seminorm(const Field& f, double s) {
    if (!(s > 0.0)) throw std::invalid_argument("sobolev_seminorm: s must be positive");
    Field freq = to_frequency(f);
    KahanSum acc;
    for (std::size_t i = 0; i < freq.values.size(); ++i) {
        double xi2 = freq.grid.freq_norm_sq(i);
        if (xi2 == 0.0) continue;
        acc.add(std::pow(xi2, s) * std::norm(freq.values[i]));
    }
    double ld = std::pow(freq.grid.box_side(), freq.grid.dim());
    return std::sqrt(acc.value() / ld);
}

double cell_average_kernel(int d, double lambda, double h) {
    if (!(lambda > 0.0 && lambda < d))
        throw std::invalid_argument("cell_average_kernel: lambda must lie in (0, d)");
    static std::mutex m;
    static std::map<std::pair<int, double>, double> unit_cache;
    double unit;
    {
        std::lock_guard<std::mutex> lock(m);
        auto it = unit_cache.find({d, lambda});
        if (it == unit_cache.end())
            it = unit_cache.emplace(std::pair{d, lambda}, unit_cell_integral(d, lambda)).first;
        unit = it->second;
    }
    return std::pow(h, -lambda) * unit;
}

Field kernel_convolve(const Field& v, double lambda) {
    const Grid& g = v.grid;
    if (!(lambda > 0.0 && lambda < g.dim()))
        throw std::invalid_argument("kernel_convolve: lambda must lie in (0, d)");
    Field phys = to_physical(v);
    const int d = g.dim();
    const int n = g.points_per_axis();
    const int n2 = 2 * n;
    std::size_t total2 = 1;
    for (int a = 0; a < d; ++a) total2 *= static_cast<std::size_t>(n2);

    // Zero-pad onto the doubled grid (indices [0, n) per axis).
    std::vector<cplx> pad(total2, cplx(0.0, 0.0));
    int idx[3];
    for (std::size_t i = 0; i < g.size(); ++i) {
        g.unflatten(i, idx);
        std::size_t flat2 = 0;
        for (int a = 0; a < d; ++a) flat2 = flat2 * n2 + static_cast<std::size_t>(idx[a]);
        pad[flat2] = phys.values[i];
    }

    fft::dft(pad.data(), d, n2, -1);
    const auto& kdft = padded_kernel_dft(g, lambda);
    for (std::size_t i = 0; i < total2; ++i) pad[i] *= kdft[i];
    fft::dft(pad.data(), d, n2, +1);
    const double scale = g.cell_volume() / static_cast<double>(total2);

    Field out(g, Space::physical);
    for (std::size_t i = 0; i < g.size(); ++i) {
        g.unflatten(i, idx);
        std::size_t flat2 = 0;
        for (int a = 0; a < d; ++a) flat2 = flat2 * n2 + static_cast<std::size_t>(idx[a]);
        out.values[i] = pad[flat2] * scale;
    }
    return out;
}

Field riesz_potential(const Field& f, double lambda) {
    Field phys = to_physical(f);
    Field rho(phys.grid, Space::physical);
    for (std::size_t i = 0; i < rho.values.size(); ++i)
        rho.values[i] = std::norm(phys.values[i]);
    return kernel_convolve(rho, lambda);
}

double riesz_energy(const Field& f, double lambda, RieszMethod method) {
    const Grid& g = f.grid;
    if (!(lambda > 0.0 && lambda < g.dim()))
        throw std::invalid_argument("riesz_energy: lambda must lie in (0, d)");
    Field phys = to_physical(f);
    if (method == RieszMethod::direct) {
        if (g.size() > kDirectRieszCellLimit)
            throw std::invalid_argument("riesz_energy: grid too large for direct method");
        return direct_riesz_sum(phys, lambda);
    }
    Field pot = riesz_potential(phys, lambda);
    KahanSum acc;
    for (std::size_t i = 0; i < phys.values.size(); ++i)
        acc.add(std::norm(phys.values[i]) * pot.values[i].real());
    return acc.value() * g.cell_volume();
}

std::complex<double> kernel_bilinear(const Field& g, const Field& h, double lambda) {
    if (!(g.grid == h.grid))
        throw std::invalid_argument("kernel_bilinear: grid mismatch");
    Field gp = to_physical(g);
    Field conv = kernel_convolve(h, lambda);
    KahanSum re, im;
    for (std::size_t i = 0; i < gp.values.size(); ++i) {
        cplx t = std::conj(gp.values[i]) * conv.values[i];
        re.add(t.real());
        im.add(t.imag());
    }
    double hd = gp.grid.cell_volume();
    return cplx(re.value() * hd, im.value() * hd);
}

double gn_quotient(const Field& f, const GNParams& par) {
    RegimeClass rc = classify_gn(par);
    if (rc.kind == Regime::Invalid)
        throw std::invalid_argument("gn_quotient: invalid regime: " + rc.reason);
    require_nonzero(f, "gn_quotient");
    Field phys = to_physical(f);
    double num = par.r == 0.0
                     ? lp_norm(phys, par.q)
                     : lp_norm(apply_multiplier(phys, {par.r}), par.q);
    double np = lp_norm(phys, par.p);
    double ns = sobolev_seminorm(phys, par.s);
    return num / (std::pow(np, 1.0 - par.theta) * std::pow(ns, par.theta));
}

double riesz_quotient(const Field& f, const RieszParams& par) {
    RegimeClass rc = classify_riesz(par);
    if (rc.kind == Regime::Invalid)
        throw std::invalid_argument("riesz_quotient: invalid regime: " + rc.reason);
    if (!std::isfinite(par.theta))
        throw std::invalid_argument("riesz_quotient: theta undefined (lambda = 4s)");
    require_nonzero(f, "riesz_quotient");
    Field phys = to_physical(f);
    double num = lp_norm(phys, 2.0 * par.p);
    double ns = sobolev_seminorm(phys, par.s);
    double energy = riesz_energy(phys, par.lambda, RieszMethod::fourier);
    double th = par.theta;
    return num / (std::pow(ns, th / (2.0 - th)) *
                  std::pow(energy, (1.0 - th) / (4.0 - 2.0 * th)));
}

Field gn_gradient(const Field& f, const GNParams& par) {
    RegimeClass rc = classify_gn(par);
    if (rc.kind == Regime::Invalid)
        throw std::invalid_argument("gn_gradient: invalid regime: " + rc.reason);
    Field phys = to_physical(f);
    Field der = par.r == 0.0 ? phys : apply_multiplier(phys, {par.r});
    double nq = lp_norm(der, par.q);
    double np = lp_norm(phys, par.p);
    double ns = sobolev_seminorm(phys, par.s);
    if (nq == 0.0 || np == 0.0 || ns == 0.0)
        throw std::domain_error("gn_gradient: vanishing norm");

    Field a(phys.grid, Space::physical);
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        double m = std::abs(der.values[i]);
        a.values[i] = m == 0.0 ? cplx(0.0, 0.0)
                               : std::pow(m, par.q - 2.0) * der.values[i];
    }
    if (par.r != 0.0) a = apply_multiplier(a, {par.r});

    Field c = apply_multiplier(phys, {2.0 * par.s});

    const double wq = 1.0 / std::pow(nq, par.q);
    const double wp = (1.0 - par.theta) / std::pow(np, par.p);
    const double ws = par.theta / (ns * ns);
    Field grad(phys.grid, Space::physical);
    for (std::size_t i = 0; i < grad.values.size(); ++i) {
        double m = std::abs(phys.values[i]);
        cplx b = m == 0.0 ? cplx(0.0, 0.0)
                          : std::pow(m, par.p - 2.0) * phys.values[i];
        grad.values[i] = wq * a.values[i] - wp * b - ws * c.values[i];
    }
    return grad;
}

Field riesz_gradient(const Field& f, const RieszParams& par) {
    RegimeClass rc = classify_riesz(par);
    if (rc.kind == Regime::Invalid)
        throw std::invalid_argument("riesz_gradient: invalid regime: " + rc.reason);
    if (!std::isfinite(par.theta))
        throw std::invalid_argument("riesz_gradient: theta undefined (lambda = 4s)");
    Field phys = to_physical(f);
    const double twop = 2.0 * par.p;
    double n2p = lp_norm(phys, twop);
    double ns = sobolev_seminorm(phys, par.s);
    Field pot = riesz_potential(phys, par.lambda);
    KahanSum eacc;
    for (std::size_t i = 0; i < phys.values.size(); ++i)
        eacc.add(std::norm(phys.values[i]) * pot.values[i].real());
    double energy = eacc.value() * phys.grid.cell_volume();
    if (n2p == 0.0 || ns == 0.0 || energy == 0.0)
        throw std::domain_error("riesz_gradient: vanishing norm");

    Field c = apply_multiplier(phys, {2.0 * par.s});

    const double th = par.theta;
    const double wn = 1.0 / std::pow(n2p, twop);
    const double ws = (th / (2.0 - th)) / (ns * ns);
    const double we = ((1.0 - th) / (4.0 - 2.0 * th)) * 4.0 / energy;
    Field grad(phys.grid, Space::physical);
    for (std::size_t i = 0; i < grad.values.size(); ++i) {
        double m = std::abs(phys.values[i]);
        cplx lead = m == 0.0 ? cplx(0.0, 0.0)
                             : std::pow(m, twop - 2.0) * phys.values[i];
        grad.values[i] = wn * lead - ws * c.values[i] -
                         we * pot.values[i].real() * phys.values[i];
    }
    return grad;
}

}  // namespace gnx
