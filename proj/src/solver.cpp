#include "gnx/solver.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "gnx/functionals.hpp"
#include "gnx/lemmas.hpp"
#include "gnx/multiplier.hpp"
#include "gnx/profiles.hpp"

namespace gnx {

namespace {

Field scaled(const Field& f, double a) {
    Field out = f;
    for (auto& v : out.values) v *= a;
    return out;
}

Field axpy(const Field& f, double step, const Field& g) {
    Field out = f;
    for (std::size_t i = 0; i < out.values.size(); ++i)
        out.values[i] += step * g.values[i];
    return out;
}

struct Objective {
    std::function<double(const Field&)> quotient;
    std::function<Field(const Field&)> gradient;
    // Rescale so the enforced norm is 1; returns the two gauge residuals,
    // enforced one second.
    std::function<std::array<double, 2>(Field&)> gauge;
    double s_order;  // spectral order used by the recentering cutoffs
};

OptimizationReport run_ascent(const Objective& obj, const Grid& grid,
                              const OptimizerConfig& cfg, const Field& init) {
    if (cfg.max_iters < 1 || !(cfg.tol > 0.0) || !(cfg.step0 > 0.0) ||
        !(cfg.backtrack > 0.0 && cfg.backtrack < 1.0))
        throw std::invalid_argument("optimize: malformed config");
    if (!(init.grid == grid))
        throw std::invalid_argument("optimize: init grid mismatch");

    OptimizationReport rep;
    Field phi = to_physical(init);
    auto residuals = obj.gauge(phi);
    double quot = obj.quotient(phi);
    rep.quotient_history.push_back(quot);
    rep.gauge_residuals.push_back(residuals);

    double step = cfg.step0;
    int plateau = 0;

    for (int iter = 1; iter <= cfg.max_iters; ++iter) {
        rep.iters_used = iter;

        if (cfg.recenter_every > 0 && iter % cfg.recenter_every == 0) {
            auto [shifted, loc] = recenter(phi, obj.s_order);
            bool moved = false;
            for (double c : loc)
                if (c != 0.0) moved = true;
            if (moved) {
                phi = std::move(shifted);
                rep.recenterings.push_back(loc);
            }
        }

        Field grad = obj.gradient(phi);
        double gnorm = lp_norm(grad, 2.0);
        rep.final_gradient_norm = gnorm;

        bool accepted = false;
        double trial_quot = quot;
        double st = step;
        Field trial;
        for (int k = 0; k < 60; ++k) {
            trial = axpy(phi, st, grad);
            obj.gauge(trial);
            trial_quot = obj.quotient(trial);
            if (trial_quot > quot) {
                accepted = true;
                break;
            }
            st *= cfg.backtrack;
        }

        double rel_change = 0.0;
        if (accepted) {
            rel_change = (trial_quot - quot) / quot;
            phi = std::move(trial);
            residuals = obj.gauge(phi);
            quot = trial_quot;
            step = std::min(st * 1.25, cfg.step0);
        }
        rep.quotient_history.push_back(quot);
        rep.gauge_residuals.push_back(residuals);

        plateau = rel_change < cfg.tol ? plateau + 1 : 0;
        if (plateau >= 5) {
            if (gnorm <= cfg.grad_tol) {
                rep.converged = true;
                break;
            }
            if (!accepted)
                throw std::runtime_error(
                    "optimize: step underflow (backtracking exhausted before "
                    "reaching the gradient tolerance)");
        }
    }

    rep.best_quotient = quot;
    rep.profile = std::move(phi);
    return rep;
}

}  // namespace

std::pair<Field, std::vector<double>> recenter(const Field& f, double s_order) {
    Field phys = to_physical(f);
    const Grid& grid = phys.grid;

    double max_f = 0.0;
    for (const auto& v : phys.values) max_f = std::max(max_f, std::abs(v));
    if (max_f == 0.0) throw std::domain_error("recenter: zero field");

    const double eta0 = 0.1;
    Field low = lowpass(phys);
    double max_low = 0.0;
    std::size_t arg = 0;
    for (std::size_t i = 0; i < low.values.size(); ++i) {
        double v = std::abs(low.values[i]);
        if (v > max_low) { max_low = v; arg = i; }
    }

    if (max_low < eta0 * max_f) {
        // High-frequency localization: scan scales of the high-pass part.
        Field high = highpass(phys);
        double sigma = 0.5 * std::min(s_order, 0.5 * grid.dim());
        arg = besov_scan(high, sigma, 1).argmax;
    }

    int idx[3];
    grid.unflatten(arg, idx);
    std::vector<double> loc(grid.dim());
    std::vector<double> neg(grid.dim());
    for (int a = 0; a < grid.dim(); ++a) {
        loc[a] = grid.coordinate(idx[a]);
        neg[a] = -loc[a];
    }
    return {translate(phys, neg), loc};
}

OptimizationReport optimize_gn(const GNParams& params, const Grid& grid,
                               const OptimizerConfig& cfg, const Field& init) {
    RegimeClass rc = classify_gn(params);
    if (!rc.attained())
        throw std::domain_error(std::string("optimize_gn: regime is ") +
                                regime_name(rc.kind) +
                                (rc.reason.empty() ? "" : " (" + rc.reason + ")") +
                                "; optimization requires Attained");
    Objective obj;
    obj.s_order = params.s;
    obj.quotient = [&params](const Field& f) { return gn_quotient(f, params); };
    obj.gradient = [&params](const Field& f) { return gn_gradient(f, params); };
    obj.gauge = [&params](Field& f) -> std::array<double, 2> {
        double ns = sobolev_seminorm(f, params.s);
        if (ns == 0.0) throw std::domain_error("optimize_gn: zero field");
        f = scaled(f, 1.0 / ns);
        double diag = std::abs(lp_norm(f, params.p) - 1.0);
        double enforced = std::abs(sobolev_seminorm(f, params.s) - 1.0);
        return {diag, enforced};
    };
    return run_ascent(obj, grid, cfg, init);
}

OptimizationReport optimize_riesz(const RieszParams& params, const Grid& grid,
                                  const OptimizerConfig& cfg, const Field& init) {
    RegimeClass rc = classify_riesz(params);
    if (!rc.attained())
        throw std::domain_error(std::string("optimize_riesz: regime is ") +
                                regime_name(rc.kind) +
                                (rc.reason.empty() ? "" : " (" + rc.reason + ")") +
                                "; optimization requires Attained");
    Objective obj;
    obj.s_order = params.s;
    obj.quotient = [&params](const Field& f) { return riesz_quotient(f, params); };
    obj.gradient = [&params](const Field& f) { return riesz_gradient(f, params); };
    obj.gauge = [&params](Field& f) -> std::array<double, 2> {
        double ns = sobolev_seminorm(f, params.s);
        if (ns == 0.0) throw std::domain_error("optimize_riesz: zero field");
        f = scaled(f, 1.0 / ns);
        double energy = riesz_energy(f, params.lambda, RieszMethod::fourier);
        double diag = std::abs(energy - 1.0);
        double enforced = std::abs(sobolev_seminorm(f, params.s) - 1.0);
        return {diag, enforced};
    };
    return run_ascent(obj, grid, cfg, init);
}

double endpoint_closed_form(double delta) {
    if (!(delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("endpoint_demo: delta must lie in (0, 1)");
    double d2 = delta * delta;
    return std::sqrt((1.0 + d2 / 3.0) /
                     std::sqrt(1.0 + 2.0 * d2 + d2 * d2 / 5.0));
}

std::vector<EndpointRow> endpoint_demo(const std::vector<double>& deltas) {
    // Fine frequency lattice so the band indicator is well resolved:
    // delta_xi = 1/2048, max |xi| = 4.
    const Grid grid = Grid::make(1, 16384, 4096.0 * std::numbers::pi);
    const GNParams params = GNParams::make(1, 1.0, 2.0, 2.0, 2.0);
    std::vector<EndpointRow> rows;
    for (double delta : deltas) {
        EndpointRow row;
        row.delta = delta;
        row.closed_form = endpoint_closed_form(delta);
        row.grid_value = gn_quotient(fourier_bump_profile(grid, delta), params);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace gnx
