// gnx — spectral optimizer and verification CLI for interpolation-inequality
// quotients on periodic grids.
//
// Exit codes: 0 success, 2 domain/regime rejection, 3 I/O failure,
// 4 verification failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gnx/field_io.hpp"
#include "gnx/functionals.hpp"
#include "gnx/lemmas.hpp"
#include "gnx/multiplier.hpp"
#include "gnx/profiles.hpp"
#include "gnx/regimes.hpp"
#include "gnx/solver.hpp"

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

constexpr const char* kSchema = "gnx-1";

int resolve_threads(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("GNX_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

// Merge a JSON config file under explicit flags: config entries become
// "--key value" tokens inserted before the user's flags, so flags given on
// the command line win (CLI11 options take the last occurrence).
std::vector<std::string> merge_config(const std::vector<std::string>& raw) {
    std::string config_path;
    std::vector<std::string> args;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] == "--config" && i + 1 < raw.size()) {
            config_path = raw[++i];
            continue;
        }
        args.push_back(raw[i]);
    }
    if (config_path.empty()) return args;

    std::ifstream is(config_path);
    if (!is) throw std::runtime_error("cannot open config " + config_path);
    json cfg = json::parse(is);

    // Subcommand tokens stay in front; config flags follow; explicit flags last.
    std::vector<std::string> merged;
    std::size_t i = 0;
    while (i < args.size() && !args[i].starts_with("--")) merged.push_back(args[i++]);
    for (auto& [key, value] : cfg.items()) {
        merged.push_back("--" + key);
        if (value.is_string())
            merged.push_back(value.get<std::string>());
        else if (!value.is_boolean())
            merged.push_back(value.dump());
    }
    for (; i < args.size(); ++i) merged.push_back(args[i]);
    return merged;
}

gnx::Field make_init(const std::string& spec, const gnx::Grid& grid,
                     double sigma, std::uint64_t seed, double decay) {
    if (spec == "gaussian") return gnx::gaussian_profile(grid, sigma);
    if (spec == "sech") return gnx::sech_profile(grid);
    if (spec == "random") return gnx::random_profile(grid, seed, decay);
    if (spec.starts_with("file:")) {
        gnx::Field f = gnx::read_gnfld_file(spec.substr(5));
        if (!(f.grid == grid))
            throw std::invalid_argument("init file grid does not match --n/--L");
        return f;
    }
    throw std::invalid_argument("unknown init '" + spec + "'");
}

void write_profile_csv(const std::string& path, const gnx::Field& f) {
    std::ofstream os(path, std::ios::binary);  // binary: LF line endings
    if (!os) throw std::runtime_error("cannot open " + path);
    os << "x,re,im,abs\n";
    const gnx::Grid& g = f.grid;
    char buf[160];
    auto emit = [&](double x, gnx::cplx v) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", x, v.real(),
                      v.imag(), std::abs(v));
        os << buf;
    };
    if (g.dim() == 1) {
        for (int j = 0; j < g.points_per_axis(); ++j)
            emit(g.coordinate(j), f.values[static_cast<std::size_t>(j)]);
    } else {
        // Axis cut along x through the origin cell.
        int n = g.points_per_axis();
        int mid = n / 2;
        for (int j = 0; j < n; ++j) {
            std::size_t flat = static_cast<std::size_t>(j);
            for (int a = 1; a < g.dim(); ++a)
                flat = flat * n + static_cast<std::size_t>(mid);
            emit(g.coordinate(j), f.values[flat]);
        }
    }
}

json report_header(const std::string& command, const json& config, int threads) {
    json rep;
    rep["schema"] = kSchema;
    rep["command"] = command;
    rep["threads"] = threads;
    rep["config"] = config;
    return rep;
}

void emit(std::ostream& os, const json& rep, const std::string& out_path) {
    std::string text = rep.dump(2);
    text.push_back('\n');
    if (!out_path.empty()) {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open " + out_path);
        f << text;
    }
    os << text;
}

// ---------------------------------------------------------------- verify ---

json verify_pqr(int trials, std::uint64_t seed) {
    gnx::Grid grid = gnx::Grid::make(1, 256, 10.0);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> amp(0.0, 2.0);
    std::uniform_real_distribution<double> expo(1.0, 6.0);
    double min_slack = std::numeric_limits<double>::infinity();
    int violations = 0;
    for (int t = 0; t < trials; ++t) {
        double e1 = expo(rng), e2 = expo(rng), e3 = expo(rng);
        double p = std::min({e1, e2, e3});
        double r = std::max({e1, e2, e3});
        double q = e1 + e2 + e3 - p - r;
        if (r - q < 0.1 || q - p < 0.1) { --t; continue; }
        gnx::Field f(grid, gnx::Space::physical);
        for (auto& v : f.values) v = amp(rng);
        auto k = gnx::pqr_constants(
            p, q, r,
            std::pow(gnx::lp_norm(f, std::max(p, 1.000001)), p),
            std::pow(gnx::lp_norm(f, q), q), std::pow(gnx::lp_norm(f, r), r));
        double measure = gnx::superlevel_measure(f, k.eta);
        double slack = measure / k.c;
        min_slack = std::min(min_slack, slack);
        if (measure < k.c) ++violations;
    }
    json out;
    out["trials"] = trials;
    out["violations"] = violations;
    out["min_slack_ratio"] = min_slack;
    out["pass"] = violations == 0;
    return out;
}

json verify_cauchy_schwarz(int trials, std::uint64_t seed) {
    gnx::Grid grid = gnx::Grid::make(2, 32, 10.0);
    double worst = 0.0;
    int violations = 0;
    for (int t = 0; t < trials; ++t) {
        gnx::Field g = gnx::random_profile(grid, seed + 2 * t, 2.0);
        gnx::Field h = gnx::random_profile(grid, seed + 2 * t + 1, 2.0);
        auto [lhs, rhs] = gnx::riesz_cauchy_schwarz(g, h, 1.0);
        worst = std::max(worst, lhs / rhs);
        if (lhs > rhs * (1.0 + 1e-9)) ++violations;
    }
    json out;
    out["trials"] = trials;
    out["violations"] = violations;
    out["max_lhs_over_rhs"] = worst;
    out["pass"] = violations == 0;
    return out;
}

json verify_bl() {
    gnx::Grid grid = gnx::Grid::make(3, 48, 32.0);
    gnx::Field f = gnx::gaussian_profile(grid, 1.0);
    gnx::Field g = gnx::gaussian_profile(grid, 1.0);
    std::vector<double> seps = {4.0, 6.0, 8.0};
    auto rep = gnx::bl_nonlocal_verify(f, g, seps, 1.0);
    bool decreasing = rep.residuals[0] > rep.residuals[1] &&
                      rep.residuals[1] > rep.residuals[2];
    double slope =
        std::log(rep.residuals.back() / rep.residuals.front()) /
        std::log(rep.separations.back() / rep.separations.front());
    bool slope_ok = slope > -1.5 && slope < -0.5;
    json out;
    out["separations"] = rep.separations;
    out["residuals"] = rep.residuals;
    out["cross_terms"] = rep.cross_terms;
    out["loglog_slope"] = slope;
    out["pass"] = decreasing && slope_ok;
    return out;
}

json verify_refined_sobolev() {
    gnx::Grid grid = gnx::Grid::make(3, 32, 16.0);
    const double s = 1.0;
    auto corpus = gnx::standard_corpus(grid);
    double worst = gnx::refined_sobolev_ratio(corpus, s);
    // Dilation invariance across the gaussian family.
    auto ratio = [&](double sg) {
        std::vector<gnx::Field> one = {gnx::gaussian_profile(grid, sg)};
        return gnx::refined_sobolev_ratio(one, s);
    };
    // Scales chosen so every member is resolved on the 32^3 grid; the dyadic
    // ladder quantizes the sup over scales, hence the loose 5% tolerance.
    double ra = ratio(0.75), rb = ratio(1.0), rc = ratio(1.5);
    double spread = std::max({ra, rb, rc}) / std::min({ra, rb, rc}) - 1.0;
    json out;
    out["corpus_size"] = corpus.size();
    out["max_ratio"] = worst;
    out["gaussian_ratios"] = {ra, rb, rc};
    out["gaussian_spread"] = spread;
    out["pass"] = std::isfinite(worst) && worst > 0.0 && spread < 0.05;
    return out;
}

json verify_interm_gn() {
    gnx::Grid grid = gnx::Grid::make(3, 32, 16.0);
    const double s = 1.0, lambda = 1.0, p = 2.0;
    auto ratio = [&](double sg) {
        return gnx::interm_gn_ratio(gnx::gaussian_profile(grid, sg), s, lambda, p);
    };
    double r05 = ratio(0.5), r1 = ratio(1.0), r2 = ratio(2.0);
    double spread = std::max({r05, r1, r2}) / std::min({r05, r1, r2}) - 1.0;
    double worst = 0.0;
    for (const auto& u : gnx::standard_corpus(grid))
        worst = std::max(worst, gnx::interm_gn_ratio(u, s, lambda, p));
    json out;
    out["max_ratio"] = worst;
    out["gaussian_ratios"] = {r05, r1, r2};
    out["gaussian_spread"] = spread;
    out["pass"] = std::isfinite(worst) && worst > 0.0 && spread < 0.01;
    return out;
}

// ------------------------------------------------------------------ main ---

int run_command(const std::vector<std::string>& raw_args, std::ostream& out);

int run_sweep(const std::string& path, std::ostream& out) {
    std::ifstream is(path);
    if (!is) {
        out << "cannot open sweep file " << path << "\n";
        return 3;
    }
    json jobs = json::parse(is);
    std::vector<std::future<std::pair<int, std::string>>> futures;
    for (const auto& job : jobs) {
        std::vector<std::string> args = job.get<std::vector<std::string>>();
        futures.push_back(std::async(std::launch::async, [args] {
            std::ostringstream local;
            int code = run_command(args, local);
            return std::make_pair(code, local.str());
        }));
    }
    int worst = 0;
    for (std::size_t i = 0; i < futures.size(); ++i) {
        auto [code, text] = futures[i].get();
        out << text;
        out << "sweep job " << i << " exit " << code << "\n";
        worst = std::max(worst, code);
    }
    return worst;
}

int run_command(const std::vector<std::string>& raw_args, std::ostream& out) {
    std::vector<std::string> args;
    try {
        args = merge_config(raw_args);
    } catch (const std::exception& e) {
        out << "error: " << e.what() << "\n";
        return 3;
    }

    CLI::App app{"spectral interpolation-inequality optimizer"};
    app.require_subcommand(1);
    app.fallthrough();
    // Config-derived tokens precede explicit flags; the last occurrence wins.
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    int threads_flag = 0;
    app.add_option("--threads", threads_flag, "worker count (or env GNX_THREADS)");

    // regime
    auto* regime = app.add_subcommand("regime", "classify a parameter tuple");
    auto* regime_gn = regime->add_subcommand("gn");
    int rg_d = 1;
    double rg_r = 0, rg_s = 1, rg_p = 2, rg_q = 2;
    std::string regime_out;
    regime_gn->add_option("--d", rg_d)->required();
    regime_gn->add_option("--r", rg_r)->required();
    regime_gn->add_option("--s", rg_s)->required();
    regime_gn->add_option("--p", rg_p)->required();
    regime_gn->add_option("--q", rg_q)->required();
    regime_gn->add_option("--out", regime_out);
    auto* regime_riesz = regime->add_subcommand("riesz");
    int rr_d = 3;
    double rr_s = 1, rr_lambda = 1, rr_p = 2;
    regime_riesz->add_option("--d", rr_d)->required();
    regime_riesz->add_option("--s", rr_s)->required();
    regime_riesz->add_option("--lambda", rr_lambda)->required();
    regime_riesz->add_option("--p", rr_p)->required();
    regime_riesz->add_option("--out", regime_out);

    // optimize
    auto* optimize = app.add_subcommand("optimize", "search for an extremizer");
    std::string opt_kind;
    optimize->add_option("kind", opt_kind, "gn or riesz")->required();
    int o_d = 1, o_n = 512;
    double o_r = 0, o_s = 1, o_p = 2, o_q = 4, o_lambda = 1, o_L = 60.0;
    std::string o_init = "gaussian", o_out_dir = ".";
    double o_sigma = 1.0;
    gnx::OptimizerConfig ocfg;
    optimize->add_option("--d", o_d);
    optimize->add_option("--r", o_r);
    optimize->add_option("--s", o_s);
    optimize->add_option("--p", o_p);
    optimize->add_option("--q", o_q);
    optimize->add_option("--lambda", o_lambda);
    optimize->add_option("--n", o_n);
    optimize->add_option("--L", o_L);
    optimize->add_option("--init", o_init, "gaussian|sech|random|file:PATH");
    optimize->add_option("--sigma", o_sigma);
    optimize->add_option("--max-iters", ocfg.max_iters);
    optimize->add_option("--tol", ocfg.tol);
    optimize->add_option("--step0", ocfg.step0);
    optimize->add_option("--backtrack", ocfg.backtrack);
    optimize->add_option("--recenter-every", ocfg.recenter_every);
    optimize->add_option("--seed", ocfg.seed);
    optimize->add_option("--out", o_out_dir, "output directory");

    // energy
    auto* energy = app.add_subcommand("energy", "Riesz energy of a field file");
    std::string e_field, e_method = "fourier";
    double e_lambda = 1.0;
    energy->add_option("--field", e_field)->required();
    energy->add_option("--lambda", e_lambda)->required();
    energy->add_option("--method", e_method, "fourier|direct|both");

    // demo
    auto* demo = app.add_subcommand("demo", "closed-form demonstrations");
    auto* demo_endpoint = demo->add_subcommand("endpoint");
    std::vector<double> deltas = {0.25, 0.125, 0.0625};
    demo_endpoint->add_option("--deltas", deltas)->delimiter(',');

    // verify
    auto* verify = app.add_subcommand("verify", "lemma verification suites");
    std::string v_name;
    int v_trials = 1000;
    std::uint64_t v_seed = 1;
    verify->add_option("name", v_name,
                       "pqr|bl|cauchy-schwarz|refined-sobolev|interm-gn")
        ->required();
    verify->add_option("--trials", v_trials);
    verify->add_option("--seed", v_seed);

    // sweep
    auto* sweep = app.add_subcommand("sweep", "run independent jobs from a file");
    std::string sweep_file;
    sweep->add_option("file", sweep_file)->required();

    std::vector<const char*> argv;
    argv.push_back("gnx");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        std::ostringstream dummy;
        int code = app.exit(e, dummy, dummy);
        out << dummy.str();
        return code == 0 ? 0 : 2;
    }

    const int threads = resolve_threads(threads_flag);

    try {
        if (regime_gn->parsed()) {
            auto par = gnx::GNParams::make(rg_d, rg_r, rg_s, rg_p, rg_q);
            auto rc = gnx::classify_gn(par);
            json cfg = {{"d", rg_d}, {"r", rg_r}, {"s", rg_s}, {"p", rg_p}, {"q", rg_q}};
            json rep = report_header("regime gn", cfg, threads);
            rep["theta"] = par.theta;
            rep["class"] = gnx::regime_name(rc.kind);
            if (!rc.reason.empty()) rep["reason"] = rc.reason;
            emit(out, rep, regime_out);
            return rc.attained() ? 0 : 2;
        }
        if (regime_riesz->parsed()) {
            auto par = gnx::RieszParams::make(rr_d, rr_s, rr_lambda, rr_p);
            auto rc = gnx::classify_riesz(par);
            json cfg = {{"d", rr_d}, {"s", rr_s}, {"lambda", rr_lambda}, {"p", rr_p}};
            json rep = report_header("regime riesz", cfg, threads);
            rep["theta"] = par.theta;
            rep["class"] = gnx::regime_name(rc.kind);
            if (rc.riesz_case > 0) rep["case"] = rc.riesz_case;
            if (!rc.reason.empty()) rep["reason"] = rc.reason;
            emit(out, rep, regime_out);
            return rc.attained() ? 0 : 2;
        }
        if (optimize->parsed()) {
            gnx::Grid grid = gnx::Grid::make(o_d, o_n, o_L);
            double decay = o_s + 0.5 * o_d + 1.0;
            gnx::Field init = make_init(o_init, grid, o_sigma, ocfg.seed, decay);
            gnx::OptimizationReport rep;
            json cfg = {{"kind", opt_kind}, {"d", o_d},     {"n", o_n},
                        {"L", o_L},        {"init", o_init}, {"sigma", o_sigma},
                        {"seed", ocfg.seed}, {"max_iters", ocfg.max_iters},
                        {"tol", ocfg.tol},  {"step0", ocfg.step0},
                        {"backtrack", ocfg.backtrack},
                        {"recenter_every", ocfg.recenter_every}};
            if (opt_kind == "gn") {
                auto par = gnx::GNParams::make(o_d, o_r, o_s, o_p, o_q);
                cfg["r"] = o_r; cfg["s"] = o_s; cfg["p"] = o_p; cfg["q"] = o_q;
                cfg["theta"] = par.theta;
                rep = gnx::optimize_gn(par, grid, ocfg, init);
            } else if (opt_kind == "riesz") {
                auto par = gnx::RieszParams::make(o_d, o_s, o_lambda, o_p);
                cfg["s"] = o_s; cfg["lambda"] = o_lambda; cfg["p"] = o_p;
                cfg["theta"] = par.theta;
                rep = gnx::optimize_riesz(par, grid, ocfg, init);
            } else {
                out << "error: optimize kind must be gn or riesz\n";
                return 2;
            }
            fs::create_directories(o_out_dir);
            json j = report_header("optimize " + opt_kind, cfg, threads);
            j["best_quotient"] = rep.best_quotient;
            j["iters_used"] = rep.iters_used;
            j["converged"] = rep.converged;
            j["final_gradient_norm"] = rep.final_gradient_norm;
            j["final_gauge_residuals"] = rep.gauge_residuals.back();
            j["recenterings"] = rep.recenterings;
            j["quotient_history"] = rep.quotient_history;
            gnx::write_gnfld_file((fs::path(o_out_dir) / "profile.gnfld").string(),
                                  rep.profile);
            write_profile_csv((fs::path(o_out_dir) / "profile.csv").string(),
                              rep.profile);
            emit(out, j, (fs::path(o_out_dir) / "report.json").string());
            return 0;
        }
        if (energy->parsed()) {
            gnx::Field f;
            try {
                f = gnx::read_gnfld_file(e_field);
            } catch (const std::exception& e) {
                out << "error: " << e.what() << "\n";
                return 3;
            }
            json cfg = {{"field", e_field}, {"lambda", e_lambda}, {"method", e_method}};
            json rep = report_header("energy", cfg, threads);
            if (e_method == "fourier" || e_method == "both")
                rep["fourier"] = gnx::riesz_energy(f, e_lambda, gnx::RieszMethod::fourier);
            if (e_method == "direct" || e_method == "both")
                rep["direct"] = gnx::riesz_energy(f, e_lambda, gnx::RieszMethod::direct);
            if (e_method == "both") {
                double a = rep["fourier"].get<double>();
                double b = rep["direct"].get<double>();
                rep["relative_difference"] =
                    b == 0.0 ? std::abs(a - b) : std::abs(a - b) / std::abs(b);
            }
            if (e_method != "fourier" && e_method != "direct" && e_method != "both") {
                out << "error: method must be fourier, direct or both\n";
                return 2;
            }
            emit(out, rep, "");
            return 0;
        }
        if (demo_endpoint->parsed()) {
            auto rows = gnx::endpoint_demo(deltas);
            out << "delta,closed_form,grid_value,abs_diff\n";
            bool ok = true;
            char buf[160];
            for (const auto& r : rows) {
                double diff = std::abs(r.closed_form - r.grid_value);
                std::snprintf(buf, sizeof buf, "%.10g,%.10f,%.10f,%.3e\n", r.delta,
                              r.closed_form, r.grid_value, diff);
                out << buf;
                if (diff > 1e-4 || r.closed_form >= 1.0 || r.grid_value >= 1.0)
                    ok = false;
            }
            // Both columns must increase as delta decreases.
            for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
                if (rows[i].delta > rows[i + 1].delta) {
                    if (rows[i].closed_form >= rows[i + 1].closed_form) ok = false;
                    if (rows[i].grid_value >= rows[i + 1].grid_value) ok = false;
                } else {
                    if (rows[i].closed_form <= rows[i + 1].closed_form) ok = false;
                    if (rows[i].grid_value <= rows[i + 1].grid_value) ok = false;
                }
            }
            return ok ? 0 : 4;
        }
        if (verify->parsed()) {
            json result;
            if (v_name == "pqr") result = verify_pqr(v_trials, v_seed);
            else if (v_name == "cauchy-schwarz") result = verify_cauchy_schwarz(v_trials, v_seed);
            else if (v_name == "bl") result = verify_bl();
            else if (v_name == "refined-sobolev") result = verify_refined_sobolev();
            else if (v_name == "interm-gn") result = verify_interm_gn();
            else {
                out << "error: unknown verifier '" << v_name << "'\n";
                return 2;
            }
            json cfg = {{"name", v_name}, {"trials", v_trials}, {"seed", v_seed}};
            json rep = report_header("verify " + v_name, cfg, threads);
            rep["result"] = result;
            emit(out, rep, "");
            return result["pass"].get<bool>() ? 0 : 4;
        }
        if (sweep->parsed()) return run_sweep(sweep_file, out);
    } catch (const std::invalid_argument& e) {
        out << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        out << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        out << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run_command(args, std::cout);
}
