#include "gnx/regimes.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace gnx {

double gn_theta(int d, double r, double s, double p, double q) {
    if (d < 1 || d > 3) throw std::invalid_argument("gn_theta: d must be 1..3");
    if (!(s > 0.0)) throw std::invalid_argument("gn_theta: s must be positive");
    if (!(p > 1.0) || !(q > 1.0) || !std::isfinite(p) || !std::isfinite(q))
        throw std::invalid_argument("gn_theta: p, q must lie in (1, inf)");
    double denom = d / p + s - 0.5 * d;
    if (std::abs(denom) < kRegimeTol)
        throw std::domain_error("gn_theta: degenerate scaling denominator");
    return (d / p + r - d / q) / denom;
}

double riesz_theta(int d, double s, double lambda, double p) {
    if (d < 1 || d > 3) throw std::invalid_argument("riesz_theta: d must be 1..3");
    if (!(s > 0.0)) throw std::invalid_argument("riesz_theta: s must be positive");
    if (!(lambda > 0.0 && lambda < d))
        throw std::invalid_argument("riesz_theta: lambda must lie in (0, d)");
    if (!(p > 1.0)) throw std::invalid_argument("riesz_theta: p must exceed 1");
    if (std::isinf(p)) {
        double denom = lambda - d - 2.0 * s;
        return (lambda - 2.0 * d) / denom;
    }
    double denom = d - 2.0 * p * s - p * d + p * lambda;
    if (std::abs(denom) < kRegimeTol)
        throw std::domain_error("riesz_theta: vanishing denominator (lambda = 4s)");
    return (2.0 * d - 2.0 * p * d + p * lambda) / denom;
}

GNParams GNParams::make(int d, double r, double s, double p, double q) {
    GNParams out;
    out.d = d;
    out.r = r;
    out.s = s;
    out.p = p;
    out.q = q;
    out.theta = gn_theta(d, r, s, p, q);
    return out;
}

RieszParams RieszParams::make(int d, double s, double lambda, double p) {
    RieszParams out;
    out.d = d;
    out.s = s;
    out.lambda = lambda;
    out.p = p;
    // Lenient: out-of-range tuples carry theta = NaN and are reported as
    // Invalid by classify_riesz rather than throwing here.
    try {
        out.theta = riesz_theta(d, s, lambda, p);
    } catch (const std::exception&) {
        out.theta = std::numeric_limits<double>::quiet_NaN();
    }
    return out;
}

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::Attained: return "Attained";
        case Regime::EndpointThetaEqualsRatio: return "EndpointThetaEqualsRatio";
        case Regime::EndpointThetaOne: return "EndpointThetaOne";
        case Regime::EndpointPBoundary: return "EndpointPBoundary";
        case Regime::EndpointPInfinity: return "EndpointPInfinity";
        case Regime::Invalid: return "Invalid";
    }
    return "Invalid";
}

RegimeClass classify_gn(const GNParams& par) {
    RegimeClass out;
    if (par.r < 0.0) {
        out.reason = "r must be nonnegative";
        return out;
    }
    if (!(par.s > 0.0)) {
        out.reason = "s must be positive";
        return out;
    }
    if (par.r > par.s + kRegimeTol) {
        out.reason = "r <= s violated";
        return out;
    }
    if (!(par.p > 1.0) || !(par.q > 1.0) || !std::isfinite(par.p) ||
        !std::isfinite(par.q)) {
        out.reason = "p, q must lie in (1, inf)";
        return out;
    }
    double ratio = par.r / par.s;
    double theta = par.theta;
    if (theta < ratio - kRegimeTol || theta > 1.0 + kRegimeTol) {
        out.reason = "theta outside [r/s, 1]";
        return out;
    }
    if (std::abs(theta - 1.0) <= kRegimeTol) {
        out.kind = Regime::EndpointThetaOne;
        return out;
    }
    if (par.r > 0.0 && std::abs(theta - ratio) <= kRegimeTol) {
        out.kind = Regime::EndpointThetaEqualsRatio;
        return out;
    }
    if (par.r == 0.0 && std::abs(theta) <= kRegimeTol) {
        // Weinstein extension: r = 0 admitted, but theta = 0 is still a
        // degenerate corner with no derivative norm on the left.
        out.reason = "theta = 0 with r = 0";
        return out;
    }
    out.kind = Regime::Attained;
    return out;
}

RegimeClass classify_riesz(const RieszParams& par) {
    RegimeClass out;
    if (!(par.s > 0.0)) {
        out.reason = "s must be positive";
        return out;
    }
    if (!(par.lambda > 0.0 && par.lambda < par.d)) {
        out.reason = "lambda must lie in (0, d)";
        return out;
    }
    if (!(par.p > 1.0)) {
        out.reason = "p must exceed 1";
        return out;
    }

    const double d = par.d, s = par.s, lam = par.lambda, p = par.p;
    const double p_lo = (d - lam + 4.0 * s) / (d - lam + 2.0 * s);
    const double p_sob = d > 2.0 * s ? d / (d - 2.0 * s)
                                     : std::numeric_limits<double>::infinity();
    const bool lam_lt = lam < 4.0 * s - kRegimeTol;
    const bool lam_eq = std::abs(lam - 4.0 * s) <= kRegimeTol;
    const bool d_gt = d > 2.0 * s + kRegimeTol;
    const bool d_eq = std::abs(d - 2.0 * s) <= kRegimeTol;

    auto near = [](double a, double b) {
        return std::isfinite(a) && std::isfinite(b) && std::abs(a - b) <= kRegimeTol;
    };

    double lo, hi;
    bool hi_closed;
    if (lam_lt && !d_gt && !d_eq) {          // case 1: d < 2s
        out.riesz_case = 1;
        lo = p_lo;
        hi = std::numeric_limits<double>::infinity();
        hi_closed = true;
    } else if (lam_lt && d_eq) {             // case 2: d = 2s
        out.riesz_case = 2;
        lo = p_lo;
        hi = std::numeric_limits<double>::infinity();
        hi_closed = false;
    } else if (lam_lt && d_gt) {             // case 3
        out.riesz_case = 3;
        lo = p_lo;
        hi = p_sob;
        hi_closed = true;
    } else if (lam_eq && d_gt) {             // case 4: single point
        out.riesz_case = 4;
        if (near(p, p_lo)) {
            out.kind = Regime::EndpointPBoundary;
            return out;
        }
        out.reason = "lambda = 4s admits only p = (d-lambda+4s)/(d-lambda+2s)";
        out.kind = Regime::Invalid;
        return out;
    } else if (!lam_lt && !lam_eq && d_gt) { // case 5: interval reversed
        out.riesz_case = 5;
        lo = p_sob;
        hi = p_lo;
        hi_closed = true;
    } else {
        out.reason = "no admissible case for (d, s, lambda)";
        return out;
    }

    const bool at_lo = near(p, lo);
    const bool at_hi = near(p, hi);
    const bool is_inf = std::isinf(p);
    if (is_inf) {
        if (std::isinf(hi) && hi_closed) {
            out.kind = Regime::EndpointPInfinity;
            return out;
        }
        out.reason = "p = inf outside admissible interval";
        out.kind = Regime::Invalid;
        return out;
    }
    if (p < lo - kRegimeTol || (std::isfinite(hi) && p > hi + kRegimeTol)) {
        out.reason = "p outside admissible interval";
        out.kind = Regime::Invalid;
        return out;
    }
    if (at_lo || at_hi || near(p, p_lo) || near(p, p_sob)) {
        out.kind = Regime::EndpointPBoundary;
        return out;
    }
    out.kind = Regime::Attained;
    return out;
}

}  // namespace gnx
