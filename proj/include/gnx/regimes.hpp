#pragma once

#include <string>

namespace gnx {

// Comparison tolerance for endpoint detection on user-typed rationals.
inline constexpr double kRegimeTol = 1e-12;

// Interpolation exponent fixed by the scaling relation
//   -r + d/q = (1-theta) d/p + theta (-s + d/2).
double gn_theta(int d, double r, double s, double p, double q);

// Exponent of the Riesz interpolation inequality,
//   theta = (2d - 2pd + p*lambda) / (d - 2ps - pd + p*lambda).
// Accepts p = infinity (limit value). Throws when the denominator vanishes
// (the lambda = 4s Sobolev-coincidence case).
double riesz_theta(int d, double s, double lambda, double p);

struct GNParams {
    int d = 1;
    double r = 0.0, s = 1.0, p = 2.0, q = 2.0;
    double theta = 0.0;  // derived

    // Computes theta; throws only on structurally meaningless input
    // (d outside 1..3, s <= 0, degenerate scaling denominator). Range
    // violations such as r > s are reported by classify_gn, not here.
    static GNParams make(int d, double r, double s, double p, double q);
};

struct RieszParams {
    int d = 1;
    double s = 1.0, lambda = 1.0, p = 2.0;
    double theta = 0.0;  // derived

    static RieszParams make(int d, double s, double lambda, double p);
};

enum class Regime {
    Attained,
    EndpointThetaEqualsRatio,
    EndpointThetaOne,
    EndpointPBoundary,
    EndpointPInfinity,
    Invalid,
};

struct RegimeClass {
    Regime kind = Regime::Invalid;
    std::string reason;    // populated for Invalid
    int riesz_case = 0;    // matching case index 1..5, Riesz only

    bool attained() const { return kind == Regime::Attained; }
};

const char* regime_name(Regime r);

RegimeClass classify_gn(const GNParams& p);
RegimeClass classify_riesz(const RieszParams& p);

}  // namespace gnx
