#include "gnx/multiplier.hpp"

#include <cmath>
#include <stdexcept>

namespace gnx {

Field apply_multiplier(const Field& f, const MultiplierSpec& m) {
    Field g = to_frequency(f);

    if (m.order < 0.0 && m.zero_mode == ZeroModePolicy::error) {
        // Mean of f is the zero-mode coefficient over the box volume.
        double l2 = 0.0;
        for (const auto& v : g.values) l2 += std::norm(v);
        double ref = std::sqrt(l2);
        if (std::abs(g.values[0]) > 1e-12 * (ref > 0.0 ? ref : 1.0))
            throw std::domain_error(
                "apply_multiplier: negative order requires vanishing mean");
    }

    for (std::size_t i = 0; i < g.values.size(); ++i) {
        double xi2 = g.grid.freq_norm_sq(i);
        if (xi2 == 0.0) {
            if (m.order > 0.0)
                g.values[i] = 0.0;
            else if (m.order < 0.0)
                g.values[i] = 0.0;  // policy {zero}; {error} rejected above
            // order == 0: identity
        } else {
            g.values[i] *= std::pow(xi2, 0.5 * m.order);
        }
    }
    return in_space(g, f.space);
}

Field translate(const Field& f, std::span<const double> shift) {
    if (static_cast<int>(shift.size()) != f.grid.dim())
        throw std::invalid_argument("translate: shift dimension mismatch");
    Field g = to_frequency(f);
    int idx[3];
    for (std::size_t i = 0; i < g.values.size(); ++i) {
        g.grid.unflatten(i, idx);
        double phase = 0.0;
        for (int a = 0; a < g.grid.dim(); ++a)
            phase -= g.grid.frequency(idx[a]) * shift[a];
        g.values[i] *= std::polar(1.0, phase);
    }
    return in_space(g, f.space);
}

Field translate(const Field& f, double shift) {
    double a[1] = {shift};
    return translate(f, std::span<const double>(a, 1));
}

}  // namespace gnx
