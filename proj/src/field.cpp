#include "gnx/field.hpp"

#include "gnx/fft.hpp"

namespace gnx {

namespace {

// Parity (-1)^(k_1+...+k_d) of the storage index: the phase factor
// exp(+-i xi_k L/2) produced by the centered coordinate origin. n is even,
// so the signed mode has the same parity as the storage index.
double index_parity(const Grid& g, std::size_t flat) {
    int idx[3];
    g.unflatten(flat, idx);
    int sum = 0;
    for (int a = 0; a < g.dim(); ++a) sum += idx[a];
    return (sum & 1) ? -1.0 : 1.0;
}

}  // namespace

Field to_frequency(const Field& f) {
    if (f.space == Space::frequency) return f;
    Field out = f;
    fft::dft(out.values.data(), out.grid.dim(), out.grid.points_per_axis(), -1);
    const double hd = out.grid.cell_volume();
    for (std::size_t i = 0; i < out.values.size(); ++i)
        out.values[i] *= hd * index_parity(out.grid, i);
    out.space = Space::frequency;
    return out;
}

Field to_physical(const Field& f) {
    if (f.space == Space::physical) return f;
    Field out = f;
    for (std::size_t i = 0; i < out.values.size(); ++i)
        out.values[i] *= index_parity(out.grid, i);
    fft::dft(out.values.data(), out.grid.dim(), out.grid.points_per_axis(), +1);
    const double scale = 1.0 / std::pow(out.grid.box_side(), out.grid.dim());
    for (auto& v : out.values) v *= scale;
    out.space = Space::physical;
    return out;
}

Field in_space(const Field& f, Space target) {
    return target == Space::physical ? to_physical(f) : to_frequency(f);
}

}  // namespace gnx
