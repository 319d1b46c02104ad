#pragma once

#include <complex>
#include <vector>

#include "gnx/grid.hpp"

namespace gnx {

enum class Space { physical, frequency };

using cplx = std::complex<double>;

// Complex samples on a Grid, row-major, in either physical or frequency
// space. Frequency values follow the continuum convention
//   fhat(xi_k) = h^d * sum_j f(x_j) exp(-i xi_k . x_j),
// so Plancherel reads  h^d sum |f_j|^2 = L^-d sum |fhat_k|^2.
struct Field {
    Grid grid;
    Space space = Space::physical;
    std::vector<cplx> values;

    Field() = default;
    Field(const Grid& g, Space sp)
        : grid(g), space(sp), values(g.size(), cplx(0.0, 0.0)) {}
};

// Out-of-place transforms; inputs are never mutated.
Field to_frequency(const Field& f);
Field to_physical(const Field& f);

// Transform to the requested space (identity if already there).
Field in_space(const Field& f, Space target);

}  // namespace gnx
