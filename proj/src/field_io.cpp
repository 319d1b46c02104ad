#include "gnx/field_io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace gnx {

static_assert(std::endian::native == std::endian::little,
              "GNFLD1 I/O assumes a little-endian host");

namespace {

constexpr char kMagic[6] = {'G', 'N', 'F', 'L', 'D', '1'};

void put_u32(std::ostream& os, std::uint32_t v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof v);
}
void put_f64(std::ostream& os, double v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof v);
}
std::uint32_t get_u32(std::istream& is) {
    std::uint32_t v;
    is.read(reinterpret_cast<char*>(&v), sizeof v);
    return v;
}
double get_f64(std::istream& is) {
    double v;
    is.read(reinterpret_cast<char*>(&v), sizeof v);
    return v;
}

}  // namespace

void write_gnfld(std::ostream& os, const Field& f) {
    Field phys = to_physical(f);
    const Grid& g = phys.grid;
    os.write(kMagic, sizeof kMagic);
    put_u32(os, static_cast<std::uint32_t>(g.dim()));
    for (int a = 0; a < g.dim(); ++a)
        put_u32(os, static_cast<std::uint32_t>(g.points_per_axis()));
    for (int a = 0; a < g.dim(); ++a) put_f64(os, g.box_side());
    for (const auto& v : phys.values) {
        put_f64(os, v.real());
        put_f64(os, v.imag());
    }
    if (!os) throw std::runtime_error("gnfld: write failed");
}

Field read_gnfld(std::istream& is) {
    char magic[6];
    is.read(magic, sizeof magic);
    if (!is || std::memcmp(magic, kMagic, sizeof kMagic) != 0)
        throw std::runtime_error("gnfld: bad magic");
    std::uint32_t d = get_u32(is);
    if (d < 1 || d > 3) throw std::runtime_error("gnfld: bad dimension");
    std::uint32_t n0 = 0;
    for (std::uint32_t a = 0; a < d; ++a) {
        std::uint32_t n = get_u32(is);
        if (a == 0) n0 = n;
        else if (n != n0)
            throw std::runtime_error("gnfld: anisotropic grids unsupported");
    }
    double L0 = 0.0;
    for (std::uint32_t a = 0; a < d; ++a) {
        double L = get_f64(is);
        if (a == 0) L0 = L;
        else if (L != L0)
            throw std::runtime_error("gnfld: anisotropic grids unsupported");
    }
    Grid grid = Grid::make(static_cast<int>(d), static_cast<int>(n0), L0);
    Field f(grid, Space::physical);
    for (auto& v : f.values) {
        double re = get_f64(is);
        double im = get_f64(is);
        v = cplx(re, im);
    }
    if (!is) throw std::runtime_error("gnfld: truncated file");
    return f;
}

void write_gnfld_file(const std::string& path, const Field& f) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("gnfld: cannot open " + path);
    write_gnfld(os, f);
}

Field read_gnfld_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("gnfld: cannot open " + path);
    return read_gnfld(is);
}

}  // namespace gnx
