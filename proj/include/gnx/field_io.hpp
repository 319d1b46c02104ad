#pragma once

#include <iosfwd>
#include <string>

#include "gnx/field.hpp"

namespace gnx {

// "GNFLD1" binary field format: magic bytes GNFLD1, little-endian u32 d,
// u32 n per axis (d entries), f64 L per axis (d entries), then n^d
// interleaved f64 (re, im) pairs, row-major, physical space.
// Read/write round-trips bit-exactly.
void write_gnfld(std::ostream& os, const Field& f);
Field read_gnfld(std::istream& is);

void write_gnfld_file(const std::string& path, const Field& f);
Field read_gnfld_file(const std::string& path);

}  // namespace gnx
