#pragma once

#include <filesystem>

#include "galerkin/spectral_field.hpp"

namespace galerkin {

/// Binary coefficient file.
///
/// Layout (all integers little-endian):
///   bytes 0-7   magic "GLSPECF1"
///   u32         format version (1)
///   u32         endianness tag 0x01020304
///   u32         truncation shape (0 square, 1 ball)
///   u32         resolution n
///   f64         ball eigenvalue bound (0 for square)
///   then (re, im) f64 pairs for k2 = 0..h (outer), k1 = -h..h (inner),
///   i.e. the stored Hermitian half-plane in row-major order.
void write_field(const std::filesystem::path& path, const SpectralField& f);
SpectralField read_field(const std::filesystem::path& path);

} // namespace galerkin
