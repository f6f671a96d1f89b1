#pragma once

#include "msim/image.hpp"
#include "msim/raster.hpp"

#include <filesystem>
#include <iosfwd>

namespace msim {

// Binary Netpbm codecs. Only maxval 255 is accepted on read.
//
// Raster -> PGM mapping: value v becomes round(255 (v - min) / (max - min)),
// where min/max are taken over the raster; a constant raster maps to 0.

ColorImage read_ppm(std::istream& in);
ColorImage read_ppm(const std::filesystem::path& path);
void write_ppm(const ColorImage& img, std::ostream& out);
void write_ppm(const ColorImage& img, const std::filesystem::path& path);

/// 255 = object, 0 = background.
void write_pgm(const Mask& mask, std::ostream& out);
void write_pgm(const Mask& mask, const std::filesystem::path& path);
/// Nonzero samples decode as set bits.
Mask read_pgm_mask(std::istream& in);
Mask read_pgm_mask(const std::filesystem::path& path);

void write_pgm(const Raster& raster, std::ostream& out);
void write_pgm(const Raster& raster, const std::filesystem::path& path);

}  // namespace msim
