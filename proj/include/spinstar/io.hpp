#ifndef SPINSTAR_IO_HPP
#define SPINSTAR_IO_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "spinstar/phase_space.hpp"

namespace spinstar {

/// CSV: header row is the axis1 (phi) grid, one data row per axis0
/// entry with the axis0 value in the first column. 17 significant
/// digits, '.' decimal, LF endings.
void write_csv(const QRaster& raster, const std::string& path);

/// Binary P5 PGM, 16-bit big-endian, maxval 65535; pixel = round(65535 * Q),
/// row 0 = first axis0 entry.
void write_pgm(const QRaster& raster, const std::string& path);

void write_text(const std::string& content, const std::string& path);

/// FNV-1a 64-bit hash of a file's bytes, as 16 hex digits.
std::string file_checksum(const std::string& path);

/// One `key = value` per line, '#' comments, blank lines ignored.
/// Later keys override earlier ones.
std::map<std::string, std::string> parse_config_file(const std::string& path);
std::map<std::string, std::string> parse_config_text(const std::string& text);

std::string format_double(double v);

}  // namespace spinstar

#endif
