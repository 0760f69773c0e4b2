#ifndef OCEAN_HEIGHTFIELD_IO_HPP
#define OCEAN_HEIGHTFIELD_IO_HPP

#include <iosfwd>
#include <string>

#include "ocean/core.hpp"

namespace ocean {

// Binary heightfield format, documented byte-exactly:
//   bytes 0..3   magic "ABHF" (ASCII)
//   bytes 4..7   uint32 little-endian: grid resolution N
//   bytes 8..11  int32 little-endian: cascade id, -1 for a composed field
//   bytes 12..15 float32 little-endian: sample time in seconds
//   bytes 16..   N*N float32 little-endian samples, row-major
struct HeightfieldHeader {
  uint32_t resolution = 0;
  int32_t cascade = -1;
  float time = 0.0f;
};

void write_heightfield(std::ostream& out, const HeightfieldHeader& header,
                       const RealField& field);
RealField read_heightfield(std::istream& in, HeightfieldHeader* header = nullptr);

void write_heightfield_file(const std::string& path, const HeightfieldHeader& header,
                            const RealField& field);
RealField read_heightfield_file(const std::string& path, HeightfieldHeader* header = nullptr);

// Plain CSV (one row per grid row), for small fields and spreadsheets.
void write_heightfield_csv(std::ostream& out, const RealField& field);
void write_heightfield_csv_file(const std::string& path, const RealField& field);

}  // namespace ocean

#endif
