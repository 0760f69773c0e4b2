#include "ocean/heightfield_io.hpp"

#include <cstring>
#include <fstream>
#include <vector>

namespace ocean {

namespace {
constexpr char kMagic[4] = {'A', 'B', 'H', 'F'};

template <typename T>
void put(std::ostream& out, T v) {
  char buf[sizeof(T)];
  std::memcpy(buf, &v, sizeof(T));
  out.write(buf, sizeof(T));
}

template <typename T>
T get(std::istream& in) {
  char buf[sizeof(T)];
  in.read(buf, sizeof(T));
  if (!in) throw IoError("heightfield: truncated stream");
  T v;
  std::memcpy(&v, buf, sizeof(T));
  return v;
}
}  // namespace

void write_heightfield(std::ostream& out, const HeightfieldHeader& header,
                       const RealField& field) {
  if (static_cast<uint32_t>(field.size()) != header.resolution)
    throw IoError("heightfield: header resolution does not match field");
  out.write(kMagic, 4);
  put(out, header.resolution);
  put(out, header.cascade);
  put(out, header.time);
  std::vector<float> row(field.size());
  for (int i = 0; i < field.size(); ++i) {
    for (int j = 0; j < field.size(); ++j) row[j] = static_cast<float>(field.at(i, j));
    out.write(reinterpret_cast<const char*>(row.data()),
              static_cast<std::streamsize>(row.size() * sizeof(float)));
  }
  if (!out) throw IoError("heightfield: write failed");
}

RealField read_heightfield(std::istream& in, HeightfieldHeader* header) {
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, kMagic, 4) != 0)
    throw IoError("heightfield: bad magic, not an ABHF file");
  HeightfieldHeader h;
  h.resolution = get<uint32_t>(in);
  h.cascade = get<int32_t>(in);
  h.time = get<float>(in);
  if (h.resolution == 0 || h.resolution > 1u << 16) throw IoError("heightfield: bad resolution");
  RealField field(static_cast<int>(h.resolution));
  for (int i = 0; i < field.size(); ++i)
    for (int j = 0; j < field.size(); ++j) field.at(i, j) = get<float>(in);
  if (header) *header = h;
  return field;
}

void write_heightfield_file(const std::string& path, const HeightfieldHeader& header,
                            const RealField& field) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  write_heightfield(out, header, field);
}

RealField read_heightfield_file(const std::string& path, HeightfieldHeader* header) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open: " + path);
  return read_heightfield(in, header);
}

void write_heightfield_csv(std::ostream& out, const RealField& field) {
  out.precision(9);
  for (int i = 0; i < field.size(); ++i) {
    for (int j = 0; j < field.size(); ++j) {
      if (j) out << ',';
      out << field.at(i, j);
    }
    out << '\n';
  }
}

void write_heightfield_csv_file(const std::string& path, const RealField& field) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  write_heightfield_csv(out, field);
}

}  // namespace ocean
