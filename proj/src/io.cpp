#include "psgen/io.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>

namespace psgen {

static_assert(std::endian::native == std::endian::little,
              "screen format I/O assumes a little-endian host");

namespace {

constexpr char kMagic[4] = {'P', 'H', 'S', 'C'};
constexpr std::size_t kHeaderSize = 32;

template <typename T>
void put(char* dst, const T& v) {
  std::memcpy(dst, &v, sizeof(T));
}

template <typename T>
T take(const char* src) {
  T v;
  std::memcpy(&v, src, sizeof(T));
  return v;
}

}  // namespace

void write_screen_record(std::ostream& out, const GridSpec& grid, const RealMatrix& values,
                         std::uint64_t record_index) {
  grid.validate();
  if (values.rows() != grid.nx || values.cols() != grid.ny)
    throw std::invalid_argument("write_screen_record: values do not match the grid");

  char header[kHeaderSize] = {};
  std::memcpy(header, kMagic, 4);
  put<std::uint16_t>(header + 4, kScreenFormatVersion);
  put<std::uint32_t>(header + 6, static_cast<std::uint32_t>(grid.nx));
  put<std::uint32_t>(header + 10, static_cast<std::uint32_t>(grid.ny));
  put<double>(header + 14, grid.side_m);
  put<std::uint64_t>(header + 22, record_index);
  out.write(header, kHeaderSize);

  std::vector<double> row(static_cast<std::size_t>(grid.ny));
  for (int j = 0; j < grid.nx; ++j) {
    for (int l = 0; l < grid.ny; ++l) row[static_cast<std::size_t>(l)] = values(j, l);
    out.write(reinterpret_cast<const char*>(row.data()),
              static_cast<std::streamsize>(sizeof(double) * row.size()));
  }
  if (!out) throw IoError("write_screen_record: stream write failed");
}

void write_complex_screen(std::ostream& out, const ComplexScreen& screen) {
  write_screen_record(out, screen.grid, screen.values.real(), 2 * screen.sample_index);
  write_screen_record(out, screen.grid, screen.values.imag(), 2 * screen.sample_index + 1);
}

std::vector<ScreenRecord> read_screen_records(std::istream& in) {
  std::vector<ScreenRecord> records;
  char header[kHeaderSize];
  while (in.read(header, kHeaderSize)) {
    if (std::memcmp(header, kMagic, 4) != 0)
      throw IoError("read_screen_records: bad magic (not a screen file)");
    const auto version = take<std::uint16_t>(header + 4);
    if (version != kScreenFormatVersion)
      throw IoError("read_screen_records: unsupported format version " + std::to_string(version));

    ScreenRecord rec;
    rec.grid.nx = static_cast<int>(take<std::uint32_t>(header + 6));
    rec.grid.ny = static_cast<int>(take<std::uint32_t>(header + 10));
    rec.grid.side_m = take<double>(header + 14);
    rec.record_index = take<std::uint64_t>(header + 22);
    rec.grid.validate();

    rec.values.resize(rec.grid.nx, rec.grid.ny);
    std::vector<double> row(static_cast<std::size_t>(rec.grid.ny));
    for (int j = 0; j < rec.grid.nx; ++j) {
      if (!in.read(reinterpret_cast<char*>(row.data()),
                   static_cast<std::streamsize>(sizeof(double) * row.size())))
        throw IoError("read_screen_records: truncated payload");
      for (int l = 0; l < rec.grid.ny; ++l) rec.values(j, l) = row[static_cast<std::size_t>(l)];
    }
    records.push_back(std::move(rec));
  }
  if (in.gcount() != 0 && in.gcount() != kHeaderSize)
    throw IoError("read_screen_records: truncated header");
  return records;
}

std::vector<ScreenRecord> read_screen_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("read_screen_file: cannot open '" + path + "'");
  return read_screen_records(in);
}

}  // namespace psgen
