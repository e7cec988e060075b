// Binary screen persistence.
//
// Record layout (little-endian, one real screen per record, records
// concatenated):
//   offset  size  field
//   0       4     magic "PHSC"
//   4       2     format version (u16, currently 1)
//   6       4     N_x (u32)
//   10      4     N_y (u32)
//   14      8     grid side L in metres (IEEE-754 binary64)
//   22      8     record index (u64); a complex sample k stores its real
//                 part as record 2k and imaginary part as record 2k+1
//   30      2     zero padding (header is exactly 32 bytes)
//   32      8*N_x*N_y  row-major phase values in rad (binary64)
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "psgen/types.hpp"

namespace psgen {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ScreenRecord {
  GridSpec grid;
  std::uint64_t record_index = 0;
  RealMatrix values;
};

inline constexpr std::uint16_t kScreenFormatVersion = 1;

void write_screen_record(std::ostream& out, const GridSpec& grid, const RealMatrix& values,
                         std::uint64_t record_index);

/// Writes the two real screens of one complex sample (records
/// 2 * sample_index and 2 * sample_index + 1).
void write_complex_screen(std::ostream& out, const ComplexScreen& screen);

std::vector<ScreenRecord> read_screen_records(std::istream& in);
std::vector<ScreenRecord> read_screen_file(const std::string& path);

}  // namespace psgen
