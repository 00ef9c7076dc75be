// stack_io.hpp -- sublook image stack container.
//
// Layout, all little-endian:
//   bytes 0..3   magic "SSTK"
//   u32          format version (currently 1)
//   u32          num_looks, u32 nx, u32 ny
//   f64 x 4      x0, y0, dx, dy (grid, metres)
//   per look:    f64 center_time_s, u64 pulses_in_look,
//                then ny*nx complex float32 pixels, row-major (iy rows)
//   u64 + bytes  length-prefixed JSON metadata (radar, geometry, truth)
#pragma once

#include <string>

#include "sarcomm/process.hpp"

namespace sarcomm {

inline constexpr std::uint32_t kStackVersion = 1;

void write_stack(const std::string& path, const SublookStack& stack);
SublookStack read_stack(const std::string& path);

// Long-format CSV of per-look pixel powers (look,ix,iy,x_m,y_m,power_db).
void write_power_csv(const std::string& path, const SublookStack& stack);

}  // namespace sarcomm
