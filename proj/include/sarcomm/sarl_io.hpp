// sarl_io.hpp -- reader/writer for the SARL raw-echo container.
//
// Layout, all little-endian:
//   bytes 0..3    magic "SARL"
//   u32           format version (currently 1)
//   u64           num_pulses
//   u64           samples_per_pulse
//   f64 x 8       prf, sample_rate, chirp_bandwidth, pulse_duration,
//                 wavelength, range_window_start, platform_velocity, slant_range
//   f32 pairs     row-major pulse-major interleaved I/Q samples
//   u64 + bytes   length-prefixed JSON metadata block (full radar parameters,
//                 imaging geometry, optional scene truth)
#pragma once

#include <string>

#include "sarcomm/echo.hpp"

namespace sarcomm {

inline constexpr std::uint32_t kSarlVersion = 1;

void write_sarl(const std::string& path, const RawEchoSet& echo);

// Throws FormatError on a bad magic, unknown version, truncation, or a
// metadata block inconsistent with the fixed header.
RawEchoSet read_sarl(const std::string& path);

}  // namespace sarcomm
