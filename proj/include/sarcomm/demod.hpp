// demod.hpp -- per-sublook SCR measurement, thresholding, bit decisions.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sarcomm/process.hpp"

namespace sarcomm {

// Pixel-index rectangle, [x0, x0+width) x [y0, y0+height).
struct PixelRect {
  int x0 = 0;
  int y0 = 0;
  int width = 3;
  int height = 3;
  int count() const { return width * height; }
};

// Reflector and low-clutter comparison windows. Both windows must hold the
// same number of pixels and must not overlap.
struct MeasurementWindows {
  PixelRect reflector;
  PixelRect clutter;
  void validate(const GridSpec& grid) const;
};

// Per-sublook SCR in dB, indexed by sublook centre time.
struct ScrSeries {
  std::vector<double> scr_db;
  std::vector<double> center_times_s;
};

// SCR per look: mean power over the reflector window over mean power over the
// clutter window, in dB. Zero clutter-window power is an error.
ScrSeries measure_scr(const SublookStack& stack, const MeasurementWindows& windows);

// Contiguous assignment of `looks_per_symbol` sublooks to each symbol.
struct SymbolMap {
  int looks_per_symbol = 2;
};

struct DecisionOptions {
  // Below this series spread the demodulator declares "no modulation".
  double flatness_floor_db = 1.0;
};

struct Decision {
  bool modulation_detected = false;
  double threshold_db = 0;
  std::vector<std::uint8_t> bits;
};

// Blind decision: threshold at the midpoint in dB between the series extremes,
// then each symbol takes the mean SCR of its sublooks against it.
Decision decide_bits(const ScrSeries& series, const SymbolMap& map,
                     const DecisionOptions& options = {});

// Decision against an externally supplied threshold (used by calibrated
// Monte-Carlo experiments where the on/off levels are known by construction).
Decision decide_bits_with_threshold(const ScrSeries& series, double threshold_db,
                                    const SymbolMap& map);

// Hamming distance over length; streams must have equal length.
double empirical_ber(const std::vector<std::uint8_t>& decoded,
                     const std::vector<std::uint8_t>& truth);

struct LinkReport {
  ScrSeries series;
  bool modulation_detected = false;
  double threshold_db = 0;
  std::vector<std::uint8_t> decoded_bits;
  std::optional<std::vector<std::uint8_t>> tx_bits;
  std::optional<double> empirical;
  std::optional<double> theoretical;
};

}  // namespace sarcomm
