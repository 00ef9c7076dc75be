#include "sarcomm/demod.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sarcomm/units.hpp"

namespace sarcomm {

namespace {
bool inside(const PixelRect& r, const GridSpec& g) {
  return r.x0 >= 0 && r.y0 >= 0 && r.width > 0 && r.height > 0 &&
         r.x0 + r.width <= g.nx && r.y0 + r.height <= g.ny;
}

bool overlap(const PixelRect& a, const PixelRect& b) {
  return a.x0 < b.x0 + b.width && b.x0 < a.x0 + a.width && a.y0 < b.y0 + b.height &&
         b.y0 < a.y0 + a.height;
}

double mean_power(const ComplexImage& img, const PixelRect& r) {
  double acc = 0;
  for (int iy = r.y0; iy < r.y0 + r.height; ++iy) {
    for (int ix = r.x0; ix < r.x0 + r.width; ++ix) {
      acc += std::norm(img.at(ix, iy));
    }
  }
  return acc / r.count();
}
}  // namespace

void MeasurementWindows::validate(const GridSpec& grid) const {
  if (!inside(reflector, grid) || !inside(clutter, grid)) {
    throw std::invalid_argument("measurement window outside the image grid");
  }
  if (reflector.count() != clutter.count()) {
    throw std::invalid_argument("reflector and clutter windows must hold the same pixel count");
  }
  if (overlap(reflector, clutter)) {
    throw std::invalid_argument("reflector and clutter windows overlap");
  }
}

ScrSeries measure_scr(const SublookStack& stack, const MeasurementWindows& windows) {
  windows.validate(stack.grid);
  ScrSeries series;
  series.center_times_s = stack.center_times_s;
  series.scr_db.reserve(stack.looks.size());
  for (const ComplexImage& look : stack.looks) {
    const double signal = mean_power(look, windows.reflector);
    const double clutter = mean_power(look, windows.clutter);
    if (!(clutter > 0.0)) {
      throw std::domain_error("clutter window has zero power; SCR undefined");
    }
    series.scr_db.push_back(db_from_linear(signal / clutter));
  }
  return series;
}

Decision decide_bits_with_threshold(const ScrSeries& series, double threshold_db,
                                    const SymbolMap& map) {
  if (map.looks_per_symbol < 1) throw std::invalid_argument("looks_per_symbol must be >= 1");
  const std::size_t n = series.scr_db.size();
  const std::size_t symbols = n / map.looks_per_symbol;
  Decision d;
  d.modulation_detected = true;
  d.threshold_db = threshold_db;
  d.bits.reserve(symbols);
  for (std::size_t s = 0; s < symbols; ++s) {
    double mean = 0;
    for (int k = 0; k < map.looks_per_symbol; ++k) {
      mean += series.scr_db[s * map.looks_per_symbol + k];
    }
    mean /= map.looks_per_symbol;
    d.bits.push_back(mean > threshold_db ? 1 : 0);
  }
  return d;
}

Decision decide_bits(const ScrSeries& series, const SymbolMap& map,
                     const DecisionOptions& options) {
  if (series.scr_db.size() < 2) {
    throw std::invalid_argument("need at least two sublooks to decide bits");
  }
  const auto [lo, hi] = std::minmax_element(series.scr_db.begin(), series.scr_db.end());
  if (*hi - *lo < options.flatness_floor_db) {
    Decision d;
    d.modulation_detected = false;
    d.threshold_db = 0.5 * (*hi + *lo);
    return d;  // flat series: no modulation detected, no bits to report
  }
  return decide_bits_with_threshold(series, 0.5 * (*hi + *lo), map);
}

double empirical_ber(const std::vector<std::uint8_t>& decoded,
                     const std::vector<std::uint8_t>& truth) {
  if (decoded.size() != truth.size()) {
    throw std::invalid_argument("bit streams differ in length");
  }
  if (decoded.empty()) throw std::invalid_argument("empty bit streams");
  std::size_t errors = 0;
  for (std::size_t i = 0; i < decoded.size(); ++i) {
    if ((decoded[i] != 0) != (truth[i] != 0)) ++errors;
  }
  return static_cast<double>(errors) / decoded.size();
}

}  // namespace sarcomm
