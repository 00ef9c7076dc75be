#include "sarcomm/sarl_io.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <vector>

#include "json_convert.hpp"
#include "sarcomm/errors.hpp"

namespace sarcomm {

namespace {

// The container is specified little-endian; this implementation targets
// little-endian hosts and writes native byte order.
template <typename T>
void put(std::ofstream& out, T value) {
  out.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <typename T>
T take(std::ifstream& in, const char* what) {
  T value{};
  in.read(reinterpret_cast<char*>(&value), sizeof(T));
  if (!in) throw FormatError(std::string("SARL file truncated while reading ") + what);
  return value;
}

bool close_enough(double a, double b) {
  return a == b || std::abs(a - b) <= 1e-12 * std::max(std::abs(a), std::abs(b));
}

}  // namespace

void write_sarl(const std::string& path, const RawEchoSet& echo) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FormatError("cannot open '" + path + "' for writing");

  out.write("SARL", 4);
  put<std::uint32_t>(out, kSarlVersion);
  put<std::uint64_t>(out, echo.num_pulses);
  put<std::uint64_t>(out, echo.samples_per_pulse);
  put<double>(out, echo.radar.prf_hz);
  put<double>(out, echo.sample_rate_hz);
  put<double>(out, echo.radar.chirp_bandwidth_hz);
  put<double>(out, echo.radar.pulse_duration_s);
  put<double>(out, echo.radar.wavelength_m);
  put<double>(out, echo.range_window_start_m);
  put<double>(out, echo.radar.platform_velocity_mps);
  put<double>(out, echo.geometry.slant_range_m);

  std::vector<float> row(2 * echo.samples_per_pulse);
  for (std::size_t ip = 0; ip < echo.num_pulses; ++ip) {
    const std::complex<double>* src = &echo.samples[ip * echo.samples_per_pulse];
    for (std::size_t k = 0; k < echo.samples_per_pulse; ++k) {
      row[2 * k] = static_cast<float>(src[k].real());
      row[2 * k + 1] = static_cast<float>(src[k].imag());
    }
    out.write(reinterpret_cast<const char*>(row.data()),
              static_cast<std::streamsize>(row.size() * sizeof(float)));
  }

  nlohmann::json meta{{"radar", to_json(echo.radar)}, {"geometry", to_json(echo.geometry)}};
  meta["truth"] = echo.truth ? to_json(*echo.truth) : nlohmann::json(nullptr);
  const std::string text = meta.dump();
  put<std::uint64_t>(out, text.size());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw FormatError("failed writing '" + path + "'");
}

RawEchoSet read_sarl(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + path + "'");

  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, "SARL", 4) != 0) {
    throw FormatError("'" + path + "' is not a SARL file (bad magic)");
  }
  const auto version = take<std::uint32_t>(in, "version");
  if (version != kSarlVersion) {
    throw FormatError("unsupported SARL version " + std::to_string(version) +
                      " (expected " + std::to_string(kSarlVersion) + ")");
  }

  RawEchoSet echo;
  echo.num_pulses = take<std::uint64_t>(in, "num_pulses");
  echo.samples_per_pulse = take<std::uint64_t>(in, "samples_per_pulse");
  const double prf = take<double>(in, "prf");
  echo.sample_rate_hz = take<double>(in, "sample_rate");
  const double bandwidth = take<double>(in, "chirp_bandwidth");
  const double pulse_duration = take<double>(in, "pulse_duration");
  const double wavelength = take<double>(in, "wavelength");
  echo.range_window_start_m = take<double>(in, "range_window_start");
  const double velocity = take<double>(in, "platform_velocity");
  const double slant_range = take<double>(in, "slant_range");

  echo.samples.resize(echo.num_pulses * echo.samples_per_pulse);
  std::vector<float> row(2 * echo.samples_per_pulse);
  for (std::size_t ip = 0; ip < echo.num_pulses; ++ip) {
    in.read(reinterpret_cast<char*>(row.data()),
            static_cast<std::streamsize>(row.size() * sizeof(float)));
    if (!in) throw FormatError("SARL file truncated in sample data");
    std::complex<double>* dst = &echo.samples[ip * echo.samples_per_pulse];
    for (std::size_t k = 0; k < echo.samples_per_pulse; ++k) {
      dst[k] = {static_cast<double>(row[2 * k]), static_cast<double>(row[2 * k + 1])};
    }
  }

  const auto meta_len = take<std::uint64_t>(in, "metadata length");
  std::string text(meta_len, '\0');
  in.read(text.data(), static_cast<std::streamsize>(meta_len));
  if (!in) throw FormatError("SARL file truncated in metadata block");
  nlohmann::json meta;
  try {
    meta = nlohmann::json::parse(text);
    echo.radar = radar_from_json(meta.at("radar"));
    echo.geometry = geometry_from_json(meta.at("geometry"));
    if (!meta.at("truth").is_null()) echo.truth = scene_from_json(meta.at("truth"));
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("bad SARL metadata block: ") + e.what());
  }

  // The fixed header duplicates part of the metadata; disagreement means the
  // file was assembled inconsistently.
  if (!close_enough(echo.radar.prf_hz, prf) ||
      !close_enough(echo.radar.chirp_bandwidth_hz, bandwidth) ||
      !close_enough(echo.radar.pulse_duration_s, pulse_duration) ||
      !close_enough(echo.radar.wavelength_m, wavelength) ||
      !close_enough(echo.radar.platform_velocity_mps, velocity) ||
      !close_enough(echo.geometry.slant_range_m, slant_range)) {
    throw FormatError("SARL header disagrees with its metadata block");
  }

  echo.pulse_times_s.resize(echo.num_pulses);
  for (std::size_t i = 0; i < echo.num_pulses; ++i) {
    echo.pulse_times_s[i] = (static_cast<double>(i) - 0.5 * (echo.num_pulses - 1)) / prf;
  }
  return echo;
}

}  // namespace sarcomm
