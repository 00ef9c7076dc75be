#include "sarcomm/stack_io.hpp"

#include <cstdio>
#include <cstring>
#include <fstream>
#include <vector>

#include "json_convert.hpp"
#include "sarcomm/errors.hpp"
#include "sarcomm/units.hpp"

namespace sarcomm {

namespace {
template <typename T>
void put(std::ofstream& out, T value) {
  out.write(reinterpret_cast<const char*>(&value), sizeof(T));
}
template <typename T>
T take(std::ifstream& in, const char* what) {
  T value{};
  in.read(reinterpret_cast<char*>(&value), sizeof(T));
  if (!in) throw FormatError(std::string("stack file truncated while reading ") + what);
  return value;
}
}  // namespace

void write_stack(const std::string& path, const SublookStack& stack) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FormatError("cannot open '" + path + "' for writing");

  out.write("SSTK", 4);
  put<std::uint32_t>(out, kStackVersion);
  put<std::uint32_t>(out, static_cast<std::uint32_t>(stack.num_sublooks));
  put<std::uint32_t>(out, static_cast<std::uint32_t>(stack.grid.nx));
  put<std::uint32_t>(out, static_cast<std::uint32_t>(stack.grid.ny));
  put<double>(out, stack.grid.x0_m);
  put<double>(out, stack.grid.y0_m);
  put<double>(out, stack.grid.dx_m);
  put<double>(out, stack.grid.dy_m);

  std::vector<float> buf;
  for (int k = 0; k < stack.num_sublooks; ++k) {
    put<double>(out, stack.center_times_s[k]);
    put<std::uint64_t>(out, stack.pulses_per_look[k]);
    const ComplexImage& img = stack.looks[k];
    buf.resize(2 * img.pixels.size());
    for (std::size_t i = 0; i < img.pixels.size(); ++i) {
      buf[2 * i] = static_cast<float>(img.pixels[i].real());
      buf[2 * i + 1] = static_cast<float>(img.pixels[i].imag());
    }
    out.write(reinterpret_cast<const char*>(buf.data()),
              static_cast<std::streamsize>(buf.size() * sizeof(float)));
  }

  nlohmann::json meta{{"radar", to_json(stack.radar)}, {"geometry", to_json(stack.geometry)}};
  meta["truth"] = stack.truth ? to_json(*stack.truth) : nlohmann::json(nullptr);
  const std::string text = meta.dump();
  put<std::uint64_t>(out, text.size());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw FormatError("failed writing '" + path + "'");
}

SublookStack read_stack(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + path + "'");

  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, "SSTK", 4) != 0) {
    throw FormatError("'" + path + "' is not a sublook stack file (bad magic)");
  }
  const auto version = take<std::uint32_t>(in, "version");
  if (version != kStackVersion) {
    throw FormatError("unsupported stack version " + std::to_string(version));
  }

  SublookStack stack;
  stack.num_sublooks = static_cast<int>(take<std::uint32_t>(in, "num_looks"));
  stack.grid.nx = static_cast<int>(take<std::uint32_t>(in, "nx"));
  stack.grid.ny = static_cast<int>(take<std::uint32_t>(in, "ny"));
  stack.grid.x0_m = take<double>(in, "x0");
  stack.grid.y0_m = take<double>(in, "y0");
  stack.grid.dx_m = take<double>(in, "dx");
  stack.grid.dy_m = take<double>(in, "dy");

  const std::size_t npx = static_cast<std::size_t>(stack.grid.nx) * stack.grid.ny;
  std::vector<float> buf(2 * npx);
  for (int k = 0; k < stack.num_sublooks; ++k) {
    stack.center_times_s.push_back(take<double>(in, "center_time"));
    stack.pulses_per_look.push_back(take<std::uint64_t>(in, "pulses_in_look"));
    in.read(reinterpret_cast<char*>(buf.data()),
            static_cast<std::streamsize>(buf.size() * sizeof(float)));
    if (!in) throw FormatError("stack file truncated in pixel data");
    ComplexImage img;
    img.grid = stack.grid;
    img.pixels.resize(npx);
    for (std::size_t i = 0; i < npx; ++i) {
      img.pixels[i] = {static_cast<double>(buf[2 * i]), static_cast<double>(buf[2 * i + 1])};
    }
    stack.looks.push_back(std::move(img));
  }

  const auto meta_len = take<std::uint64_t>(in, "metadata length");
  std::string text(meta_len, '\0');
  in.read(text.data(), static_cast<std::streamsize>(meta_len));
  if (!in) throw FormatError("stack file truncated in metadata block");
  try {
    nlohmann::json meta = nlohmann::json::parse(text);
    stack.radar = radar_from_json(meta.at("radar"));
    stack.geometry = geometry_from_json(meta.at("geometry"));
    if (!meta.at("truth").is_null()) stack.truth = scene_from_json(meta.at("truth"));
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("bad stack metadata block: ") + e.what());
  }
  return stack;
}

void write_power_csv(const std::string& path, const SublookStack& stack) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw FormatError("cannot open '" + path + "' for writing");
  out << "look,ix,iy,x_m,y_m,power_db\n";
  char line[160];
  for (int k = 0; k < stack.num_sublooks; ++k) {
    const ComplexImage& img = stack.looks[k];
    for (int iy = 0; iy < stack.grid.ny; ++iy) {
      for (int ix = 0; ix < stack.grid.nx; ++ix) {
        const double p = std::norm(img.at(ix, iy));
        const double p_db = p > 0 ? db_from_linear(p) : -400.0;
        std::snprintf(line, sizeof(line), "%d,%d,%d,%.10g,%.10g,%.6f\n", k, ix, iy,
                      stack.grid.x_at(ix), stack.grid.y_at(iy), p_db);
        out << line;
      }
    }
  }
}

}  // namespace sarcomm
