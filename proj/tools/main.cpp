// sarcomm command-line tool: budget, simulate, process, demod, run-all,
// ber-sweep. Exit codes: 0 ok, 2 config error, 3 format error, 4 numerical
// validity error.
#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "sarcomm/budget.hpp"
#include "sarcomm/config.hpp"
#include "sarcomm/demod.hpp"
#include "sarcomm/errors.hpp"
#include "sarcomm/geometry.hpp"
#include "sarcomm/sarl_io.hpp"
#include "sarcomm/simulate.hpp"
#include "sarcomm/stack_io.hpp"
#include "sarcomm/sweep.hpp"
#include "sarcomm/units.hpp"

namespace {

using namespace sarcomm;

struct CommonArgs {
  std::string config_path;
  std::string out_dir = ".";
  std::optional<std::uint64_t> seed;
  std::optional<int> m;
  int threads = 0;
  std::optional<long> trials;
};

ScenarioConfig load(const CommonArgs& args) {
  ScenarioConfig cfg = load_config(args.config_path);
  if (args.seed) {
    cfg.seed = *args.seed;
    cfg.scene.rng_seed = *args.seed;
  }
  if (args.m) cfg.processing.num_sublooks = *args.m;
  if (args.trials && cfg.sweep) cfg.sweep->trials = *args.trials;
  return cfg;
}

std::filesystem::path out_path(const CommonArgs& args, const char* name) {
  std::filesystem::create_directories(args.out_dir);
  return std::filesystem::path(args.out_dir) / name;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw FormatError("cannot open '" + path.string() + "' for writing");
  out << text;
}

int cmd_budget(const CommonArgs& args) {
  const ScenarioConfig cfg = load(args);
  const BudgetReport report = make_budget_report(cfg);
  std::cout << report.text;
  write_text(out_path(args, "budget.txt"), report.text);
  write_text(out_path(args, "budget_sublooks.csv"), report.sublook_csv);
  if (!report.radiometric_ok) {
    throw ValidityError("sublook on-state SNR is below the configured radiometric floor");
  }
  return 0;
}

std::string cmd_simulate(const CommonArgs& args, const ScenarioConfig& cfg) {
  SynthesisOptions options;
  options.sample_rate_hz = cfg.processing.sample_rate_hz;
  options.samples_per_pulse = cfg.processing.samples_per_pulse;
  options.threads = args.threads;
  const RawEchoSet echo = synthesize(cfg.scene, cfg.radar, options);
  const auto path = out_path(args, "echo.sarl");
  write_sarl(path.string(), echo);
  std::cout << "wrote " << path.string() << " (" << echo.num_pulses << " pulses x "
            << echo.samples_per_pulse << " samples)\n";
  return path.string();
}

std::string cmd_process(const CommonArgs& args, const ScenarioConfig& cfg,
                        const std::string& sarl_path) {
  const RawEchoSet echo = read_sarl(sarl_path);

  RangeCompressOptions rco;
  rco.upsample = cfg.processing.range_upsample;
  rco.threads = args.threads;
  // Crop the compressed data to the slant span the grid can reach.
  const SlantGeometry slant = slant_geometry(echo.geometry);
  const GridSpec& grid = cfg.processing.grid;
  double r_min = 1e300, r_max = 0;
  for (int iy = 0; iy < grid.ny; ++iy) {
    const double r0 = slant.r0(grid.y_at(iy));
    r_min = std::min(r_min, r0);
    r_max = std::max(r_max, r0);
  }
  const double t_max = 0.5 * (echo.num_pulses - 1) / echo.radar.prf_hz;
  const double dx_max = echo.radar.platform_velocity_mps * t_max +
                        std::max(std::abs(grid.x_at(0)), std::abs(grid.x_at(grid.nx - 1)));
  r_max = std::sqrt(r_max * r_max + dx_max * dx_max);
  const double pad = 8.0 * kSpeedOfLight / (2.0 * echo.sample_rate_hz);
  rco.keep_min_range_m = std::max(echo.range_window_start_m, r_min - pad);
  rco.keep_max_range_m = r_max + pad;

  const RangeCompressed rc = range_compress(echo, rco);
  const SublookStack stack =
      make_sublooks(rc, cfg.processing.num_sublooks, grid, args.threads);
  const auto stack_path = out_path(args, "stack.sstk");
  write_stack(stack_path.string(), stack);
  write_power_csv(out_path(args, "stack_power.csv").string(), stack);
  std::cout << "wrote " << stack_path.string() << " (" << stack.num_sublooks << " looks, "
            << grid.nx << "x" << grid.ny << " px)\n";
  return stack_path.string();
}

int cmd_demod(const CommonArgs& args, const ScenarioConfig& cfg,
              const std::string& stack_path) {
  const SublookStack stack = read_stack(stack_path);
  const ScrSeries series = measure_scr(stack, cfg.processing.windows);
  const SymbolMap map{cfg.processing.looks_per_symbol};
  const Decision decision = decide_bits(series, map, {cfg.processing.flatness_floor_db});

  LinkReport report;
  report.series = series;
  report.modulation_detected = decision.modulation_detected;
  report.threshold_db = decision.threshold_db;
  report.decoded_bits = decision.bits;

  if (stack.truth && !stack.truth->targets.empty()) {
    const PointTarget& tgt = stack.truth->targets.front();
    // Truth bits: the scheduled state at each decoded symbol's centre time.
    if (decision.modulation_detected && !decision.bits.empty()) {
      std::vector<std::uint8_t> tx;
      for (std::size_t s = 0; s < decision.bits.size(); ++s) {
        double t_mid = 0;
        for (int k = 0; k < map.looks_per_symbol; ++k) {
          t_mid += series.center_times_s[s * map.looks_per_symbol + k];
        }
        tx.push_back(tgt.schedule.on_at(t_mid / map.looks_per_symbol) ? 1 : 0);
      }
      report.tx_bits = tx;
      report.empirical = empirical_ber(decision.bits, tx);
    }
    const SampleCounts counts = coherent_sample_counts(stack.radar, stack.geometry);
    const double a_scat = stack.geometry.scatter_area_m2;
    const double on = image_snr(
        single_pulse_snr(stack.radar, stack.geometry, tgt.rcs_on_m2 / a_scat),
        counts.range_real, counts.azimuth_real);
    const double off = image_snr(
        single_pulse_snr(stack.radar, stack.geometry, tgt.rcs_off_m2 / a_scat),
        counts.range_real, counts.azimuth_real);
    report.theoretical = ook_ber(on, off, stack.num_sublooks);
  }

  std::ostringstream text;
  text << "link report\n===========\n";
  text << "sublooks: " << stack.num_sublooks << "\n";
  text << "modulation: " << (report.modulation_detected ? "detected" : "none") << "\n";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", report.threshold_db);
  text << "threshold_db: " << buf << "\n";
  text << "decoded_bits: ";
  for (auto b : report.decoded_bits) text << int(b);
  text << "\n";
  if (report.tx_bits) {
    text << "tx_bits: ";
    for (auto b : *report.tx_bits) text << int(b);
    text << "\n";
  }
  if (report.empirical) {
    std::snprintf(buf, sizeof(buf), "%.8g", *report.empirical);
    text << "empirical_ber: " << buf << "\n";
  }
  if (report.theoretical) {
    std::snprintf(buf, sizeof(buf), "%.8g", *report.theoretical);
    text << "theoretical_ber: " << buf << "\n";
  }
  text << "scr_db:";
  for (double v : series.scr_db) {
    std::snprintf(buf, sizeof(buf), " %.4f", v);
    text << buf;
  }
  text << "\n";

  std::cout << text.str();
  write_text(out_path(args, "link_report.txt"), text.str());

  std::ostringstream csv;
  csv << "sublook_index,center_time_s,scr_db,bit\n";
  for (std::size_t k = 0; k < series.scr_db.size(); ++k) {
    const std::size_t sym = k / map.looks_per_symbol;
    int bit = -1;
    if (report.modulation_detected && sym < report.decoded_bits.size()) {
      bit = report.decoded_bits[sym];
    }
    std::snprintf(buf, sizeof(buf), "%zu,%.8g,%.4f,%d\n", k, series.center_times_s[k],
                  series.scr_db[k], bit);
    csv << buf;
  }
  write_text(out_path(args, "scr_series.csv"), csv.str());
  return 0;
}

int cmd_ber_sweep(const CommonArgs& args) {
  const ScenarioConfig cfg = load(args);
  const auto points = run_ber_sweep(cfg, args.threads);
  const auto path = out_path(args, "ber_sweep.csv");
  write_sweep_csv(path.string(), points);
  std::printf("%8s %6s %6s %14s %14s %8s\n", "ebno_db", "bits", "m", "empirical", "theoretical",
              "trials");
  for (const SweepPoint& p : points) {
    std::printf("%8.2f %6d %6d %14.6g %14.6g %8ld\n", p.ebno_db, p.bits_per_pass,
                p.num_sublooks, p.empirical_ber, p.theoretical_ber, p.trials);
  }
  std::cout << "wrote " << path.string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SAR backscatter communication toolkit"};
  app.require_subcommand(1);

  CommonArgs args;
  std::string in_path;

  auto add_common = [&](CLI::App* cmd, bool needs_input) {
    cmd->add_option("--config", args.config_path, "scenario config file")->required();
    cmd->add_option("--out", args.out_dir, "output directory");
    cmd->add_option("--seed", args.seed, "override the scenario seed");
    cmd->add_option("--m", args.m, "override the number of sublooks");
    cmd->add_option("--threads", args.threads, "worker thread count (0 = auto)");
    cmd->add_option("--trials", args.trials, "override sweep symbols per point");
    if (needs_input) cmd->add_option("--in", in_path, "input artifact")->required();
  };

  CLI::App* budget = app.add_subcommand("budget", "closed-form link budget report");
  add_common(budget, false);
  CLI::App* simulate = app.add_subcommand("simulate", "synthesize raw echoes to a SARL file");
  add_common(simulate, false);
  CLI::App* process = app.add_subcommand("process", "range-compress and form sublooks");
  add_common(process, true);
  CLI::App* demod = app.add_subcommand("demod", "measure SCR and decode bits from a stack");
  add_common(demod, true);
  CLI::App* run_all = app.add_subcommand("run-all", "simulate, process and demod in sequence");
  add_common(run_all, false);
  CLI::App* sweep = app.add_subcommand("ber-sweep", "Monte-Carlo BER sweep over E_b/N_o");
  add_common(sweep, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (budget->parsed()) return cmd_budget(args);
    if (simulate->parsed()) {
      const ScenarioConfig cfg = load(args);
      cmd_simulate(args, cfg);
      return 0;
    }
    if (process->parsed()) {
      const ScenarioConfig cfg = load(args);
      cmd_process(args, cfg, in_path);
      return 0;
    }
    if (demod->parsed()) {
      const ScenarioConfig cfg = load(args);
      return cmd_demod(args, cfg, in_path);
    }
    if (run_all->parsed()) {
      const ScenarioConfig cfg = load(args);
      const std::string sarl = cmd_simulate(args, cfg);
      const std::string stack = cmd_process(args, cfg, sarl);
      return cmd_demod(args, cfg, stack);
    }
    if (sweep->parsed()) return cmd_ber_sweep(args);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const FormatError& e) {
    std::cerr << "format error: " << e.what() << "\n";
    return 3;
  } catch (const ValidityError& e) {
    std::cerr << "validity error: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "validity error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
