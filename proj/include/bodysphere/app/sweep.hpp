#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "bodysphere/app/scenario_io.hpp"
#include "bodysphere/greens.hpp"

namespace bodysphere::app {

enum class FieldSelector { Scattered, Total };

/// How a receiver offset moves the receiver away from (receiver_r, theta, phi).
enum class OffsetMode {
  Radial,    // r = receiver_r + offset
  Vertical,  // Cartesian z shifted by +offset
};

struct SweepConfig {
  std::vector<double> theta_values{kPi / 6.0, kPi / 3.0, kPi};
  double phi_start = 0.0;
  double phi_end = 2.0 * kPi;
  double phi_step = kPi / 180.0;
  std::vector<double> offsets_m{0.0, 0.02, 0.04, 0.06, 0.08, 0.10};
  FieldSelector field = FieldSelector::Scattered;
  TruncationSpec truncation;
  double receiver_r = 0.18;
  OffsetMode offset_mode = OffsetMode::Radial;
  unsigned threads = 0;  // 0: hardware concurrency

  void validate() const;
  /// phi_start, phi_start + step, ... up to and including phi_end (within 1e-9 step).
  std::vector<double> phi_values() const;
};

SphericalPoint receiver_position(const SweepConfig& config, double theta, double phi, double offset);

struct SweepRow {
  double theta = 0.0;
  double phi = 0.0;
  double offset = 0.0;
  Vector3c e = Vector3c::Zero();  // spherical components at the receiver
  double mag_eph_db = 0.0;
  double mag_total_db = 0.0;
};

struct ThetaTrend {
  double theta = 0.0;
  std::vector<double> mean_abs_ephi;  // one per offset, in config order
  bool monotone = false;
};

struct SweepSummary {
  std::size_t rows = 0;
  double max_db = 0.0;  // over mag_eph_db
  double min_db = 0.0;
  bool monotone_trend = false;  // all theta trends strictly decreasing
  std::vector<ThetaTrend> trends;
};

/// Rows in theta-outer, offset-middle, phi-inner order. Grid points run on a
/// worker pool; a failing point is reported as the lowest failing row index.
std::vector<SweepRow> compute_sweep(const ScenarioConfig& scenario, const SweepConfig& config);

SweepSummary summarize(const std::vector<SweepRow>& rows, const SweepConfig& config);

void write_csv(const std::vector<SweepRow>& rows, std::ostream& out);

/// Load, sweep, write. Throws ValidationError, IoError or the solver error
/// (message prefixed with the failing grid point).
SweepSummary run_sweep(const std::filesystem::path& scenario_path, const SweepConfig& config,
                       const std::filesystem::path& out_path);

/// gnuplot script plotting mag_eph_db against phi, one panel per theta.
void write_plot_script(const std::filesystem::path& csv_path, const SweepConfig& config, std::ostream& out);

}  // namespace bodysphere::app
