#include "bodysphere/app/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "bodysphere/errors.hpp"
#include "bodysphere/field.hpp"
#include "bodysphere/format.hpp"

namespace bodysphere::app {

void SweepConfig::validate() const {
  if (theta_values.empty()) throw ValidationError("sweep: theta list is empty");
  for (double t : theta_values)
    if (!(t >= 0.0 && t <= kPi)) throw ValidationError("sweep: theta " + format_double(t) + " outside [0, pi]");
  if (!(phi_step > 0.0) || !std::isfinite(phi_step)) throw ValidationError("sweep: phi_step must be > 0");
  if (!(phi_end >= phi_start)) throw ValidationError("sweep: phi_end must be >= phi_start");
  if (offsets_m.empty()) throw ValidationError("sweep: offset list is empty");
  for (double o : offsets_m)
    if (!(o >= 0.0) || !std::isfinite(o)) throw ValidationError("sweep: offsets must be >= 0");
  if (!(receiver_r > 0.0)) throw ValidationError("sweep: receiver range must be > 0");
  truncation.validate();
}

std::vector<double> SweepConfig::phi_values() const {
  const auto count = static_cast<std::size_t>(std::floor((phi_end - phi_start) / phi_step + 1e-9)) + 1;
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = phi_start + static_cast<double>(i) * phi_step;
  return out;
}

SphericalPoint receiver_position(const SweepConfig& c, double theta, double phi, double offset) {
  if (c.offset_mode == OffsetMode::Radial) return {c.receiver_r + offset, theta, phi};
  Eigen::Vector3d p = SphericalPoint(c.receiver_r, theta, phi).cartesian();
  p.z() += offset;
  // keep the requested phi at the poles, where from_cartesian cannot recover it
  const SphericalPoint q = SphericalPoint::from_cartesian(p);
  return {q.r(), q.theta(), phi};
}

namespace {

struct GridPoint {
  double theta, phi, offset;
};

std::string describe(const GridPoint& g) {
  return "theta=" + format_double(g.theta) + " phi=" + format_double(g.phi) + " offset=" + format_double(g.offset);
}

template <class E>
[[noreturn]] void rethrow_at(const E& e, const GridPoint& g) {
  throw E(std::string(e.what()) + " [grid point " + describe(g) + "]");
}

}  // namespace

std::vector<SweepRow> compute_sweep(const ScenarioConfig& sc, const SweepConfig& config) {
  config.validate();
  const std::vector<double> phis = config.phi_values();
  std::vector<GridPoint> grid;
  grid.reserve(config.theta_values.size() * config.offsets_m.size() * phis.size());
  for (double t : config.theta_values)
    for (double o : config.offsets_m)
      for (double p : phis) grid.push_back({t, p, o});

  const SphereGreens greens(sc.scenario, config.truncation);
  const GreensPart part = config.field == FieldSelector::Scattered ? GreensPart::Scattered : GreensPart::Total;

  std::vector<SweepRow> rows(grid.size());
  std::atomic<std::size_t> next{0};
  std::mutex err_mutex;
  std::size_t err_index = grid.size();
  std::exception_ptr err;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= grid.size()) return;
      const GridPoint& g = grid[i];
      try {
        const SphericalPoint x = receiver_position(config, g.theta, g.phi, g.offset);
        const FieldSample s = efield(greens, part, sc.source, x);
        rows[i] = {g.theta, g.phi, g.offset, s.e, s.mag_phi_db, s.mag_total_db};
      } catch (...) {
        std::lock_guard lock(err_mutex);
        if (i < err_index) {
          err_index = i;
          err = std::current_exception();
        }
      }
    }
  };

  unsigned n = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  n = static_cast<unsigned>(std::min<std::size_t>(n, grid.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  if (err) {
    const GridPoint& g = grid[err_index];
    try {
      std::rethrow_exception(err);
    } catch (const ConvergenceError& e) {
      throw ConvergenceError(std::string(e.what()) + " [grid point " + describe(g) + "]", e.order(), e.residual());
    } catch (const InterfaceError& e) {
      rethrow_at(e, g);
    } catch (const CoincidentPointError& e) {
      rethrow_at(e, g);
    } catch (const OverflowError& e) {
      rethrow_at(e, g);
    } catch (const SingularSystemError& e) {
      rethrow_at(e, g);
    } catch (const Error& e) {
      rethrow_at(e, g);
    }
  }
  return rows;
}

SweepSummary summarize(const std::vector<SweepRow>& rows, const SweepConfig& config) {
  SweepSummary s;
  s.rows = rows.size();
  if (rows.empty()) return s;
  s.max_db = s.min_db = rows.front().mag_eph_db;
  for (const auto& r : rows) {
    s.max_db = std::max(s.max_db, r.mag_eph_db);
    s.min_db = std::min(s.min_db, r.mag_eph_db);
  }
  const std::size_t n_phi = config.phi_values().size();
  const std::size_t n_off = config.offsets_m.size();
  s.monotone_trend = true;
  for (std::size_t t = 0; t < config.theta_values.size(); ++t) {
    ThetaTrend tr;
    tr.theta = config.theta_values[t];
    for (std::size_t o = 0; o < n_off; ++o) {
      double sum = 0.0;
      const std::size_t base = (t * n_off + o) * n_phi;
      for (std::size_t p = 0; p < n_phi; ++p) sum += std::abs(rows[base + p].e(2));
      tr.mean_abs_ephi.push_back(sum / static_cast<double>(n_phi));
    }
    tr.monotone = true;
    for (std::size_t o = 1; o < n_off; ++o)
      if (!(tr.mean_abs_ephi[o] < tr.mean_abs_ephi[o - 1])) tr.monotone = false;
    s.monotone_trend = s.monotone_trend && tr.monotone;
    s.trends.push_back(std::move(tr));
  }
  return s;
}

void write_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
  out << "theta_rad,phi_rad,offset_m,er_re,er_im,eth_re,eth_im,eph_re,eph_im,mag_eph_db,mag_total_db\n";
  std::string line;
  for (const auto& r : rows) {
    line.clear();
    auto put = [&line](double v) {
      if (!line.empty()) line += ',';
      line += format_double(v);
    };
    put(r.theta);
    put(r.phi);
    put(r.offset);
    for (int i = 0; i < 3; ++i) {
      put(r.e(i).real());
      put(r.e(i).imag());
    }
    put(r.mag_eph_db);
    put(r.mag_total_db);
    line += '\n';
    out << line;
  }
}

SweepSummary run_sweep(const std::filesystem::path& scenario_path, const SweepConfig& config,
                       const std::filesystem::path& out_path) {
  const ScenarioConfig sc = load_scenario(scenario_path);
  const std::vector<SweepRow> rows = compute_sweep(sc, config);
  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + out_path.string() + "'");
  write_csv(rows, out);
  out.flush();
  if (!out) throw IoError("error while writing '" + out_path.string() + "'");
  return summarize(rows, config);
}

void write_plot_script(const std::filesystem::path& csv_path, const SweepConfig& config, std::ostream& out) {
  const std::size_t n_phi = config.phi_values().size();
  const std::size_t n_off = config.offsets_m.size();
  out << "# gnuplot -p " << csv_path.stem().string() << ".gp\n";
  out << "set datafile separator ','\n";
  out << "set key outside right\n";
  out << "set xlabel 'phi (deg)'\n";
  out << "set ylabel '|E_phi| (dB re 1 V/m)'\n";
  out << "set terminal pngcairo size 900," << 320 * config.theta_values.size() << "\n";
  out << "set output '" << csv_path.stem().string() << ".png'\n";
  out << "set multiplot layout " << config.theta_values.size() << ",1\n";
  const std::string file = csv_path.filename().string();
  for (std::size_t t = 0; t < config.theta_values.size(); ++t) {
    out << "set title 'theta = " << format_double(config.theta_values[t] * 180.0 / kPi) << " deg'\n";
    out << "plot ";
    for (std::size_t o = 0; o < n_off; ++o) {
      const std::size_t first = (t * n_off + o) * n_phi;
      out << (o ? ", \\\n     " : "") << "'" << file << "' skip 1 every ::" << first << "::" << first + n_phi - 1
          << " using ($2*180/pi):10 with lines title 'offset " << format_double(config.offsets_m[o]) << " m'";
    }
    out << "\n";
  }
  out << "unset multiplot\n";
}

}  // namespace bodysphere::app
