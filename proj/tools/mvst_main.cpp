// Command-line front end: identity checks, event boosts, rotation-curve and
// effective-potential sweeps, geodesic integration, and the causal
// null-separation evaluation. Astronomer-facing units (solar masses, light
// years, km/s) are converted to SI once, here; the library is SI-only.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mvst/check.hpp"
#include "mvst/constants.hpp"
#include "mvst/csv.hpp"
#include "mvst/errors.hpp"
#include "mvst/gravity.hpp"
#include "mvst/multivector.hpp"
#include "mvst/rotation.hpp"
#include "mvst/rootfind.hpp"
#include "mvst/spacetime.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitNumerical = 2;

struct CommonOptions {
  std::string output;
  std::string format = "csv";
  std::optional<double> h0_kms_mpc;
  std::optional<double> a0_override;
  std::string config_path;
  std::uint64_t seed = 20260826;
};

// Optional key=value config file; recognized keys: h0 (km/s/Mpc), g, m_sun.
// Flags override file values.
mvst::PhysicalConstants resolve_constants(const CommonOptions& opt) {
  mvst::PhysicalConstants k;
  if (!opt.config_path.empty()) {
    std::ifstream f(opt.config_path);
    if (!f)
      throw std::invalid_argument("cannot open config file " + opt.config_path);
    std::string line;
    while (std::getline(f, line)) {
      const auto eq = line.find('=');
      if (line.empty() || line[0] == '#' || eq == std::string::npos) continue;
      const std::string key = line.substr(0, eq);
      const double value = std::stod(line.substr(eq + 1));
      if (key == "h0")
        k.H0 = value * 1e3 / mvst::kMetersPerMegaparsec;
      else if (key == "g")
        k.G = value;
      else if (key == "m_sun")
        k.M_sun = value;
      else
        throw std::invalid_argument("unknown config key '" + key + "'");
    }
  }
  if (opt.h0_kms_mpc) k.H0 = *opt.h0_kms_mpc * 1e3 / mvst::kMetersPerMegaparsec;
  if (opt.a0_override) {
    if (*opt.a0_override < 0.0)
      throw std::invalid_argument("a0 must be >= 0");
    k.H0 = *opt.a0_override / k.c;
  }
  return k;
}

void add_common_flags(CLI::App* cmd, CommonOptions& opt, bool with_output) {
  if (with_output) {
    cmd->add_option("--output", opt.output, "Output file path");
    cmd->add_option("--format", opt.format, "Output format: csv | plot-script")
        ->check(CLI::IsMember({"csv", "plot-script"}));
  }
  cmd->add_option("--h0", opt.h0_kms_mpc, "Hubble constant in km/s/Mpc");
  cmd->add_option("--a0", opt.a0_override,
                  "Override the expansion acceleration a0 in m/s^2");
  cmd->add_option("--config", opt.config_path,
                  "Key=value config file (h0, g, m_sun); flags override");
  cmd->add_option("--seed", opt.seed, "Seed for randomized suites");
}

mvst::Vector3 parse_vec3(const std::string& text, const char* what) {
  mvst::Vector3 v;
  char comma1 = 0, comma2 = 0;
  std::istringstream ss(text);
  ss >> v.x >> comma1 >> v.y >> comma2 >> v.z;
  if (!ss || comma1 != ',' || comma2 != ',')
    throw std::invalid_argument(std::string(what) +
                                ": expected \"x,y,z\", got \"" + text + "\"");
  return v;
}

void write_gnuplot_script(const std::string& csv_path,
                          const std::string& script_path,
                          const std::string& plot_body) {
  std::ofstream f(script_path);
  if (!f)
    throw std::invalid_argument("cannot open " + script_path + " for writing");
  f << "set datafile separator ','\n"
    << "set key left top\n"
    << "set grid\n"
    << "csv = '" << csv_path << "'\n"
    << plot_body;
}

std::string script_path_for(const std::string& csv_path) {
  return csv_path + ".gnuplot";
}

// --- check ---------------------------------------------------------------

int run_check(const CommonOptions& common, int trials, bool inject_fault) {
  mvst::CheckOptions opt;
  opt.seed = common.seed;
  opt.trials = trials;
  if (inject_fault) opt.table.sign[mvst::kE1][mvst::kE2] *= -1.0;

  const auto results = mvst::run_check_suite(opt);
  int failures = 0;
  for (const auto& r : results) {
    std::printf("[%s] %-55s worst %.3e (tol %.1e)\n",
                r.passed ? "PASS" : "FAIL", r.name.c_str(), r.worst,
                r.tolerance);
    if (!r.passed) {
      ++failures;
      std::fprintf(stderr, "check: violated identity: %s (magnitude %.3e)\n",
                   r.name.c_str(), r.worst);
    }
  }
  std::printf("check: %zu identities, %d failed (seed %llu, %d trials)\n",
              results.size(), failures,
              static_cast<unsigned long long>(common.seed), trials);
  return failures == 0 ? kExitOk : kExitNumerical;
}

// --- boost ---------------------------------------------------------------

int run_boost(const CommonOptions& common, const std::string& space_text,
              const std::string& time_text, double beta,
              const std::string& axis_text) {
  const mvst::PhysicalConstants k = resolve_constants(common);
  const mvst::Vector3 x = parse_vec3(space_text, "--x");
  const mvst::Vector3 ct = parse_vec3(time_text, "--ct");
  mvst::Vector3 axis = parse_vec3(axis_text, "--axis");
  const double n = axis.norm();
  if (n <= 0.0) throw std::invalid_argument("--axis: zero vector");
  axis = axis / n;

  const mvst::SpacetimeEvent event = mvst::make_event(x, ct / k.c, k.c);
  mvst::LorentzOperator op;
  op.boost_direction = axis;
  op.rapidity = mvst::rapidity_from_velocity(beta * k.c, k.c);

  const mvst::SpacetimeEvent after = mvst::lorentz_transform(event, op);
  const double s2_before = mvst::interval_squared(event);
  const double s2_after = mvst::interval_squared(after);

  std::printf("X  = %s\n", mvst::to_debug_string(event.to_multivector()).c_str());
  std::printf("X' = %s\n", mvst::to_debug_string(after.to_multivector()).c_str());
  std::printf("interval^2 before = %s\n", mvst::format_g17(s2_before).c_str());
  std::printf("interval^2 after  = %s\n", mvst::format_g17(s2_after).c_str());
  return kExitOk;
}

// --- rotation-curve ------------------------------------------------------

int run_rotation_curve(const CommonOptions& common, double mass_msun,
                       double rmin_ly, double rmax_ly, std::size_t samples) {
  const mvst::PhysicalConstants k = resolve_constants(common);
  mvst::GalaxyModel model;
  model.constants = k;
  model.central_mass = mass_msun * k.M_sun;
  model.test_mass = k.M_sun;
  const double r_min = rmin_ly * k.light_year;
  const double r_max = rmax_ly * k.light_year;

  const mvst::RotationCurve curve =
      mvst::rotation_curve(model, r_min, r_max, samples);

  mvst::CsvTable table;
  table.header = {"r_m",           "r_ly",          "v_newton_m_s",
                  "v_modified_m_s", "v_newton_km_s", "v_modified_km_s"};
  for (std::size_t i = 0; i < curve.radii.size(); ++i) {
    const double r = curve.radii[i];
    table.rows.push_back({r, r / k.light_year, curve.v_newtonian[i],
                          curve.v_modified[i], curve.v_newtonian[i] / 1e3,
                          curve.v_modified[i] / 1e3});
  }
  if (k.a0() > 0.0) {
    const double rstar = mvst::crossover_radius(model);
    table.footer_comments.push_back("crossover_radius_m = " +
                                    mvst::format_g17(rstar));
    table.footer_comments.push_back(
        "crossover_radius_ly = " + mvst::format_g17(rstar / k.light_year));
  }

  const std::string path = common.output.empty() ? "rotation_curve.csv"
                                                 : common.output;
  mvst::write_csv(path, table);
  if (common.format == "plot-script") {
    write_gnuplot_script(
        path, script_path_for(path),
        "set xlabel 'radius [light years]'\n"
        "set ylabel 'orbital speed [km/s]'\n"
        "set label 'Sun (26000 ly, 240 km/s)' at 26000,240 point pt 7 "
        "offset 1,1\n"
        "plot csv using 2:5 with lines title 'Newtonian', \\\n"
        "     csv using 2:6 with lines title 'Modified'\n");
    std::printf("wrote %s and %s\n", path.c_str(),
                script_path_for(path).c_str());
  } else {
    std::printf("wrote %s (%zu rows)\n", path.c_str(), table.rows.size());
  }
  return kExitOk;
}

// --- effective-potential -------------------------------------------------

int run_effective_potential(const CommonOptions& common, double mass_msun,
                            double test_mass_msun, double angmom,
                            double vref_kms, double rref_ly, double rmin_ly,
                            double rmax_ly, std::size_t samples) {
  const mvst::PhysicalConstants k = resolve_constants(common);
  mvst::GalaxyModel model;
  model.constants = k;
  model.central_mass = mass_msun * k.M_sun;
  model.test_mass = test_mass_msun * k.M_sun;
  if (angmom > 0.0) {
    model.angular_momentum = angmom;
  } else if (vref_kms > 0.0 && rref_ly > 0.0) {
    model.angular_momentum =
        model.test_mass * vref_kms * 1e3 * rref_ly * k.light_year;
  } else {
    throw std::invalid_argument(
        "effective-potential: specify --angmom, or --vref with --rref");
  }
  if (samples < 2)
    throw std::invalid_argument("effective-potential: need --samples >= 2");
  const double r_min = rmin_ly * k.light_year;
  const double r_max = rmax_ly * k.light_year;
  if (!(r_min > 0.0) || !(r_max > r_min))
    throw std::invalid_argument("effective-potential: need 0 < rmin < rmax");

  const mvst::GalaxyModel newton = model.newtonian();
  mvst::CsvTable table;
  table.header = {"r_m", "r_ly", "V_e_newtonian_J", "V_e_modified_J"};
  const double dr = (r_max - r_min) / static_cast<double>(samples - 1);
  for (std::size_t i = 0; i < samples; ++i) {
    const double r = r_min + static_cast<double>(i) * dr;
    table.rows.push_back({r, r / k.light_year,
                          mvst::effective_potential(r, newton),
                          mvst::effective_potential(r, model)});
  }
  const double min_newton = mvst::circular_orbit_radius(newton);
  const double min_modified = mvst::circular_orbit_radius(model);
  table.footer_comments.push_back("minimum_newtonian_r_m = " +
                                  mvst::format_g17(min_newton));
  table.footer_comments.push_back("minimum_modified_r_m = " +
                                  mvst::format_g17(min_modified));
  table.footer_comments.push_back(
      "minimum_newtonian_r_ly = " +
      mvst::format_g17(min_newton / k.light_year));
  table.footer_comments.push_back(
      "minimum_modified_r_ly = " +
      mvst::format_g17(min_modified / k.light_year));

  const std::string path =
      common.output.empty() ? "effective_potential.csv" : common.output;
  mvst::write_csv(path, table);
  if (common.format == "plot-script") {
    write_gnuplot_script(
        path, script_path_for(path),
        "set xlabel 'radius [light years]'\n"
        "set ylabel 'effective potential [J]'\n"
        "plot csv using 2:3 with lines title 'Newtonian', \\\n"
        "     csv using 2:4 with lines title 'Modified'\n");
    std::printf("wrote %s and %s\n", path.c_str(),
                script_path_for(path).c_str());
  } else {
    std::printf("wrote %s (%zu rows)\n", path.c_str(), table.rows.size());
  }
  return kExitOk;
}

// --- geodesic ------------------------------------------------------------

int run_geodesic(const CommonOptions& common, double mass_msun,
                 double radius_ly, double speed_kms, std::size_t steps,
                 double step_size) {
  const mvst::PhysicalConstants k = resolve_constants(common);
  if (steps == 0) throw std::invalid_argument("geodesic: need --steps >= 1");
  mvst::MetricModel model;
  model.constants = k;
  model.central_mass = mass_msun * k.M_sun;
  const double r = radius_ly * k.light_year;
  if (!(r > 0.0)) throw std::invalid_argument("geodesic: need --radius > 0");
  const double v = speed_kms * 1e3;

  mvst::GeodesicState state;
  state.position = {0.0, r, 3.14159265358979323846 / 2.0, 0.0, 0.0};
  // Affine parameter scaled so dx^0/ds = 1; tangential speed v gives
  // drho/ds = v / (c r).
  state.velocity = {1.0, 0.0, 0.0, v / (k.c * r), 0.0};

  if (step_size <= 0.0) {
    // Default: 1/1000 of the circular-orbit period at the initial radius,
    // in affine units (s ~ ct).
    const double GM = k.G * model.central_mass;
    const double period =
        2.0 * 3.14159265358979323846 * std::sqrt(r * r * r / GM);
    step_size = period * k.c / 1000.0;
  }

  const double norm0 = mvst::affine_norm(model, state);
  const mvst::Trajectory traj =
      mvst::integrate_geodesic(state, model, steps, step_size);
  if (!traj.completed)
    throw mvst::NumericalError("geodesic: integration halted at step " +
                               std::to_string(traj.failed_step) + ": " +
                               traj.failure);

  mvst::CsvTable table;
  table.header = {"s",  "ct", "r",  "theta", "rho", "tau_v",
                  "u0", "u1", "u2", "u3",    "u4"};
  for (std::size_t i = 0; i < traj.states.size(); ++i) {
    const auto& st = traj.states[i];
    table.rows.push_back({traj.affine[i], st.position[0], st.position[1],
                          st.position[2], st.position[3], st.position[4],
                          st.velocity[0], st.velocity[1], st.velocity[2],
                          st.velocity[3], st.velocity[4]});
  }
  double drift = 0.0;
  for (const auto& st : traj.states) {
    const double norm = mvst::affine_norm(model, st);
    drift = std::max(drift,
                     std::abs(norm - norm0) / std::max(1.0, std::abs(norm0)));
  }
  table.footer_comments.push_back("affine_norm_initial = " +
                                  mvst::format_g17(norm0));
  table.footer_comments.push_back("affine_norm_relative_drift = " +
                                  mvst::format_g17(drift));

  const std::string path =
      common.output.empty() ? "geodesic.csv" : common.output;
  mvst::write_csv(path, table);
  std::printf("wrote %s (%zu rows)\n", path.c_str(), table.rows.size());
  std::printf("affine norm relative drift over %zu steps: %s\n", steps,
              mvst::format_g17(drift).c_str());
  return kExitOk;
}

// --- remote-view ---------------------------------------------------------

int run_remote_view(double distance_m) {
  const mvst::CausalSeparation sep = mvst::causal_null_time(distance_m);
  std::printf("distance d       = %s m\n",
              mvst::format_g17(sep.distance).c_str());
  std::printf("time component s = %s m\n",
              mvst::format_g17(sep.time_component_s).c_str());
  std::printf("time component t = %s m (instantaneous)\n",
              mvst::format_g17(sep.time_component_t).c_str());
  std::printf("(dS)^2           = %s m^2\n",
              mvst::format_g17(sep.interval()).c_str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Multivector spacetime toolkit: Cl(3,0) identities, Lorentz boosts, "
      "five-dimensional weak-field geodesics, and modified galaxy rotation "
      "curves"};
  app.require_subcommand(1);

  CommonOptions common;

  auto* check = app.add_subcommand("check", "Run the randomized identity suites");
  int trials = 1000;
  bool inject_fault = false;
  check->add_option("--trials", trials, "Trials per randomized identity");
  check->add_flag("--inject-fault", inject_fault, "")->group("");  // test hook
  add_common_flags(check, common, false);

  auto* boost = app.add_subcommand("boost", "Lorentz-transform a spacetime event");
  std::string x_text = "0,0,0", ct_text = "0,0,0", axis_text = "1,0,0";
  double beta = 0.0;
  boost->add_option("--x", x_text, "Space part x1,x2,x3 (m)");
  boost->add_option("--ct", ct_text, "Scaled time part c*t1,c*t2,c*t3 (m)");
  boost->add_option("--beta", beta, "Boost speed as a fraction of c");
  boost->add_option("--axis", axis_text, "Boost direction");
  add_common_flags(boost, common, false);

  auto* rot = app.add_subcommand("rotation-curve",
                                 "Newtonian vs modified rotation curve");
  double mass_msun = 1e11, rmin_ly = 5000.0, rmax_ly = 100000.0;
  std::size_t samples = 200;
  rot->add_option("--mass", mass_msun, "Central mass in solar masses");
  rot->add_option("--rmin", rmin_ly, "Minimum radius in light years");
  rot->add_option("--rmax", rmax_ly, "Maximum radius in light years");
  rot->add_option("--samples", samples, "Number of radii to sample");
  add_common_flags(rot, common, true);

  auto* pot = app.add_subcommand("effective-potential",
                                 "Effective potential sweep with minima");
  double test_mass_msun = 1.0, angmom = 0.0, vref_kms = 0.0, rref_ly = 0.0;
  double prmin_ly = 5000.0, prmax_ly = 100000.0;
  std::size_t psamples = 200;
  pot->add_option("--mass", mass_msun, "Central mass in solar masses");
  pot->add_option("--test-mass", test_mass_msun, "Test mass in solar masses");
  pot->add_option("--angmom", angmom, "Angular momentum L in kg m^2/s");
  pot->add_option("--vref", vref_kms,
                  "Circular speed (km/s) at --rref, used to set L");
  pot->add_option("--rref", rref_ly, "Reference radius (ly) for --vref");
  pot->add_option("--rmin", prmin_ly, "Minimum radius in light years");
  pot->add_option("--rmax", prmax_ly, "Maximum radius in light years");
  pot->add_option("--samples", psamples, "Number of radii to sample");
  add_common_flags(pot, common, true);

  auto* geo = app.add_subcommand("geodesic",
                                 "Integrate a five-dimensional geodesic");
  double radius_ly = 26000.0, speed_kms = 220.0, step_size = 0.0;
  std::size_t steps = 10000;
  geo->add_option("--mass", mass_msun, "Central mass in solar masses");
  geo->add_option("--radius", radius_ly, "Initial radius in light years");
  geo->add_option("--speed", speed_kms, "Initial tangential speed in km/s");
  geo->add_option("--steps", steps, "Number of RK4 steps");
  geo->add_option("--step-size", step_size,
                  "Affine step (m); default T_orbit*c/1000");
  add_common_flags(geo, common, true);

  auto* remote = app.add_subcommand(
      "remote-view", "Causal null separation for an instantaneous view");
  double distance_m = 0.0;
  remote->add_option("--distance", distance_m, "Distance d in meters")
      ->required();
  add_common_flags(remote, common, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::ofstream devnull("/dev/null");
    app.exit(e, devnull, std::cerr);
    return kExitValidation;
  }

  try {
    if (check->parsed()) return run_check(common, trials, inject_fault);
    if (boost->parsed())
      return run_boost(common, x_text, ct_text, beta, axis_text);
    if (rot->parsed())
      return run_rotation_curve(common, mass_msun, rmin_ly, rmax_ly, samples);
    if (pot->parsed())
      return run_effective_potential(common, mass_msun, test_mass_msun, angmom,
                                     vref_kms, rref_ly, prmin_ly, prmax_ly,
                                     psamples);
    if (geo->parsed())
      return run_geodesic(common, mass_msun, radius_ly, speed_kms, steps,
                          step_size);
    if (remote->parsed()) return run_remote_view(distance_m);
  } catch (const mvst::NumericalError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitValidation;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitNumerical;
  }
  return kExitValidation;
}
