#include "z2mem/cli.hpp"

#include <fstream>
#include <iostream>
#include <cmath>
#include <memory>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "z2mem/csv.hpp"
#include "z2mem/eigensolve.hpp"
#include "z2mem/errors.hpp"
#include "z2mem/macroscopicity.hpp"
#include "z2mem/parallel.hpp"
#include "z2mem/rvb.hpp"
#include "z2mem/tfim.hpp"
#include "z2mem/thermal.hpp"

namespace z2mem {

namespace {

constexpr const char* kConventions =
    "conventions: J=1; periodic chain; H = -sum s_z(l)s_z(l+1) + lambda sum s_x(l); "
    "e1/e2 are unrescaled eigenvalues (VCM for pure states, W for thermal states)";

struct Common {
  int threads = 0;
  std::string out_path;
};

std::string join(const std::vector<double>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ',';
    s += format_double(values[i]);
  }
  return s;
}

// Writes to --out when given, otherwise to the caller's stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw DomainError("cannot open output file " + path);
      stream_ = file_.get();
    }
  }
  std::ostream& stream() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

std::vector<std::string> csv_comments(const std::string& command) {
  return {std::string("z2mem ") + Z2MEM_VERSION, "command: " + command, kConventions};
}

void check_range(int n_min, int n_max, int lo, int hi) {
  if (n_min < lo || n_min > n_max || n_max > hi) {
    throw DomainError("N range must satisfy " + std::to_string(lo) + " <= n-min <= n-max <= " +
                      std::to_string(hi));
  }
}

// --- scan-e1 --------------------------------------------------------------

struct ScanE1Args {
  int n_min = 6;
  int n_max = 13;
  std::vector<double> lambdas{0.5, 0.6, 0.7, 0.8, 0.9, 1.0, 1.1, 1.2, 1.3, 1.4, 1.5};
};

int cmd_scan_e1(const ScanE1Args& a, const Common& c, std::ostream& out) {
  check_range(a.n_min, a.n_max, 3, 14);
  if (a.lambdas.empty()) throw DomainError("--lambdas is empty");
  std::vector<ScanRecord> rows;
  for (double lambda : a.lambdas) {
    const auto points = vcm_scan(lambda, a.n_min, a.n_max, c.threads);
    std::vector<ScalePoint> e1;
    for (const auto& p : points) e1.push_back({p.n, p.e1});
    double p_fit = NAN;
    double r2 = NAN;
    if (e1.size() >= 3) {
      const IndexPEstimate est = fit_index_p(e1);
      p_fit = est.p;
      r2 = est.fit.r_squared;
    }
    for (const auto& p : points) {
      rows.push_back({"e1", p.n, lambda, std::nullopt,
                      {{"e1", p.e1}, {"e2", p.e2}, {"E0", p.ground_energy}, {"p_fit", p_fit},
                       {"r2", r2}}});
    }
  }
  Sink sink(c.out_path, out);
  CsvWriter w(sink.stream(), csv_comments("scan-e1 --n-min " + std::to_string(a.n_min) +
                                          " --n-max " + std::to_string(a.n_max) +
                                          " --lambdas " + join(a.lambdas)));
  w.write_all(rows);
  return kExitOk;
}

// --- pz --------------------------------------------------------------------

struct PzArgs {
  int n = 13;
  double lambda = 0.5;
  std::string state = "ground";
};

int cmd_pz(const PzArgs& a, const Common& c, std::ostream& out) {
  check_range(a.n, a.n, 3, 14);
  const EigenPairs pairs = lowest_eigenpairs(build_tfim(a.n, a.lambda), 2);
  StateVector psi = pairs.eigenvectors[0];
  if (a.state == "excited") {
    psi = pairs.eigenvectors[1];
  } else if (a.state == "superposed") {
    psi = superposed_state(pairs.eigenvectors[0], pairs.eigenvectors[1]);
  }
  const MzDistribution dist = mz_distribution(psi);
  Sink sink(c.out_path, out);
  CsvWriter w(sink.stream(), csv_comments("pz --n " + std::to_string(a.n) + " --lambda " +
                                          format_double(a.lambda) + " --state " + a.state));
  for (std::size_t i = 0; i < dist.support.size(); ++i) {
    w.write({"pz_" + a.state, a.n, a.lambda, std::nullopt,
             {{"mz", static_cast<double>(dist.support[i])}, {"probability", dist.probabilities[i]}}});
  }
  return kExitOk;
}

// --- e2 --------------------------------------------------------------------

struct RangeArgs {
  int n_min = 6;
  int n_max = 13;
  double lambda = 0.5;
};

int cmd_e2(const RangeArgs& a, const Common& c, std::ostream& out) {
  check_range(a.n_min, a.n_max, 3, 14);
  const auto points = vcm_scan(a.lambda, a.n_min, a.n_max, c.threads);
  std::vector<ScalePoint> e2;
  for (const auto& p : points) e2.push_back({p.n, p.e2});
  double slope = NAN;
  double r2 = NAN;
  if (e2.size() >= 3) {
    const IndexPEstimate est = fit_index_p(e2);
    slope = est.fit.slope;
    r2 = est.fit.r_squared;
  }
  Sink sink(c.out_path, out);
  CsvWriter w(sink.stream(), csv_comments("e2 --n-min " + std::to_string(a.n_min) + " --n-max " +
                                          std::to_string(a.n_max) + " --lambda " +
                                          format_double(a.lambda)));
  for (const auto& p : points) {
    w.write({"e2", p.n, a.lambda, std::nullopt,
             {{"e1", p.e1}, {"e2", p.e2}, {"e2_slope", slope}, {"r2", r2}}});
  }
  return kExitOk;
}

// --- gap -------------------------------------------------------------------

int cmd_gap(const RangeArgs& a, const Common& c, std::ostream& out) {
  const auto gaps = gap_scan(a.lambda, a.n_min, a.n_max, c.threads);
  const auto times = adiabatic_time_estimate(gaps);
  std::vector<ScalePoint> pts;
  for (const auto& g : gaps) pts.push_back({g.n, g.gap});
  ScalingFit fit;
  fit.slope = fit.intercept = fit.r_squared = NAN;
  if (pts.size() >= 3) fit = fit_exponential_gap(pts);

  Sink sink(c.out_path, out);
  CsvWriter w(sink.stream(), csv_comments("gap --n-min " + std::to_string(a.n_min) + " --n-max " +
                                          std::to_string(a.n_max) + " --lambda " +
                                          format_double(a.lambda)));
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    const auto& g = gaps[i];
    w.write({"gap", g.n, a.lambda, std::nullopt,
             {{"E0", g.e0}, {"E1", g.e1}, {"gap", g.gap}, {"ln_gap", std::log(g.gap)},
              {"T_adiabatic", times[i].time}, {"fit_slope", fit.slope},
              {"fit_intercept", fit.intercept}, {"r2", fit.r_squared}}});
  }
  return kExitOk;
}

// --- superpose -------------------------------------------------------------

int cmd_superpose(const RangeArgs& a, const Common& c, std::ostream& out) {
  check_range(a.n_min, a.n_max, 3, 14);
  struct Row {
    int n;
    double e1, e2, mz;
  };
  const auto rows = parallel_map(static_cast<std::size_t>(a.n_max - a.n_min + 1), c.threads,
                                 [&](std::size_t i) {
                                   const int n = a.n_min + static_cast<int>(i);
                                   const EigenPairs pairs = lowest_eigenpairs(build_tfim(n, a.lambda), 2);
                                   const StateVector s =
                                       superposed_state(pairs.eigenvectors[0], pairs.eigenvectors[1]);
                                   const CorrelationMatrix v = build_vcm(s);
                                   return Row{n, v.e1(), v.e2(), magnetization_z(s)};
                                 });
  std::vector<ScalePoint> e1;
  for (const auto& r : rows) e1.push_back({r.n, r.e1});
  double slope = NAN;
  double r2 = NAN;
  if (e1.size() >= 3) {
    const IndexPEstimate est = fit_index_p(e1);
    slope = est.fit.slope;
    r2 = est.fit.r_squared;
  }
  Sink sink(c.out_path, out);
  CsvWriter w(sink.stream(), csv_comments("superpose --n-min " + std::to_string(a.n_min) +
                                          " --n-max " + std::to_string(a.n_max) + " --lambda " +
                                          format_double(a.lambda)));
  for (const auto& r : rows) {
    w.write({"superpose", r.n, a.lambda, std::nullopt,
             {{"e1", r.e1}, {"e2", r.e2}, {"mz_mean", r.mz}, {"e1_slope", slope}, {"r2", r2}}});
  }
  return kExitOk;
}

// --- thermal ---------------------------------------------------------------

struct ThermalArgs {
  int n = 8;
  double lambda = 0.5;
  double kt_min = 0.05;
  double kt_max = 2.0;
  int kt_points = 40;
};

int cmd_thermal(const ThermalArgs& a, const Common& c, std::ostream& out) {
  const auto grid = log_grid(a.kt_min, a.kt_max, a.kt_points);
  const auto points = thermal_scan(a.lambda, a.n, grid, c.threads);
  Sink sink(c.out_path, out);
  CsvWriter w(sink.stream(),
              csv_comments("thermal --n " + std::to_string(a.n) + " --lambda " +
                           format_double(a.lambda) + " --kt-min " + format_double(a.kt_min) +
                           " --kt-max " + format_double(a.kt_max) + " --kt-points " +
                           std::to_string(a.kt_points)));
  for (const auto& p : points) {
    w.write({"thermal", a.n, a.lambda, p.kT, {{"e1_W", p.e1}, {"energy", p.energy}}});
  }
  return kExitOk;
}

// --- rvb -------------------------------------------------------------------

int cmd_rvb(int n, std::ostream& out) {
  const auto checks = rvb_identity_checks(n);
  bool all = true;
  out << "# z2mem " << Z2MEM_VERSION << " rvb --n " << n << '\n';
  for (const auto& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << " value=" << format_double(c.value)
        << " expected=" << format_double(c.expected) << " range=[" << format_double(c.lower)
        << ", " << format_double(c.upper) << "]\n";
    all = all && c.passed;
  }
  out << (all ? "ALL PASS" : "SOME CHECKS FAILED") << '\n';
  return all ? kExitOk : kExitCheckFailed;
}

// --- stabilizer ------------------------------------------------------------

struct StabilizerArgs {
  int n_min = 3;
  int n_max = 10;
  double lambda = 0.5;
  std::uint64_t seed = 20240601;
};

int cmd_stabilizer(const StabilizerArgs& a, std::ostream& out) {
  check_range(a.n_min, a.n_max, 3, 12);
  std::mt19937_64 rng(a.seed);
  std::normal_distribution<double> gauss;
  bool all = true;
  out << "# z2mem " << Z2MEM_VERSION << " stabilizer --n-min " << a.n_min << " --n-max "
      << a.n_max << " --lambda " << format_double(a.lambda) << " --seed " << a.seed << '\n';
  for (int n = a.n_min; n <= a.n_max; ++n) {
    const StabilizerReport r = stabilizer_check(n);

    // Random probe: [H, X] = 0 on a random state.
    std::vector<Complex> amps(std::size_t{1} << n);
    for (auto& x : amps) x = Complex{gauss(rng), gauss(rng)};
    StateVector psi(n, std::move(amps));
    psi.normalize();
    const TfimHamiltonian h = build_tfim(n, a.lambda);
    const StateVector hx = h.apply(apply_global_flip(psi));
    const StateVector xh = apply_global_flip(h.apply(psi));
    double diff = 0.0;
    for (std::size_t i = 0; i < hx.dim(); ++i) diff += std::norm(hx[i] - xh[i]);
    diff = std::sqrt(diff);

    const bool ok = r.code_dimension == 2 && r.max_residual() < 1e-12 && diff < 1e-12;
    all = all && ok;
    out << (ok ? "PASS" : "FAIL") << " n=" << n << " code_dimension=" << r.code_dimension
        << " product_identity=" << format_double(r.product_identity_residual)
        << " x_commutation=" << format_double(r.x_commutation_residual)
        << " z_commutation=" << format_double(r.z_commutation_residual)
        << " xz_anticommutation=" << format_double(r.anticommutation_residual)
        << " h_flip_commutation=" << format_double(diff) << '\n';
  }
  out << (all ? "ALL PASS" : "SOME CHECKS FAILED") << '\n';
  return all ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact-diagonalization toolkit for the periodic transverse-field Ising chain", "z2mem"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(Z2MEM_VERSION));

  Common common;
  auto add_common = [&common](CLI::App* sub, bool csv) {
    sub->add_option("--threads", common.threads, "Worker threads (0 = all logical processors)")
        ->check(CLI::NonNegativeNumber);
    if (csv) sub->add_option("--out", common.out_path, "Write CSV to this file instead of stdout");
  };

  ScanE1Args scan;
  auto* s_scan = app.add_subcommand("scan-e1", "e1 of the VCM of the ground state versus N");
  s_scan->add_option("--n-min", scan.n_min)->capture_default_str();
  s_scan->add_option("--n-max", scan.n_max)->capture_default_str();
  s_scan->add_option("--lambdas", scan.lambdas, "Comma-separated field values")->delimiter(',');
  add_common(s_scan, true);

  PzArgs pz;
  auto* s_pz = app.add_subcommand("pz", "Probability distribution P(M_z)");
  s_pz->add_option("--n", pz.n)->capture_default_str();
  s_pz->add_option("--lambda", pz.lambda)->capture_default_str();
  s_pz->add_option("--state", pz.state)
      ->check(CLI::IsMember({"ground", "excited", "superposed"}))
      ->capture_default_str();
  add_common(s_pz, true);

  RangeArgs e2;
  auto* s_e2 = app.add_subcommand("e2", "Second VCM eigenvalue of the ground state versus N");
  s_e2->add_option("--n-min", e2.n_min)->capture_default_str();
  s_e2->add_option("--n-max", e2.n_max)->capture_default_str();
  s_e2->add_option("--lambda", e2.lambda)->capture_default_str();
  add_common(s_e2, true);

  RangeArgs gap{4, 13, 0.5};
  auto* s_gap = app.add_subcommand("gap", "Energy gap, exponential fit and adiabatic time");
  s_gap->add_option("--n-min", gap.n_min)->capture_default_str();
  s_gap->add_option("--n-max", gap.n_max)->capture_default_str();
  s_gap->add_option("--lambda", gap.lambda)->capture_default_str();
  add_common(s_gap, true);

  RangeArgs sup;
  auto* s_sup = app.add_subcommand("superpose", "e1 of (E0 + E1)/sqrt2 versus N");
  s_sup->add_option("--n-min", sup.n_min)->capture_default_str();
  s_sup->add_option("--n-max", sup.n_max)->capture_default_str();
  s_sup->add_option("--lambda", sup.lambda)->capture_default_str();
  add_common(s_sup, true);

  ThermalArgs th;
  auto* s_th = app.add_subcommand("thermal", "e1 of W for Gibbs states versus kT");
  s_th->add_option("--n", th.n)->capture_default_str();
  s_th->add_option("--lambda", th.lambda)->capture_default_str();
  s_th->add_option("--kt-min", th.kt_min)->capture_default_str();
  s_th->add_option("--kt-max", th.kt_max)->capture_default_str();
  s_th->add_option("--kt-points", th.kt_points)->capture_default_str();
  add_common(s_th, true);

  int rvb_n = 8;
  auto* s_rvb = app.add_subcommand("rvb", "Verify the RVB state identities");
  s_rvb->add_option("--n", rvb_n)->capture_default_str();

  StabilizerArgs stab;
  int stab_n = 0;
  auto* s_stab = app.add_subcommand("stabilizer", "Verify the Z2 stabilizer-code algebra");
  s_stab->add_option("--n", stab_n, "Single chain length (overrides the range)");
  s_stab->add_option("--n-min", stab.n_min)->capture_default_str();
  s_stab->add_option("--n-max", stab.n_max)->capture_default_str();
  s_stab->add_option("--lambda", stab.lambda, "Field used by the random [H, X] probe")
      ->capture_default_str();
  s_stab->add_option("--seed", stab.seed, "Seed of the random probe state")->capture_default_str();

  std::vector<std::string> argv_store{"z2mem"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (s_scan->parsed()) return cmd_scan_e1(scan, common, out);
    if (s_pz->parsed()) return cmd_pz(pz, common, out);
    if (s_e2->parsed()) return cmd_e2(e2, common, out);
    if (s_gap->parsed()) return cmd_gap(gap, common, out);
    if (s_sup->parsed()) return cmd_superpose(sup, common, out);
    if (s_th->parsed()) return cmd_thermal(th, common, out);
    if (s_rvb->parsed()) return cmd_rvb(rvb_n, out);
    if (s_stab->parsed()) {
      if (stab_n != 0) stab.n_min = stab.n_max = stab_n;
      return cmd_stabilizer(stab, out);
    }
  } catch (const ConvergenceError& e) {
    err << "convergence error: " << e.what() << '\n';
    return kExitConvergence;
  } catch (const CapabilityError& e) {
    err << "capability error: " << e.what() << '\n';
    return kExitCapability;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ContractError& e) {
    err << "contract error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace z2mem
