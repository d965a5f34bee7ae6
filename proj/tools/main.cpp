#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "scarf/analytic.hpp"
#include "scarf/oracle.hpp"
#include "scarf/regimes.hpp"
#include "scarf/sweep.hpp"

namespace {

using namespace scarf;

std::string format_complex(const Complex& z) {
  std::string out = format_double(z.real());
  if (z.imag() >= 0 || std::isnan(z.imag())) out += '+';
  out += format_double(z.imag());
  out += 'i';
  return out;
}

void write_report_file(const SweepResult& result, const std::string& path) {
  if (path == "-") {
    if (result.config.format == OutputFormat::csv) write_csv(result, std::cout);
    else write_json(result, std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw DomainError("cannot open output file: " + path);
  if (result.config.format == OutputFormat::csv) write_csv(result, out);
  else write_json(result, out);
  std::cout << "wrote " << result.records.size() << " records, " << result.regime_reports.size()
            << " regime reports to " << path << '\n';
}

void print_amplitudes(const ScarfParams& p, WaveNumber k) {
  try {
    const ScatteringAmplitudes amps = amplitudes(p, k);
    std::cout << "t       = " << format_complex(amps.t) << '\n'
              << "r_left  = " << format_complex(amps.r_left) << '\n'
              << "r_right = " << format_complex(amps.r_right) << '\n'
              << "T       = " << format_double(amps.transmitivity()) << '\n'
              << "R_left  = " << format_double(amps.reflectivity_left()) << '\n'
              << "R_right = " << format_double(amps.reflectivity_right()) << '\n';
    const double T = amps.transmitivity();
    const double RL = amps.reflectivity_left();
    const double RR = amps.reflectivity_right();
    std::cout << "unitarity_defect        = " << format_double(RL + T - 1.0) << '\n'
              << "reciprocity_defect      = " << format_double(RL - RR) << '\n'
              << "pseudo_unitarity_defect = " << format_double(T + std::sqrt(RL * RR) - 1.0)
              << '\n';
  } catch (const SingularityError& e) {
    std::cout << "transmission pole: " << e.what() << '\n';
  }
}

void print_oracle_comparison(const ScarfParams& p, WaveNumber k, const OracleConfig& cfg) {
  const ScatteringAmplitudes amps = amplitudes(p, k);
  const OracleResult left = scatter_numeric(p, k, Side::left, cfg);
  const OracleResult right = scatter_numeric(p, k, Side::right, cfg);
  std::cout << "analytic t       = " << format_complex(amps.t) << '\n'
            << "numeric  t       = " << format_complex(left.t) << '\n'
            << "analytic r_left  = " << format_complex(amps.r_left) << '\n'
            << "numeric  r_left  = " << format_complex(left.r) << '\n'
            << "analytic r_right = " << format_complex(amps.r_right) << '\n'
            << "numeric  r_right = " << format_complex(right.r) << '\n'
            << "delta t          = "
            << format_double(std::abs(left.t - amps.t) / (1.0 + std::abs(amps.t))) << '\n'
            << "delta r_left     = "
            << format_double(std::abs(left.r - amps.r_left) / (1.0 + std::abs(amps.r_left)))
            << '\n'
            << "delta r_right    = "
            << format_double(std::abs(right.r - amps.r_right) / (1.0 + std::abs(amps.r_right)))
            << '\n'
            << "residual left    = " << format_double(left.residual) << " (" << left.steps_taken
            << " steps)\n"
            << "residual right   = " << format_double(right.residual) << " (" << right.steps_taken
            << " steps)\n";
  if (left.singular_regime || right.singular_regime) {
    std::cout << "singular regime: |t| exceeds the normal-scattering bound\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Scattering amplitudes and regime reports for the complex PT-symmetric Scarf II potential"};
  app.require_subcommand(1);

  // amplitudes
  double A = 0, A_im = 0, B = 0, B_im = 0, k = 1;
  bool with_oracle = false;
  OracleConfig oracle_cfg;
  auto* amp = app.add_subcommand("amplitudes", "Evaluate t, r_left, r_right at one (A, B, k) point");
  amp->add_option("--A", A, "Re A")->required();
  amp->add_option("--A-im", A_im, "Im A");
  amp->add_option("--B", B, "Re B")->required();
  amp->add_option("--B-im", B_im, "Im B");
  amp->add_option("--k", k, "wave number (> 0)")->required();
  amp->add_flag("--oracle", with_oracle, "also cross-check against the numerical oracle");
  amp->add_option("--oracle-rtol", oracle_cfg.relative_tolerance, "oracle step tolerance");
  amp->add_option("--half-width", oracle_cfg.domain_half_width, "oracle integration half width");

  // sweep
  std::string config_path, output_path, format_name;
  SweepConfig sweep_cfg;
  double a0 = 0, a1 = 0, b0 = 0, b1 = 0, k0 = 0.1, k1 = 3.0;
  int na = 1, nb = 1, nk = 30, threads = 0;
  double snap_tol = 0, residual_tol = 0, oracle_rtol = 0;
  bool sweep_oracle = false;
  auto* sweep = app.add_subcommand("sweep", "Evaluate a (A, B, k) grid and emit records plus regime reports");
  sweep->add_option("--config", config_path, "key = value config file; flags override it");
  auto* oAs = sweep->add_option("--A-start", a0);
  auto* oAe = sweep->add_option("--A-stop", a1);
  auto* oAn = sweep->add_option("--A-count", na);
  auto* oBs = sweep->add_option("--B-start", b0);
  auto* oBe = sweep->add_option("--B-stop", b1);
  auto* oBn = sweep->add_option("--B-count", nb);
  auto* oKs = sweep->add_option("--k-start", k0);
  auto* oKe = sweep->add_option("--k-stop", k1);
  auto* oKn = sweep->add_option("--k-count", nk);
  auto* oOr = sweep->add_flag("--oracle", sweep_oracle, "attach oracle delta columns");
  auto* oOt = sweep->add_option("--oracle-rtol", oracle_rtol);
  auto* oSn = sweep->add_option("--snap-tol", snap_tol, "lattice snap tolerance for regime flags");
  auto* oRs = sweep->add_option("--tol", residual_tol, "residual tolerance for regime flags");
  auto* oFm = sweep->add_option("--format", format_name)->check(CLI::IsMember({"csv", "json"}));
  auto* oOu = sweep->add_option("--output", output_path, "output file, '-' for stdout");
  auto* oTh = sweep->add_option("--threads", threads, "worker threads, 0 = hardware");

  // classify
  double cA = 0, cA_im = 0, cB = 0, cB_im = 0, ck0 = 0.1, ck1 = 3.0;
  int cnk = 30;
  ClassifyTolerances ctol;
  auto* cls = app.add_subcommand("classify", "Report regime flags for one (A, B) over a k grid");
  cls->add_option("--A", cA, "Re A")->required();
  cls->add_option("--A-im", cA_im, "Im A");
  cls->add_option("--B", cB, "Re B")->required();
  cls->add_option("--B-im", cB_im, "Im B");
  cls->add_option("--k-start", ck0);
  cls->add_option("--k-stop", ck1);
  cls->add_option("--k-count", cnk);
  cls->add_option("--snap-tol", ctol.snap, "lattice snap tolerance");
  cls->add_option("--tol", ctol.residual, "residual tolerance");

  // singularity
  int sn = 0, samples = 201;
  double alpha = 1.0, win_lo = 0, win_hi = 0;
  std::string s_format = "json", s_output;
  auto* sing = app.add_subcommand("singularity", "Scan a k window for the spectral-singularity pole");
  sing->add_option("--n", sn, "family index (n >= 0)")->check(CLI::NonNegativeNumber);
  sing->add_option("--alpha", alpha, "pole wave number (alpha > 0)")->check(CLI::PositiveNumber);
  auto* oWl = sing->add_option("--k-start", win_lo);
  auto* oWh = sing->add_option("--k-stop", win_hi);
  sing->add_option("--samples", samples)->check(CLI::Range(3, 1000000));
  sing->add_option("--format", s_format)->check(CLI::IsMember({"csv", "json"}));
  sing->add_option("--output", s_output, "output file, '-' for stdout");

  // oracle-compare
  double vA = 0, vA_im = 0, vB = 0, vB_im = 0, vk = 1;
  OracleConfig cmp_cfg;
  auto* cmp = app.add_subcommand("oracle-compare", "Analytic amplitudes against the numerical oracle");
  cmp->add_option("--A", vA, "Re A")->required();
  cmp->add_option("--A-im", vA_im, "Im A");
  cmp->add_option("--B", vB, "Re B")->required();
  cmp->add_option("--B-im", vB_im, "Im B");
  cmp->add_option("--k", vk, "wave number (>= 1e-3)")->required();
  cmp->add_option("--oracle-rtol", cmp_cfg.relative_tolerance, "oracle step tolerance");
  cmp->add_option("--half-width", cmp_cfg.domain_half_width, "oracle integration half width");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (amp->parsed()) {
      const ScarfParams p{Complex(A, A_im), Complex(B, B_im)};
      print_amplitudes(p, WaveNumber(k));
      if (with_oracle) print_oracle_comparison(p, WaveNumber(k), oracle_cfg);
    } else if (sweep->parsed()) {
      if (!config_path.empty()) {
        std::ifstream file(config_path);
        if (!file) throw DomainError("cannot read config file: " + config_path);
        apply_key_values(sweep_cfg, parse_key_values(file));
      }
      if (oAs->count()) sweep_cfg.A_range.start = a0;
      if (oAe->count()) sweep_cfg.A_range.stop = a1;
      if (oAn->count()) sweep_cfg.A_range.count = na;
      if (oBs->count()) sweep_cfg.B_range.start = b0;
      if (oBe->count()) sweep_cfg.B_range.stop = b1;
      if (oBn->count()) sweep_cfg.B_range.count = nb;
      if (oKs->count()) sweep_cfg.k_range.start = k0;
      if (oKe->count()) sweep_cfg.k_range.stop = k1;
      if (oKn->count()) sweep_cfg.k_range.count = nk;
      if (oOr->count()) sweep_cfg.oracle_enabled = sweep_oracle;
      if (oOt->count()) sweep_cfg.oracle.relative_tolerance = oracle_rtol;
      if (oSn->count()) sweep_cfg.tolerances.snap = snap_tol;
      if (oRs->count()) sweep_cfg.tolerances.residual = residual_tol;
      if (oFm->count()) sweep_cfg.format = output_format_from_string(format_name);
      if (oOu->count()) sweep_cfg.output_path = output_path;
      if (oTh->count()) sweep_cfg.threads = threads;
      if (sweep_cfg.output_path.empty()) {
        sweep_cfg.output_path =
            default_output_dir() + "/sweep." + to_string(sweep_cfg.format);
      }
      const SweepResult result = run_sweep(sweep_cfg);
      write_report_file(result, result.config.output_path);
    } else if (cls->parsed()) {
      const ScarfParams p{Complex(cA, cA_im), Complex(cB, cB_im)};
      const RegimeReport report = classify(p, make_k_grid(ck0, ck1, cnk), ctol);
      std::cout << "A = " << format_complex(p.A) << ", B = " << format_complex(p.B) << '\n';
      std::cout << "flags:";
      for (RegimeFlag f : report.flags) std::cout << ' ' << to_string(f);
      std::cout << '\n';
      for (const auto& [flag, residual] : report.residuals) {
        std::cout << (report.has(flag) ? "  " : "  (info) ") << to_string(flag)
                  << " residual = " << format_double(residual) << '\n';
      }
    } else if (sing->parsed()) {
      if (!oWl->count()) win_lo = std::max(alpha - 0.5, 1e-3);
      if (!oWh->count()) win_hi = alpha + 0.5;
      const SingularityParams sp{sn, alpha};
      const SingularityRun run = run_singularity(sp, win_lo, win_hi, samples);
      if (s_output.empty()) {
        s_output = default_output_dir() + "/singularity." + s_format;
      }
      if (s_output == "-") {
        if (s_format == "csv") write_csv(run, std::cout);
        else write_json(run, std::cout);
      } else {
        std::ofstream out(s_output);
        if (!out) throw DomainError("cannot open output file: " + s_output);
        if (s_format == "csv") write_csv(run, out);
        else write_json(run, out);
        std::cout << "wrote " << run.samples.size() << " samples to " << s_output << '\n';
      }
      std::cout << "A = " << format_complex(sp.params().A) << ", B = " << format_complex(sp.params().B)
                << '\n';
      std::cout << "peak T = " << format_double(run.scan.peak_T)
                << " at k = " << format_double(run.scan.k_star) << '\n';
      if (run.scan.pole_confirmed) {
        std::cout << "pole confirmed at k = " << format_double(run.scan.pole_k)
                  << " (E = " << format_double(run.scan.pole_k * run.scan.pole_k) << ")\n";
      } else {
        std::cout << "no transmission pole confirmed in window\n";
      }
    } else if (cmp->parsed()) {
      const ScarfParams p{Complex(vA, vA_im), Complex(vB, vB_im)};
      print_oracle_comparison(p, WaveNumber(vk), cmp_cfg);
    }
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const TruncationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
