#include "scarf/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <limits>
#include <cstdlib>
#include <exception>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "scarf/analytic.hpp"

namespace scarf {
namespace {

using nlohmann::json;

SweepRecord evaluate_point(const ScarfParams& p, WaveNumber k, const SweepConfig& cfg) {
  SweepRecord rec;
  rec.A = p.A.real();
  rec.B = p.B.real();
  rec.k = k.value();
  ScatteringAmplitudes amps;
  try {
    amps = amplitudes(p, k);
  } catch (const SingularityError&) {
    rec.singular = true;
  } catch (const OverflowError&) {
    rec.singular = true;
  }
  if (rec.singular) {
    rec.T = rec.R_left = rec.R_right = kSingularitySentinel;
    return rec;
  }
  rec.T = amps.transmitivity();
  rec.R_left = amps.reflectivity_left();
  rec.R_right = amps.reflectivity_right();
  rec.unitarity_defect = rec.R_left + rec.T - 1.0;
  rec.reciprocity_defect = rec.R_left - rec.R_right;
  rec.pseudo_unitarity_defect = rec.T + std::sqrt(rec.R_left * rec.R_right) - 1.0;
  if (cfg.oracle_enabled) {
    const OracleResult left = scatter_numeric(p, k, Side::left, cfg.oracle);
    const OracleResult right = scatter_numeric(p, k, Side::right, cfg.oracle);
    rec.oracle_dt = std::abs(left.t - amps.t) / (1.0 + std::abs(amps.t));
    rec.oracle_dr_left = std::abs(left.r - amps.r_left) / (1.0 + std::abs(amps.r_left));
    rec.oracle_dr_right = std::abs(right.r - amps.r_right) / (1.0 + std::abs(amps.r_right));
  }
  return rec;
}

const char* flag_names[] = {"unitary_case1", "unitary_case2", "reciprocal",     "invisible",
                            "anomalous",     "pseudo_unitary", "generic_handed"};

RegimeFlag regime_flag_from_string(const std::string& name) {
  for (int i = 0; i < 7; ++i) {
    if (name == flag_names[i]) return static_cast<RegimeFlag>(i);
  }
  throw DomainError("unknown regime flag: " + name);
}

json report_to_json(const RegimeReport& report) {
  json j;
  j["A_re"] = report.params.A.real();
  j["A_im"] = report.params.A.imag();
  j["B_re"] = report.params.B.real();
  j["B_im"] = report.params.B.imag();
  json grid = json::array();
  for (const WaveNumber& k : report.k_grid) grid.push_back(k.value());
  j["k_grid"] = std::move(grid);
  json flags = json::array();
  for (RegimeFlag f : report.flags) flags.push_back(to_string(f));
  j["flags"] = std::move(flags);
  json residuals = json::object();
  for (const auto& [flag, value] : report.residuals) residuals[to_string(flag)] = value;
  j["residuals"] = std::move(residuals);
  return j;
}

RegimeReport report_from_json(const json& j) {
  RegimeReport report;
  report.params.A = Complex(j.at("A_re").get<double>(), j.at("A_im").get<double>());
  report.params.B = Complex(j.at("B_re").get<double>(), j.at("B_im").get<double>());
  for (const auto& k : j.at("k_grid")) report.k_grid.emplace_back(k.get<double>());
  for (const auto& f : j.at("flags")) report.flags.insert(regime_flag_from_string(f.get<std::string>()));
  for (const auto& [name, value] : j.at("residuals").items()) {
    report.residuals[regime_flag_from_string(name)] = value.get<double>();
  }
  return report;
}

json range_to_json(const RangeSpec& r) {
  return json{{"start", r.start}, {"stop", r.stop}, {"count", r.count}};
}

RangeSpec range_from_json(const json& j) {
  return RangeSpec{j.at("start").get<double>(), j.at("stop").get<double>(), j.at("count").get<int>()};
}

json config_to_json(const SweepConfig& cfg) {
  json j;
  j["A_range"] = range_to_json(cfg.A_range);
  j["B_range"] = range_to_json(cfg.B_range);
  j["k_range"] = range_to_json(cfg.k_range);
  j["oracle_enabled"] = cfg.oracle_enabled;
  j["oracle"] = json{{"domain_half_width", cfg.oracle.domain_half_width},
                     {"relative_tolerance", cfg.oracle.relative_tolerance},
                     {"max_steps", cfg.oracle.max_steps}};
  j["tolerances"] = json{{"snap", cfg.tolerances.snap}, {"residual", cfg.tolerances.residual}};
  j["format"] = to_string(cfg.format);
  j["output_path"] = cfg.output_path;
  j["threads"] = cfg.threads;
  return j;
}

SweepConfig config_from_json(const json& j) {
  SweepConfig cfg;
  cfg.A_range = range_from_json(j.at("A_range"));
  cfg.B_range = range_from_json(j.at("B_range"));
  cfg.k_range = range_from_json(j.at("k_range"));
  cfg.oracle_enabled = j.at("oracle_enabled").get<bool>();
  cfg.oracle.domain_half_width = j.at("oracle").at("domain_half_width").get<double>();
  cfg.oracle.relative_tolerance = j.at("oracle").at("relative_tolerance").get<double>();
  cfg.oracle.max_steps = j.at("oracle").at("max_steps").get<long>();
  cfg.tolerances.snap = j.at("tolerances").at("snap").get<double>();
  cfg.tolerances.residual = j.at("tolerances").at("residual").get<double>();
  cfg.format = output_format_from_string(j.at("format").get<std::string>());
  cfg.output_path = j.at("output_path").get<std::string>();
  cfg.threads = j.at("threads").get<int>();
  return cfg;
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    size_t pos = 0;
    const double parsed = std::stod(value, &pos);
    if (pos == value.size()) return parsed;
  } catch (const std::exception&) {
  }
  throw DomainError("config: bad number for " + key + ": " + value);
}

int parse_int(const std::string& key, const std::string& value) {
  try {
    size_t pos = 0;
    const int parsed = std::stoi(value, &pos);
    if (pos == value.size()) return parsed;
  } catch (const std::exception&) {
  }
  throw DomainError("config: bad integer for " + key + ": " + value);
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw DomainError("config: bad boolean for " + key + ": " + value);
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

std::vector<double> RangeSpec::values() const {
  std::vector<double> out;
  out.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) {
    out.push_back(count == 1 ? start : start + i * (stop - start) / (count - 1));
  }
  return out;
}

void RangeSpec::validate(const char* name, double min_start) const {
  if (count < 1) throw DomainError(std::string(name) + " range: count must be >= 1");
  if (start > stop) throw DomainError(std::string(name) + " range: start must be <= stop");
  if (start < min_start) {
    throw DomainError(std::string(name) + " range: start must be >= " + format_double(min_start));
  }
}

std::string to_string(OutputFormat format) { return format == OutputFormat::csv ? "csv" : "json"; }

OutputFormat output_format_from_string(const std::string& name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  throw DomainError("unknown output format: " + name);
}

void SweepConfig::validate() const {
  A_range.validate("A", -std::numeric_limits<double>::infinity());
  B_range.validate("B", -std::numeric_limits<double>::infinity());
  k_range.validate("k", 1e-3);
  if (threads < 0) throw DomainError("threads must be >= 0");
  if (oracle.relative_tolerance <= 0 || oracle.domain_half_width <= 0 || oracle.max_steps < 1) {
    throw DomainError("oracle config: tolerance, half width, and step budget must be positive");
  }
}

SweepResult run_sweep(const SweepConfig& cfg) {
  cfg.validate();
  const std::vector<double> As = cfg.A_range.values();
  const std::vector<double> Bs = cfg.B_range.values();
  const std::vector<double> ks = cfg.k_range.values();

  SweepResult result;
  result.config = cfg;
  result.records.resize(As.size() * Bs.size() * ks.size());

  const size_t total = result.records.size();
  std::atomic<size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;

  auto worker = [&] {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= total) return;
      {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (error) return;
      }
      const size_t ik = i % ks.size();
      const size_t ib = (i / ks.size()) % Bs.size();
      const size_t ia = i / (ks.size() * Bs.size());
      try {
        result.records[i] =
            evaluate_point(ScarfParams{Complex(As[ia]), Complex(Bs[ib])}, WaveNumber(ks[ik]), cfg);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };

  unsigned n_threads = cfg.threads > 0 ? static_cast<unsigned>(cfg.threads)
                                       : std::max(1u, std::thread::hardware_concurrency());
  n_threads = static_cast<unsigned>(std::min<size_t>(n_threads, total));
  std::vector<std::thread> pool;
  pool.reserve(n_threads);
  for (unsigned i = 0; i < n_threads; ++i) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  if (error) std::rethrow_exception(error);

  std::vector<WaveNumber> k_grid;
  k_grid.reserve(ks.size());
  for (double k : ks) k_grid.emplace_back(k);
  for (double A : As) {
    for (double B : Bs) {
      const ScarfParams p{Complex(A), Complex(B)};
      try {
        result.regime_reports.push_back(classify(p, k_grid, cfg.tolerances));
      } catch (const std::exception&) {
        RegimeReport degenerate;
        degenerate.params = p;
        degenerate.k_grid = k_grid;
        result.regime_reports.push_back(std::move(degenerate));
      }
    }
  }
  return result;
}

SingularityRun run_singularity(const SingularityParams& s, double k_lo, double k_hi, int samples) {
  SingularityRun run;
  run.params = s;
  run.k_lo = k_lo;
  run.k_hi = k_hi;
  run.scan = singularity_scan(s, k_lo, k_hi, samples);
  const ScarfParams p = s.params();
  run.samples.reserve(static_cast<size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    const double k = std::max(k_lo + i * (k_hi - k_lo) / (samples - 1), 1e-3);
    SingularitySample sample;
    sample.k = k;
    try {
      const ScatteringAmplitudes amps = amplitudes(p, WaveNumber(k));
      sample.T = amps.transmitivity();
      sample.R_left = amps.reflectivity_left();
      sample.R_right = amps.reflectivity_right();
    } catch (const SingularityError&) {
      sample.singular = true;
    } catch (const OverflowError&) {
      sample.singular = true;
    }
    if (sample.singular) {
      sample.T = sample.R_left = sample.R_right = kSingularitySentinel;
    }
    run.samples.push_back(sample);
  }
  return run;
}

std::string format_double(double value) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  (void)ec;
  return std::string(buf, ptr);
}

void write_csv(const SweepResult& result, std::ostream& out) {
  out << "A,B,k,T,R_left,R_right,unitarity_defect,reciprocity_defect,pseudo_unitarity_defect";
  if (result.config.oracle_enabled) out << ",oracle_dt,oracle_dr_left,oracle_dr_right";
  out << '\n';
  for (const SweepRecord& r : result.records) {
    out << format_double(r.A) << ',' << format_double(r.B) << ',' << format_double(r.k) << ','
        << format_double(r.T) << ',' << format_double(r.R_left) << ',' << format_double(r.R_right)
        << ',' << format_double(r.unitarity_defect) << ',' << format_double(r.reciprocity_defect)
        << ',' << format_double(r.pseudo_unitarity_defect);
    if (result.config.oracle_enabled) {
      out << ',' << format_double(r.oracle_dt) << ',' << format_double(r.oracle_dr_left) << ','
          << format_double(r.oracle_dr_right);
    }
    out << '\n';
  }
}

void write_json(const SweepResult& result, std::ostream& out) {
  json j;
  j["config"] = config_to_json(result.config);
  json records = json::array();
  for (const SweepRecord& r : result.records) {
    json rec{{"A", r.A},
             {"B", r.B},
             {"k", r.k},
             {"T", r.T},
             {"R_left", r.R_left},
             {"R_right", r.R_right},
             {"unitarity_defect", r.unitarity_defect},
             {"reciprocity_defect", r.reciprocity_defect},
             {"pseudo_unitarity_defect", r.pseudo_unitarity_defect},
             {"singular", r.singular}};
    if (result.config.oracle_enabled) {
      rec["oracle_dt"] = r.oracle_dt;
      rec["oracle_dr_left"] = r.oracle_dr_left;
      rec["oracle_dr_right"] = r.oracle_dr_right;
    }
    records.push_back(std::move(rec));
  }
  j["records"] = std::move(records);
  json reports = json::array();
  for (const RegimeReport& report : result.regime_reports) reports.push_back(report_to_json(report));
  j["regime_reports"] = std::move(reports);
  out << j.dump(2) << '\n';
}

SweepResult read_sweep_json(std::istream& in) {
  const json j = json::parse(in);
  SweepResult result;
  result.config = config_from_json(j.at("config"));
  for (const auto& rec : j.at("records")) {
    SweepRecord r;
    r.A = rec.at("A").get<double>();
    r.B = rec.at("B").get<double>();
    r.k = rec.at("k").get<double>();
    r.T = rec.at("T").get<double>();
    r.R_left = rec.at("R_left").get<double>();
    r.R_right = rec.at("R_right").get<double>();
    r.unitarity_defect = rec.at("unitarity_defect").get<double>();
    r.reciprocity_defect = rec.at("reciprocity_defect").get<double>();
    r.pseudo_unitarity_defect = rec.at("pseudo_unitarity_defect").get<double>();
    r.singular = rec.at("singular").get<bool>();
    r.oracle_dt = rec.value("oracle_dt", 0.0);
    r.oracle_dr_left = rec.value("oracle_dr_left", 0.0);
    r.oracle_dr_right = rec.value("oracle_dr_right", 0.0);
    result.records.push_back(r);
  }
  for (const auto& rep : j.at("regime_reports")) {
    result.regime_reports.push_back(report_from_json(rep));
  }
  return result;
}

void write_csv(const SingularityRun& run, std::ostream& out) {
  out << "k,T,R_left,R_right\n";
  for (const SingularitySample& s : run.samples) {
    out << format_double(s.k) << ',' << format_double(s.T) << ',' << format_double(s.R_left) << ','
        << format_double(s.R_right) << '\n';
  }
}

void write_json(const SingularityRun& run, std::ostream& out) {
  json j;
  j["params"] = json{{"n", run.params.n}, {"alpha", run.params.alpha}};
  j["k_window"] = json{{"lo", run.k_lo}, {"hi", run.k_hi}};
  json samples = json::array();
  for (const SingularitySample& s : run.samples) {
    samples.push_back(json{{"k", s.k},
                           {"T", s.T},
                           {"R_left", s.R_left},
                           {"R_right", s.R_right},
                           {"singular", s.singular}});
  }
  j["samples"] = std::move(samples);
  j["scan"] = json{{"k_star", run.scan.k_star},
                   {"peak_T", run.scan.peak_T},
                   {"pole_confirmed", run.scan.pole_confirmed},
                   {"pole_k", run.scan.pole_k}};
  out << j.dump(2) << '\n';
}

std::map<std::string, std::string> parse_key_values(std::istream& in) {
  std::map<std::string, std::string> kv;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw DomainError("config line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key = trim(body.substr(0, eq));
    const std::string value = trim(body.substr(eq + 1));
    if (key.empty()) {
      throw DomainError("config line " + std::to_string(line_no) + ": empty key");
    }
    kv[key] = value;
  }
  return kv;
}

void apply_key_values(SweepConfig& cfg, const std::map<std::string, std::string>& kv) {
  for (const auto& [key, value] : kv) {
    if (key == "A_start") cfg.A_range.start = parse_double(key, value);
    else if (key == "A_stop") cfg.A_range.stop = parse_double(key, value);
    else if (key == "A_count") cfg.A_range.count = parse_int(key, value);
    else if (key == "B_start") cfg.B_range.start = parse_double(key, value);
    else if (key == "B_stop") cfg.B_range.stop = parse_double(key, value);
    else if (key == "B_count") cfg.B_range.count = parse_int(key, value);
    else if (key == "k_start") cfg.k_range.start = parse_double(key, value);
    else if (key == "k_stop") cfg.k_range.stop = parse_double(key, value);
    else if (key == "k_count") cfg.k_range.count = parse_int(key, value);
    else if (key == "oracle") cfg.oracle_enabled = parse_bool(key, value);
    else if (key == "oracle_rtol") cfg.oracle.relative_tolerance = parse_double(key, value);
    else if (key == "oracle_half_width") cfg.oracle.domain_half_width = parse_double(key, value);
    else if (key == "oracle_max_steps") cfg.oracle.max_steps = parse_int(key, value);
    else if (key == "snap_tol") cfg.tolerances.snap = parse_double(key, value);
    else if (key == "residual_tol") cfg.tolerances.residual = parse_double(key, value);
    else if (key == "format") cfg.format = output_format_from_string(value);
    else if (key == "output") cfg.output_path = value;
    else if (key == "threads") cfg.threads = parse_int(key, value);
    else throw DomainError("config: unknown key: " + key);
  }
}

std::string default_output_dir() {
  const char* dir = std::getenv("SCARFSCATTER_OUTPUT_DIR");
  if (dir != nullptr && dir[0] != '\0') return dir;
  return ".";
}

}  // namespace scarf
