#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "scarf/oracle.hpp"
#include "scarf/regimes.hpp"
#include "scarf/types.hpp"

namespace scarf {

// Inclusive linear grid; count == 1 emits start alone.
struct RangeSpec {
  double start = 0.0;
  double stop = 0.0;
  int count = 1;

  std::vector<double> values() const;
  void validate(const char* name, double min_start) const;
};

enum class OutputFormat { csv, json };

std::string to_string(OutputFormat format);
OutputFormat output_format_from_string(const std::string& name);

struct SweepConfig {
  RangeSpec A_range;
  RangeSpec B_range;
  RangeSpec k_range{0.1, 3.0, 30};
  bool oracle_enabled = false;
  ClassifyTolerances tolerances;
  OracleConfig oracle;
  OutputFormat format = OutputFormat::csv;
  std::string output_path;  // empty: stdout from the CLI
  int threads = 0;          // 0: hardware concurrency

  void validate() const;
};

struct SweepRecord {
  double A = 0.0;
  double B = 0.0;
  double k = 0.0;
  double T = 0.0;
  double R_left = 0.0;
  double R_right = 0.0;
  double unitarity_defect = 0.0;
  double reciprocity_defect = 0.0;
  double pseudo_unitarity_defect = 0.0;
  double oracle_dt = 0.0;
  double oracle_dr_left = 0.0;
  double oracle_dr_right = 0.0;
  bool singular = false;
};

struct SweepResult {
  SweepConfig config;
  std::vector<SweepRecord> records;        // grid order: A outer, B middle, k inner
  std::vector<RegimeReport> regime_reports;  // one per (A, B)
};

// Evaluates the grid on a worker pool; record order is the grid order
// regardless of scheduling. Oracle failures propagate as ConvergenceError.
SweepResult run_sweep(const SweepConfig& cfg);

struct SingularitySample {
  double k = 0.0;
  double T = 0.0;
  double R_left = 0.0;
  double R_right = 0.0;
  bool singular = false;
};

struct SingularityRun {
  SingularityParams params;
  double k_lo = 0.0;
  double k_hi = 0.0;
  std::vector<SingularitySample> samples;
  SingularityScanResult scan;
};

SingularityRun run_singularity(const SingularityParams& s, double k_lo, double k_hi, int samples);

// Shortest decimal representation that parses back to the same bits.
std::string format_double(double value);

void write_csv(const SweepResult& result, std::ostream& out);
void write_json(const SweepResult& result, std::ostream& out);
SweepResult read_sweep_json(std::istream& in);

void write_csv(const SingularityRun& run, std::ostream& out);
void write_json(const SingularityRun& run, std::ostream& out);

// key = value lines; '#' comments and blank lines ignored.
std::map<std::string, std::string> parse_key_values(std::istream& in);
// Unknown keys and malformed values raise DomainError.
void apply_key_values(SweepConfig& cfg, const std::map<std::string, std::string>& kv);

// $SCARFSCATTER_OUTPUT_DIR when set, else the current directory.
std::string default_output_dir();

}  // namespace scarf
