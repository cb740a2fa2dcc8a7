#ifndef DOTOEP_EXPERIMENTS_HPP
#define DOTOEP_EXPERIMENTS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "dotoep/analysis.hpp"
#include "dotoep/spectra.hpp"
#include "dotoep/symbols.hpp"

// Experiment drivers behind the CLI subcommands: conditioning tables,
// spectrum dumps for plotting, and the bound-check sweeps.

namespace dotoep {

struct ExperimentConfig {
  std::vector<int> n_list{64, 128, 256};
  Engine engine = Engine::kFftSampling;
  double tol = 1e-10;
  std::string output_dir = ".";
  enum class Format { kCsv, kJson } format = Format::kCsv;
  std::uint64_t seed = 42;
  int oversample = 16;
  bool full_sweep = false;  // extend n_list with the slow tail {512,1024,2048}
  int figure_n = 1024;

  void validate() const;  // throws ConfigError
  std::vector<int> effective_n_list() const;
};

// Key-value config file ("key = value", '#' comments); unknown keys rejected.
ExperimentConfig load_config_file(const std::string& path, ExperimentConfig base = {});

struct TableRow {
  SpectrumReport report;
  // per-column relative deviation from the reference row, NaN when the
  // reference has no such n
  double diff_lambda_min = 0.0;
  double diff_lambda_max = 0.0;
  double diff_mu2 = 0.0;
  bool within_reference = true;
};

struct TableResult {
  std::vector<TableRow> rows;
  bool all_within_reference = true;
  std::string output_path;
};

// Builds T_n(F^_n) per n and emits the conditioning table with reference
// diffs (rel 5e-3 gate for n <= 256).
TableResult run_table1(const ExperimentConfig& cfg, std::ostream& log);

// Same for the pencil T_n^{-1}(eta) T_n(F^_n).
TableResult run_table2(const ExperimentConfig& cfg, std::ostream& log);

struct FigureResult {
  std::vector<double> plain;    // ascending spectrum of T_n(F^_n)
  std::vector<double> precond;  // ascending pencil spectrum
  std::string plain_path;
  std::string precond_path;
  std::string script_path;
};

// (index, eigenvalue) series for both spectra at cfg.figure_n, plus a
// plain gnuplot stub.
FigureResult run_figure1(const ExperimentConfig& cfg, std::ostream& log);

struct ChecksResult {
  std::vector<BoundReport> reports;
  int hard_failures = 0;        // failed bound reports (heuristics excluded)
  std::vector<std::string> diagnostics;
};

// Lemma grid, randomized sandwich suites, minimum-eigenvalue bound sweep,
// and the loose heuristic diagnostics.
ChecksResult run_checks(const ExperimentConfig& cfg, std::ostream& log);

// CoeffVector dump used by the `coeffs` subcommand: the power symbol when
// 0 <= alpha <= 1 is given, the canonical aggregate otherwise.
CoeffVector run_coeffs(const ExperimentConfig& cfg, int n, double alpha_or_negative);

}  // namespace dotoep

#endif  // DOTOEP_EXPERIMENTS_HPP
