#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "bgreedy/diagnostics.hpp"
#include "bgreedy/greedy.hpp"

namespace bgreedy {

struct TargetDescriptor {
  enum class Kind { Fp, Expansion, Values } kind = Kind::Fp;
  double p = 1.0;
  bool normalized = true;  // include the 2^{2p} factor
  std::vector<double> centers;  // expansion targets, 1-d
  std::vector<double> coeffs;
  std::string values_file;  // tabulated: candidate values then eval values
};

struct ExperimentConfig {
  Kernel kernel;
  TargetDescriptor target;
  int candidates = 5001;
  int evals = 10001;
  GreedyConfig greedy;
  std::string out_dir = "out";
  unsigned seed = 0;
  int density_bins = 20;
};

/// Parses the flat [section] key = value config format. Throws
/// std::runtime_error with the offending line number on parse errors.
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig parse_config_file(const std::string& path);

std::string format_full(double v);  // 17 significant digits

/// Executes one greedy run and writes records.csv and reports.json into
/// the output directory. Returns the process exit status.
int cmd_run(const ExperimentConfig& config);

/// Emits fig2_bb.csv (+ _slopes.csv): measured f-greedy and closed-form
/// optimal error series for n <= 127.
int cmd_reproduce_bb(const std::string& out_dir, int candidates = 5001,
                     int evals = 10001, int max_points = 127);

/// Emits fig3_k1.csv or fig4_k2.csv (+ _density.csv, _slopes.csv) for the
/// requested kernel and exponent list.
int cmd_reproduce_fp(const std::string& kernel_name, const std::vector<double>& ps,
                     const std::string& out_dir, int candidates = 5001,
                     int evals = 10001, int max_points = 127, int density_bins = 20);

/// Runs the full verification suite and prints one pass/fail line per
/// check; returns nonzero if any check fails.
int cmd_verify(std::ostream& out);

}  // namespace bgreedy
