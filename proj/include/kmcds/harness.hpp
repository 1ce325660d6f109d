#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "kmcds/instance.hpp"

namespace kmcds {

struct Region {
  std::string name;
  Micro width;
  Micro height;

  /// "square" (100x100), "rect" (50x200) or "<w>x<h>".
  static Region parse(const std::string& text);
};

enum class Algorithm { Simple, PrimalDual, Both };
Algorithm parse_algorithm(const std::string& text);
std::string algorithm_name(Algorithm a);

struct ResultRow {
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t m = 0;
  std::string region;
  std::string alg;
  std::size_t t_pre = 0;
  std::size_t t_post = 0;
  std::size_t size = 0;
  Weight weight;
  std::size_t iters = 0;
  long long ms = 0;
  bool valid = false;
  std::string error;  // empty on success
};

std::string csv_header();
std::string csv_line(const ResultRow& row);

struct SolveSinks {
  std::ostream* trace = nullptr;  // simple: `iter ...`; primal-dual: `event ...`
  std::ostream* duals = nullptr;
};

struct SolveOutput {
  ResultRow row;
  NodeSet solution;
};

/// Runs one solver and re-validates the result with the independent checkers. Throws
/// InfeasibleInstance, PreconditionViolation, InvariantViolation and Stall unchanged.
SolveOutput solve_instance(const UnitDiskInstance& inst, const Graph& g, std::size_t k, std::size_t m,
                           Algorithm alg, const std::string& region, const SolveSinks& sinks = {},
                           bool timing = true);

struct ExperimentConfig {
  std::vector<std::size_t> ns;
  /// (k, m) grid points; m >= k.
  std::vector<std::pair<std::size_t, std::size_t>> km;
  std::vector<Region> regions;
  Micro radius{20 * Micro::kScale};
  std::vector<std::uint64_t> seeds;
  Algorithm alg = Algorithm::Both;
  WeightMode weights;
  bool timing = true;

  void validate() const;
};

struct GridSummary {
  std::size_t n = 0, k = 0, m = 0;
  std::string region;
  std::string alg;
  std::size_t runs = 0;
  std::size_t min = 0, max = 0;
  double mean = 0.0;
};

struct ExperimentResult {
  std::vector<ResultRow> rows;
  std::vector<GridSummary> summary;
  bool all_valid = true;
};

/// One row per grid point, seed and algorithm. Rows go to `csv` as they are produced.
ExperimentResult run_experiment(const ExperimentConfig& cfg, std::ostream* csv = nullptr);
void write_summary(std::ostream& os, const std::vector<GridSummary>& summary);

struct Diagnosis {
  std::size_t t_size = 0;
  std::size_t blocks = 0;
  std::size_t cut_nodes = 0;
  std::size_t iterations = 0;
  std::size_t size = 0;  // |T u S| after the augmentation
  bool within_blocks = false;
  // The size factor is written in a letter that reads as k (fixed at 2 here) or as m;
  // both readings are reported, neither is asserted.
  double factor_k2 = 0.0;
  double factor_m = 0.0;
  std::optional<double> ratio;    // size / OPT
  std::optional<Weight> opt;      // exact (2,m)-CDS size when computed
  std::optional<double> bound;    // 3 max{5/m,1} OPT - 1
  bool within_bound = true;
};

/// 5 + 35/x for 2 <= x <= 5, 13 - 5/x for x >= 6.
double bound_factor(std::size_t x);

/// Layered MIS plus connector (or the given T), then one round of connectivity augmentation
/// from 1 to 2. The oracle bound is evaluated when `oracle` is set.
Diagnosis diagnose_2cds(const Graph& g, std::size_t m, const std::optional<NodeSet>& t, bool oracle);
void write_diagnosis(std::ostream& os, const Diagnosis& d);

}  // namespace kmcds
