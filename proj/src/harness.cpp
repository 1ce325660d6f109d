#include "kmcds/harness.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <ostream>
#include <sstream>
#include <tuple>

#include "kmcds/block_cut_tree.hpp"
#include "kmcds/dominating.hpp"
#include "kmcds/errors.hpp"
#include "kmcds/exact_oracle.hpp"
#include "kmcds/primal_dual.hpp"
#include "kmcds/simple_augment.hpp"
#include "kmcds/validate.hpp"

namespace kmcds {

Region Region::parse(const std::string& text) {
  if (text == "square") return {"square", Micro{100 * Micro::kScale}, Micro{100 * Micro::kScale}};
  if (text == "rect") return {"rect", Micro{50 * Micro::kScale}, Micro{200 * Micro::kScale}};
  auto x = text.find('x');
  if (x == std::string::npos) throw PreconditionViolation("region must be square, rect or WxH: " + text);
  Region r{text, Micro::parse(text.substr(0, x)), Micro::parse(text.substr(x + 1))};
  if (r.width.units <= 0 || r.height.units <= 0) throw PreconditionViolation("region sides must be positive");
  return r;
}

Algorithm parse_algorithm(const std::string& text) {
  if (text == "simple") return Algorithm::Simple;
  if (text == "pd" || text == "primal-dual") return Algorithm::PrimalDual;
  if (text == "both") return Algorithm::Both;
  throw PreconditionViolation("algorithm must be simple, pd or both: " + text);
}

std::string algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::Simple:
      return "simple";
    case Algorithm::PrimalDual:
      return "pd";
    default:
      return "both";
  }
}

std::string csv_header() { return "seed,n,k,m,region,alg,t_pre,t_post,size,weight,iters,ms,valid"; }

std::string csv_line(const ResultRow& r) {
  std::ostringstream os;
  os << r.seed << ',' << r.n << ',' << r.k << ',' << r.m << ',' << r.region << ',' << r.alg << ','
     << r.t_pre << ',' << r.t_post << ',' << r.size << ',' << format_weight(r.weight) << ',' << r.iters << ','
     << r.ms << ',' << (r.valid ? "true" : "false");
  return os.str();
}

SolveOutput solve_instance(const UnitDiskInstance& inst, const Graph& g, std::size_t k, std::size_t m,
                           Algorithm alg, const std::string& region, const SolveSinks& sinks, bool timing) {
  if (alg == Algorithm::Both) throw PreconditionViolation("solve one algorithm at a time");
  auto start = std::chrono::steady_clock::now();
  SolveOutput out;
  ResultRow& row = out.row;
  row.seed = inst.seed.value_or(0);
  row.n = inst.size();
  row.k = k;
  row.m = m;
  row.region = region;
  row.alg = algorithm_name(alg);
  if (alg == Algorithm::Simple) {
    UnweightedRun r = run_unweighted_kmcds(g, k, m);
    if (sinks.trace != nullptr) write_trace(*sinks.trace, r.trace);
    row.t_pre = r.t_pre.size();
    row.t_post = r.t_post.size();
    row.iters = r.iterations;
    out.solution = r.solution;
  } else {
    PrimalDualOptions opt;
    opt.events = sinks.trace;
    opt.duals = sinks.duals;
    WeightedRun r = run_weighted_kmcds(g, k, m, inst.weights, opt);
    row.t_pre = r.t0.size();
    row.t_post = r.t_post.size();
    row.iters = r.events;
    out.solution = r.solution;
  }
  row.size = out.solution.size();
  row.weight = total_weight(inst.weights, out.solution);
  Validity v = validate_kmcds(g, out.solution, k, m);
  if (!v.ok()) {
    throw InvariantViolation(std::string("solution failed independent validation (") +
                             (v.connected ? "" : "connectivity ") + (v.dominating ? "" : "domination") + ")");
  }
  row.valid = true;
  if (timing) {
    row.ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  }
  return out;
}

void ExperimentConfig::validate() const {
  if (radius.units <= 0) throw PreconditionViolation("radius must be positive");
  for (const auto& [k, m] : km) {
    if (k == 0 || m < k) throw PreconditionViolation("every grid point needs 1 <= k <= m");
  }
  for (const Region& r : regions) {
    if (r.width.units <= 0 || r.height.units <= 0) throw PreconditionViolation("region sides must be positive");
  }
}

ExperimentResult run_experiment(const ExperimentConfig& cfg, std::ostream* csv) {
  cfg.validate();
  ExperimentResult res;
  if (csv != nullptr) *csv << csv_header() << '\n';
  std::vector<Algorithm> algs;
  if (cfg.alg == Algorithm::Both) {
    algs = {Algorithm::Simple, Algorithm::PrimalDual};
  } else {
    algs = {cfg.alg};
  }
  using Key = std::tuple<std::string, std::size_t, std::size_t, std::size_t, std::string>;
  std::map<Key, std::vector<std::size_t>> sizes;
  std::vector<Key> key_order;
  for (const Region& region : cfg.regions) {
    for (const auto& [k, m] : cfg.km) {
      for (std::size_t n : cfg.ns) {
        for (Algorithm a : algs) {
          Key key{region.name, k, m, n, algorithm_name(a)};
          if (sizes.emplace(key, std::vector<std::size_t>{}).second) key_order.push_back(key);
        }
        for (std::uint64_t seed : cfg.seeds) {
          UnitDiskInstance inst = random_instance(n, region.width, region.height, cfg.radius, seed, cfg.weights);
          Graph g = build_unit_disk(inst);
          for (Algorithm a : algs) {
            ResultRow row;
            try {
              row = solve_instance(inst, g, k, m, a, region.name, {}, cfg.timing).row;
              sizes[Key{region.name, k, m, n, algorithm_name(a)}].push_back(row.size);
            } catch (const Error& e) {
              row = ResultRow{};
              row.seed = seed;
              row.n = n;
              row.k = k;
              row.m = m;
              row.region = region.name;
              row.alg = algorithm_name(a);
              row.valid = false;
              row.error = e.what();
              res.all_valid = false;
            }
            if (csv != nullptr) *csv << csv_line(row) << '\n' << std::flush;
            res.rows.push_back(std::move(row));
          }
        }
      }
    }
  }
  for (const Key& key : key_order) {
    const auto& v = sizes[key];
    GridSummary s;
    std::tie(s.region, s.k, s.m, s.n, s.alg) = key;
    s.runs = v.size();
    if (!v.empty()) {
      s.min = *std::min_element(v.begin(), v.end());
      s.max = *std::max_element(v.begin(), v.end());
      double total = 0;
      for (std::size_t x : v) total += static_cast<double>(x);
      s.mean = total / static_cast<double>(v.size());
    }
    res.summary.push_back(s);
  }
  return res;
}

void write_summary(std::ostream& os, const std::vector<GridSummary>& summary) {
  for (const GridSummary& s : summary) {
    os << "summary region=" << s.region << " n=" << s.n << " k=" << s.k << " m=" << s.m << " alg=" << s.alg
       << " runs=" << s.runs << " min=" << s.min << " max=" << s.max << " mean=" << s.mean << '\n';
  }
}

double bound_factor(std::size_t x) {
  if (x < 2) throw PreconditionViolation("the factor is stated for x >= 2");
  const double v = static_cast<double>(x);
  return x <= 5 ? 5.0 + 35.0 / v : 13.0 - 5.0 / v;
}

Diagnosis diagnose_2cds(const Graph& g, std::size_t m, const std::optional<NodeSet>& t, bool oracle) {
  if (m < 2) throw PreconditionViolation("diagnosis needs m >= 2");
  NodeSet tt;
  if (t) {
    tt = *t;
  } else {
    LayeredMis lm = layered_mis(g, m);
    lm.connector = connector(g, lm.layers.front());
    tt = lm.nodes();
  }
  Diagnosis d;
  d.t_size = tt.size();
  BlockCutTree bct = block_cut_tree(g, tt);
  d.blocks = bct.blocks.size();
  d.cut_nodes = bct.cut_nodes.size();
  AugmentResult aug = augment_simple(g, tt, 2, m);
  d.iterations = aug.trace.iterations;
  d.size = (tt | aug.s).size();
  d.within_blocks = d.iterations <= d.blocks;
  d.factor_k2 = bound_factor(2);
  d.factor_m = bound_factor(m);
  if (oracle) {
    OracleResult opt = exact_min_kmcds(g, 2, m);
    d.opt = opt.optimum;
    d.bound = 3.0 * std::max(5.0 / static_cast<double>(m), 1.0) * opt.optimum.get_d() - 1.0;
    d.within_bound = static_cast<double>(d.iterations) <= *d.bound + 1e-9;
    d.ratio = static_cast<double>(d.size) / opt.optimum.get_d();
  }
  return d;
}

void write_diagnosis(std::ostream& os, const Diagnosis& d) {
  os << "t_size " << d.t_size << '\n'
     << "blocks " << d.blocks << '\n'
     << "cut_nodes " << d.cut_nodes << '\n'
     << "iterations " << d.iterations << '\n'
     << "iterations_within_blocks " << (d.within_blocks ? "true" : "false") << '\n'
     << "size " << d.size << '\n'
     << "factor_k2 " << d.factor_k2 << '\n'
     << "factor_m " << d.factor_m << '\n';
  if (d.opt) {
    os << "opt " << format_weight(*d.opt) << '\n'
       << "bound " << *d.bound << '\n'
       << "iterations_within_bound " << (d.within_bound ? "true" : "false") << '\n'
       << "ratio " << *d.ratio << '\n';
  }
}

}  // namespace kmcds
