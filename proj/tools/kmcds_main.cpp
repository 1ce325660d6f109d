#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "kmcds/connectivity.hpp"
#include "kmcds/errors.hpp"
#include "kmcds/exact_oracle.hpp"
#include "kmcds/harness.hpp"
#include "kmcds/instance.hpp"

using namespace kmcds;

namespace {

enum Exit { kOk = 0, kUsage = 2, kIo = 3, kInfeasible = 4, kInvariant = 5 };

struct UsageError : Error {
  using Error::Error;
};

// Bad option values are usage errors, whatever the parser threw.
template <class F>
auto option(const std::string& flag, F&& parse) {
  try {
    return parse();
  } catch (const UsageError&) {
    throw;
  } catch (const Error& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

// "a,b,c" or "lo:hi[:step]" (inclusive)
std::vector<std::uint64_t> parse_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  if (text.empty()) return out;
  auto number = [&](const std::string& s) -> std::uint64_t {
    std::size_t used = 0;
    std::uint64_t v = 0;
    try {
      v = std::stoull(s, &used);
    } catch (const std::exception&) {
      throw UsageError("not a number: " + s);
    }
    if (used != s.size()) throw UsageError("not a number: " + s);
    return v;
  };
  if (text.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
    if (parts.size() < 2 || parts.size() > 3) throw UsageError("range must be lo:hi or lo:hi:step: " + text);
    std::uint64_t lo = number(parts[0]), hi = number(parts[1]);
    std::uint64_t step = parts.size() == 3 ? number(parts[2]) : 1;
    if (step == 0) throw UsageError("range step must be positive");
    for (std::uint64_t v = lo; v <= hi; v += step) out.push_back(v);
    return out;
  }
  std::stringstream ss(text);
  for (std::string p; std::getline(ss, p, ',');) out.push_back(number(p));
  return out;
}

// "5:5,6:6"
std::vector<std::pair<std::size_t, std::size_t>> parse_km(const std::string& text) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::stringstream ss(text);
  for (std::string p; std::getline(ss, p, ',');) {
    auto c = p.find(':');
    if (c == std::string::npos) throw UsageError("grid point must be k:m: " + p);
    auto k = parse_list(p.substr(0, c)), m = parse_list(p.substr(c + 1));
    if (k.size() != 1 || m.size() != 1) throw UsageError("grid point must be k:m: " + p);
    out.emplace_back(k[0], m[0]);
  }
  return out;
}

std::unique_ptr<std::ofstream> open_out(const std::string& path) {
  if (path.empty()) return nullptr;
  auto f = std::make_unique<std::ofstream>(path);
  if (!*f) throw Error("cannot write " + path);
  return f;
}

UnitDiskInstance load(const std::string& path) {
  if (path.empty()) throw UsageError("--in is required");
  return read_instance_file(path);
}

std::string short_decimal(const Micro& v) {
  std::string s = v.str();
  if (s.find('.') == std::string::npos) return s;
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return s;
}

std::string region_name(const UnitDiskInstance& inst) {
  return short_decimal(inst.width) + "x" + short_decimal(inst.height);
}

struct Options {
  std::size_t n = 0;
  std::string region = "square";
  std::string radius = "20";
  std::uint64_t seed = 0;
  std::string seeds = "1:10";
  std::string ns = "600";
  std::string km;
  std::string regions = "square";
  std::size_t k = 1;
  std::size_t m = 1;
  std::size_t kmax = 6;
  std::string alg = "simple";
  std::string weights = "unit";
  std::string in;
  std::string out;
  std::string t;
  std::string trace;
  std::string dual;
  std::string csv;
  bool no_timing = false;
  bool oracle = false;
  std::size_t budget = 18;
};

int cmd_generate(const Options& o) {
  Region region = option("--region", [&] { return Region::parse(o.region); });
  Micro radius = option("--radius", [&] { return Micro::parse(o.radius); });
  if (radius.units <= 0) throw UsageError("radius must be positive");
  UnitDiskInstance inst = random_instance(o.n, region.width, region.height, radius, o.seed, option("--weights", [&] { return WeightMode::parse(o.weights); }));
  if (o.out.empty()) {
    write_instance(std::cout, inst);
  } else {
    write_instance_file(o.out, inst);
  }
  Graph g = build_unit_disk(inst);
  std::size_t conn = 0;
  while (conn < o.kmax && is_k_connected(g, g.all(), conn + 1)) ++conn;
  std::ostream& info = o.out.empty() ? std::cerr : std::cout;
  info << "nodes " << inst.size() << " edges " << g.edge_count() << " connectivity "
       << (conn == o.kmax ? ">=" : "") << conn << '\n';
  return kOk;
}

int cmd_solve(const Options& o) {
  UnitDiskInstance inst = load(o.in);
  Graph g = build_unit_disk(inst);
  Algorithm alg = option("--alg", [&] { return parse_algorithm(o.alg); });
  std::vector<Algorithm> algs = alg == Algorithm::Both ? std::vector<Algorithm>{Algorithm::Simple, Algorithm::PrimalDual}
                                                       : std::vector<Algorithm>{alg};
  auto trace = open_out(o.trace);
  auto dual = open_out(o.dual);
  bool header = false;
  for (Algorithm a : algs) {
    SolveOutput res = solve_instance(inst, g, o.k, o.m, a, region_name(inst), {trace.get(), dual.get()}, !o.no_timing);
    if (!std::exchange(header, true)) std::cout << csv_header() << '\n';
    std::cout << csv_line(res.row) << '\n';
    if (!o.out.empty()) {
      std::string path = algs.size() > 1 ? o.out + "." + algorithm_name(a) : o.out;
      auto f = open_out(path);
      write_node_set(*f, res.solution);
    }
  }
  return kOk;
}

int cmd_experiment(const Options& o) {
  ExperimentConfig cfg;
  for (std::uint64_t n : parse_list(o.ns)) cfg.ns.push_back(n);
  cfg.km = o.km.empty() ? std::vector<std::pair<std::size_t, std::size_t>>{{o.k, o.m}} : parse_km(o.km);
  std::stringstream ss(o.regions);
  for (std::string r; std::getline(ss, r, ',');) cfg.regions.push_back(option("--region", [&] { return Region::parse(r); }));
  cfg.radius = option("--radius", [&] { return Micro::parse(o.radius); });
  cfg.seeds = parse_list(o.seeds);
  cfg.alg = option("--alg", [&] { return parse_algorithm(o.alg); });
  cfg.weights = option("--weights", [&] { return WeightMode::parse(o.weights); });
  cfg.timing = !o.no_timing;
  auto csv = open_out(o.csv);
  ExperimentResult res = run_experiment(cfg, csv ? csv.get() : &std::cout);
  write_summary(csv ? std::cout : std::cerr, res.summary);
  for (const ResultRow& r : res.rows) {
    if (!r.error.empty()) std::cerr << "seed " << r.seed << " n " << r.n << " " << r.alg << ": " << r.error << '\n';
  }
  return res.all_valid ? kOk : kInvariant;
}

int cmd_diagnose(const Options& o) {
  UnitDiskInstance inst = load(o.in);
  Graph g = build_unit_disk(inst);
  std::optional<NodeSet> t;
  if (!o.t.empty()) {
    std::ifstream f(o.t);
    if (!f) throw Error("cannot read " + o.t);
    t = read_node_set(f, g.size());
  }
  Diagnosis d = diagnose_2cds(g, o.m, t, o.oracle);
  write_diagnosis(std::cout, d);
  if (!d.within_blocks || !d.within_bound) throw InvariantViolation("iteration bound exceeded");
  return kOk;
}

int cmd_oracle(const Options& o) {
  UnitDiskInstance inst = load(o.in);
  Graph g = build_unit_disk(inst);
  OracleResult r = exact_min_kmcds(g, o.k, o.m, inst.weights, o.budget);
  std::cout << "optimum " << format_weight(r.optimum) << '\n' << "explored " << r.explored << '\n';
  std::cout << "witness " << r.witness.to_string() << '\n';
  if (!o.out.empty()) write_node_set(*open_out(o.out), r.witness);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"(k,m)-connected dominating sets in unit disk graphs"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("generate", "write a random unit disk instance");
  gen->add_option("--n", o.n, "node count")->required();
  gen->add_option("--region", o.region, "square, rect or WxH");
  gen->add_option("--radius", o.radius, "connection radius");
  gen->add_option("--seed", o.seed, "generator seed");
  gen->add_option("--weights", o.weights, "unit or uniform:lo:hi");
  gen->add_option("--kmax", o.kmax, "report connectivity up to this value");
  gen->add_option("--out", o.out, "instance file (stdout when absent)");

  auto* solve = app.add_subcommand("solve", "compute a (k,m)-CDS");
  solve->add_option("--in", o.in, "instance file")->required();
  solve->add_option("--k", o.k)->required();
  solve->add_option("--m", o.m)->required();
  solve->add_option("--alg", o.alg, "simple, pd or both");
  solve->add_option("--out", o.out, "solution node-set file");
  solve->add_option("--trace", o.trace, "iteration or event log");
  solve->add_option("--dual", o.dual, "final dual values (pd only)");
  solve->add_flag("--no-timing", o.no_timing, "write 0 in the ms column");

  auto* exp = app.add_subcommand("experiment", "run a grid of random instances");
  exp->add_option("--n", o.ns, "node counts: list or lo:hi:step");
  exp->add_option("--k", o.k);
  exp->add_option("--m", o.m);
  exp->add_option("--km", o.km, "grid points k:m,k:m (overrides --k/--m)");
  exp->add_option("--region", o.regions, "comma separated regions");
  exp->add_option("--radius", o.radius);
  exp->add_option("--seeds", o.seeds, "list or lo:hi");
  exp->add_option("--alg", o.alg, "simple, pd or both");
  exp->add_option("--weights", o.weights, "unit or uniform:lo:hi");
  exp->add_option("--csv", o.csv, "CSV output (stdout when absent)");
  exp->add_flag("--no-timing", o.no_timing, "write 0 in the ms column");

  auto* diag = app.add_subcommand("diagnose-2cds", "iteration count of the 1 to 2 augmentation");
  diag->add_option("--in", o.in, "instance file")->required();
  diag->add_option("--m", o.m)->required();
  diag->add_option("--t", o.t, "node-set file for T (layered MIS when absent)");
  diag->add_flag("--oracle", o.oracle, "compare against the exact optimum");

  auto* orc = app.add_subcommand("oracle", "exact minimum (k,m)-CDS on small instances");
  orc->add_option("--in", o.in, "instance file")->required();
  orc->add_option("--k", o.k)->required();
  orc->add_option("--m", o.m)->required();
  orc->add_option("--budget", o.budget, "largest solution size searched");
  orc->add_option("--out", o.out, "witness node-set file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) return cmd_generate(o);
    if (*solve) return cmd_solve(o);
    if (*exp) return cmd_experiment(o);
    if (*diag) return cmd_diagnose(o);
    return cmd_oracle(o);
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionViolation& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (const InfeasibleInstance& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return kInfeasible;
  } catch (const BudgetExceeded& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return kInfeasible;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant: " << e.what() << '\n';
    return kInvariant;
  } catch (const Stall& e) {
    std::cerr << "stall: " << e.what() << '\n';
    return kInvariant;
  } catch (const NoPath& e) {
    std::cerr << "invariant: " << e.what() << '\n';
    return kInvariant;
  } catch (const InfiniteCut& e) {
    std::cerr << "invariant: " << e.what() << '\n';
    return kInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  }
}
