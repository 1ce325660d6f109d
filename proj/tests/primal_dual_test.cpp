#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "kmcds/connectivity.hpp"
#include "kmcds/errors.hpp"
#include "kmcds/exact_oracle.hpp"
#include "kmcds/primal_dual.hpp"
#include "kmcds/validate.hpp"
#include "support.hpp"

using namespace kmcds;
using namespace kmcds::test;

namespace {

std::vector<NodeSet> sets_of(const std::vector<CutCertificate>& certs) {
  std::vector<NodeSet> out;
  for (const auto& c : certs) out.push_back(c.x);
  return out;
}

std::vector<NodeSet> minimal_members(const std::vector<NodeSet>& fam) {
  std::vector<NodeSet> out;
  for (const NodeSet& x : fam) {
    bool minimal = true;
    for (const NodeSet& y : fam) {
      if (y != x && y.is_subset_of(x)) minimal = false;
    }
    if (minimal) out.push_back(x);
  }
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

bool strongly_disjoint(const Graph& g, const NodeSet& a, const NodeSet& b) {
  return !a.intersects(closure(g, b)) && !b.intersects(closure(g, a));
}

std::vector<Weight> random_weights(std::size_t n, std::mt19937_64& rng) {
  std::vector<Weight> w;
  for (std::size_t i = 0; i < n; ++i) w.emplace_back(static_cast<long>(1 + rng() % 9));
  return w;
}

}  // namespace

TEST_CASE("C4 plus e: the cheap node is bought at alpha 1") {
  Graph g = c4e();
  NodeSet t = set_of(5, "abc");
  std::vector<Weight> w{1, 1, 1, 1, 5};
  ResidualDemandFamily fam(g, t, 2, 0, g.empty_set());
  CHECK(fam.min_cores(g.empty_set()) == std::vector<NodeSet>{set_of(5, "c")});
  CoverResult r = cover_uncrossable(g, t, w, fam);
  CHECK(r.chosen == set_of(5, "d"));
  REQUIRE(r.dual.events.size() == 1);
  CHECK(r.dual.events[0].alpha == 1);
  CHECK(r.dual.events[0].bought == 3);
  CHECK(r.dual.total() == 1);
  CHECK(r.dual.residual[4] == 4);
  CHECK(r.max_degree == 1);

  PrimalDualRun run = augment_primal_dual(g, t, 2, w);
  CHECK(run.s == set_of(5, "d"));
  CHECK(exact_augmentation(g, t, 2, w).optimum == 1);

  // with d expensive, e is bought instead
  std::vector<Weight> w2{1, 1, 1, 7, 2};
  CHECK(augment_primal_dual(g, t, 2, w2).s == set_of(5, "e"));
}

TEST_CASE("an empty family buys nothing") {
  Graph g = c4e();
  NodeSet t = set_of(5, "abc");
  ResidualDemandFamily fam(g, t, 2, 0, set_of(5, "d"));
  CHECK(fam.covered(g.empty_set()));
  CoverResult r = cover_uncrossable(g, t, std::vector<Weight>(5, 1), fam);
  CHECK(r.chosen.empty());
  CHECK(r.dual.y.empty());
  CHECK(r.dual.total() == 0);

  Graph k5 = shapes::complete(5);
  PrimalDualRun run = augment_primal_dual(k5, NodeSet(5, {0, 1, 2}), 3, std::vector<Weight>(5, 1));
  CHECK(run.s.empty());
  CHECK(run.calls.empty());
}

TEST_CASE("event and dual logs") {
  Graph g = c4e();
  std::ostringstream ev, du;
  PrimalDualOptions opt;
  opt.events = &ev;
  opt.duals = &du;
  augment_primal_dual(g, set_of(5, "abc"), 2, {1, 1, 1, 1, 5}, opt);
  CHECK(ev.str() == "event 0 alpha 1 mincores 1 buy 3\n");
  CHECK(du.str() == "dual {2} 1\n");
}

TEST_CASE("preconditions") {
  Graph g = c4e();
  std::vector<Weight> w(5, 1);
  CHECK_THROWS_AS(augment_primal_dual(g, set_of(5, "abc"), 0, w), PreconditionViolation);
  CHECK_THROWS_AS(augment_primal_dual(g, set_of(5, "abc"), 2, {1, 1}), PreconditionViolation);
  CHECK_THROWS_WITH_AS(augment_primal_dual(g, set_of(5, "abc"), 3, w), doctest::Contains("graph"),
                       PreconditionViolation);
  CHECK_THROWS_AS(augment_primal_dual(g, set_of(5, "ab"), 2, w), PreconditionViolation);
}

TEST_CASE("weighted driver on K5") {
  Graph k5 = shapes::complete(5);
  NodeSet s = solve_weighted_kmcds(k5, 3, 3, std::vector<Weight>(5, 1));
  CHECK(s.size() == 3);
  CHECK(validate_kmcds(k5, s, 3, 3).ok());
  std::vector<Weight> w{9, 1, 9, 1, 1};
  CHECK(solve_weighted_kmcds(k5, 3, 3, w) == NodeSet(5, {1, 3, 4}));
}

TEST_CASE("max core on C4 plus e") {
  Graph g = c4e();
  NodeSet t = set_of(5, "abc");
  CutCertificate c = max_core(g, t, g.empty_set(), 2, 0, set_of(5, "c"), {set_of(5, "c")});
  CHECK(c.x == set_of(5, "c"));
  CHECK(c.boundary_in_t == set_of(5, "b"));
}

TEST_CASE("decomposition into independent families") {
  // three min-cores along a path: the middle one depends on both ends
  Graph p = shapes::path(3);
  NodeSet t = p.all();
  std::vector<NodeSet> cores{NodeSet(3, {0}), NodeSet(3, {1}), NodeSet(3, {2})};
  CHECK(dependent(p, t, cores[0], cores[0], cores[1], cores[1]));
  CHECK_FALSE(dependent(p, t, cores[0], cores[0], cores[2], cores[2]));
  auto fams = decompose_independent(p, t, cores, cores, 3, 1);
  CHECK(fams.size() == 2);

  Graph loose = Graph::from_edges(3, {});
  CHECK(decompose_independent(loose, loose.all(), cores, cores, 3, 1).size() == 1);
}

TEST_CASE("min-cores, max-cores and the core ring on small instances") {
  std::size_t checked = 0, with_several = 0;
  std::mt19937_64 rng(17);
  for (std::uint64_t seed = 1; checked < 150 && seed < 4000; ++seed) {
    std::size_t n = 7 + seed % 6;
    std::size_t k = 2 + seed % 2;
    auto c = random_case(seed, n, k, k, 30 + static_cast<std::int64_t>(seed % 3) * 5);
    if (!c) continue;
    NodeSet s = random_subset(n, rng, 0.15) - c->t;
    ++checked;
    for (NodeId r : c->t) {
      std::vector<NodeSet> fam = sets_of(enumerate_demand_cuts(c->g, c->t, s, k, r));
      std::vector<NodeSet> mins = minimal_members(fam);
      ResidualDemandFamily res(c->g, c->t, k, r, s);
      std::vector<NodeSet> got = res.min_cores(c->g.empty_set());
      std::sort(got.begin(), got.end(), LexLess{});
      CHECK(got == mins);
      with_several += mins.size() >= 2;

      for (std::size_t i = 0; i < mins.size(); ++i) {
        std::vector<NodeSet> ring = cores_of(fam, mins[i]);
        NodeSet join = c->g.empty_set();
        for (const NodeSet& x : ring) join |= x;
        CHECK(max_core(c->g, c->t, s, k, r, mins[i], mins).x == join);
        // the cores of one min-core form a ring family
        for (const NodeSet& x : ring) {
          for (const NodeSet& y : ring) {
            CHECK(std::find(ring.begin(), ring.end(), x & y) != ring.end());
            CHECK(std::find(ring.begin(), ring.end(), x | y) != ring.end());
          }
        }
        // cores of different min-cores meet T in disjoint sets
        for (std::size_t j = i + 1; j < mins.size(); ++j) {
          for (const NodeSet& x : ring) {
            for (const NodeSet& y : cores_of(fam, mins[j])) CHECK_FALSE((x & y).intersects(c->t));
          }
        }
      }
    }
  }
  CHECK(checked == 150);
  CHECK(with_several > 20);
}

TEST_CASE("cover calls on explicit residual families") {
  std::size_t checked = 0, bought = 0;
  std::mt19937_64 rng(23);
  for (std::uint64_t seed = 1; checked < 60 && seed < 20000; ++seed) {
    std::size_t n = 7 + seed % 6;
    std::size_t k = 2 + seed % 2;
    auto c = random_case(seed, n, k, k, 30 + static_cast<std::int64_t>(seed % 3) * 5);
    if (!c) continue;
    for (NodeId r : c->t) {
      std::vector<NodeSet> fam = sets_of(enumerate_demand_cuts(c->g, c->t, c->g.empty_set(), k, r));
      std::vector<NodeSet> mins = minimal_members(fam);
      std::size_t gam = n;
      for (const NodeSet& z : mins) gam = std::min(gam, z.intersection_size(c->t));
      if (mins.empty() || gam < k) continue;  // uncrossable only once every min-core holds k nodes of T
      ++checked;
      CHECK(check_uncrossable(c->g, c->t, fam).failures == 0);
      for (std::size_t i = 0; i < mins.size(); ++i) {
        for (std::size_t j = i + 1; j < mins.size(); ++j) CHECK(strongly_disjoint(c->g, mins[i], mins[j]));
      }
      std::vector<Weight> w = random_weights(n, rng);
      ResidualDemandFamily live(c->g, c->t, k, r, c->g.empty_set());
      CoverOptions opt;
      opt.verify_witnesses = true;
      CoverResult cr = cover_uncrossable(c->g, c->t, w, live, opt);
      bought += !cr.chosen.empty();
      CHECK_FALSE(cr.chosen.intersects(c->t));
      for (const NodeSet& x : fam) CHECK(gamma(c->g, x).intersects(cr.chosen));
      // reverse delete leaves nothing redundant
      for (NodeId v : cr.chosen) {
        NodeSet less = cr.chosen;
        less.erase(v);
        CHECK_FALSE(live.covered(less));
      }
      Weight dual = cr.dual.total();
      CHECK(dual <= exact_family_cover(c->g, c->t, fam, w).optimum);
      CHECK(total_weight(w, cr.chosen) <= 15 * dual);
      CHECK(cr.max_degree <= 5);
      CHECK(cr.worst_degree_sum <= 1.0);
      for (const CoverEvent& ev : cr.dual.events) CHECK(ev.alpha >= 0);
    }
  }
  CHECK(checked >= 60);
  CHECK(bought == checked);
}

TEST_CASE("uncrossing survives buying nodes") {
  std::size_t families = 0;
  std::mt19937_64 rng(29);
  for (std::uint64_t seed = 1; families < 100 && seed < 4000; ++seed) {
    std::size_t n = 7 + seed % 6;
    std::size_t k = 2 + seed % 2;
    auto c = random_case(seed, n, k, k, 30 + static_cast<std::int64_t>(seed % 3) * 5);
    if (!c) continue;
    std::vector<NodeSet> fam = sets_of(enumerate_demand_cuts(c->g, c->t, c->g.empty_set(), k, c->t.first()));
    if (fam.empty() || check_uncrossable(c->g, c->t, fam).failures != 0) continue;
    ++families;
    NodeSet s = random_subset(n, rng, 0.2) - c->t;
    std::vector<NodeSet> rest;
    for (const NodeSet& x : fam) {
      if (!gamma(c->g, x).intersects(s)) rest.push_back(x);
    }
    CHECK(check_uncrossable(c->g, c->t, rest).failures == 0);
    std::vector<NodeSet> mins = minimal_members(rest);
    for (std::size_t i = 0; i < mins.size(); ++i) {
      for (std::size_t j = i + 1; j < mins.size(); ++j) CHECK(strongly_disjoint(c->g, mins[i], mins[j]));
    }
  }
  CHECK(families == 100);
}

TEST_CASE("augmentation against the exact optimum") {
  std::size_t checked = 0;
  std::mt19937_64 rng(31);
  std::size_t nontrivial = 0;
  double worst = 0;
  for (std::uint64_t seed = 1; checked < 150 && seed < 5000; ++seed) {
    std::size_t n = 7 + seed % 6;
    std::size_t k = 2 + seed % 2;
    auto c = random_case(seed, n, k, k + seed % 2, 30 + static_cast<std::int64_t>(seed % 3) * 5);
    if (!c) continue;
    ++checked;
    std::vector<Weight> w = random_weights(n, rng);
    PrimalDualOptions opt;
    opt.cover.verify_witnesses = true;
    PrimalDualRun run = augment_primal_dual(c->g, c->t, k, w, opt);
    CHECK_FALSE(run.s.intersects(c->t));
    CHECK(brute_k_connected(c->g, c->t | run.s, k));
    Weight opt_w = exact_augmentation(c->g, c->t, k, w).optimum;
    Weight got = total_weight(w, run.s);
    CHECK(got <= 15 * static_cast<long>(std::max<std::size_t>(run.calls.size(), 1)) * opt_w);
    nontrivial += opt_w > 0;
    if (opt_w > 0) worst = std::max(worst, Weight(got / opt_w).get_d());
    else CHECK(got == 0);
    // gamma at least doubles per root
    for (std::size_t i = 1; i < run.calls.size(); ++i) {
      const CoverCall& a = run.calls[i - 1];
      const CoverCall& b = run.calls[i];
      if (a.root == b.root && a.gamma > 0 && b.gamma > 0 && b.gamma != a.gamma) CHECK(b.gamma >= 2 * a.gamma);
    }
    for (const CoverCall& call : run.calls) {
      CHECK(call.weight <= 15 * call.dual_total);
      CHECK(call.max_degree <= 5);
    }
  }
  CHECK(checked == 150);
  CHECK(nontrivial > 60);
  MESSAGE("worst weight ratio against the exact augmentation: " << worst);
}

TEST_CASE("weighted pipeline on unit disk instances") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    UnitDiskInstance inst = random_instance(120, units(70), units(70), units(20), seed,
                                            WeightMode::uniform(units(1), units(10)));
    Graph g = build_unit_disk(inst);
    for (std::size_t k = 1; k <= 3; ++k) {
      if (!is_k_connected(g, g.all(), k)) continue;
      WeightedRun run = run_weighted_kmcds(g, k, k + 1, inst.weights);
      CHECK(run.t_post.is_subset_of(run.solution));
      CHECK(validate_kmcds(g, run.solution, k, k + 1).ok());
    }
  }
}

TEST_CASE("non unit disk graphs skip the geometric checks") {
  Graph w6 = shapes::wheel(6);
  PrimalDualRun run = augment_primal_dual(w6, NodeSet(7, {0, 1, 3, 5}), 2, std::vector<Weight>(7, 1));
  CHECK(is_k_connected(w6, NodeSet(7, {0, 1, 3, 5}) | run.s, 2));
}
