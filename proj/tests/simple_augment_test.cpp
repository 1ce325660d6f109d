#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "kmcds/connectivity.hpp"
#include "kmcds/errors.hpp"
#include "kmcds/exact_oracle.hpp"
#include "kmcds/simple_augment.hpp"
#include "kmcds/validate.hpp"
#include "support.hpp"

using namespace kmcds;
using namespace kmcds::test;

TEST_CASE("iteration budget") {
  CHECK(iteration_bound(2, 3) == 6);
  CHECK(iteration_bound(3, 10) == 51);
  CHECK(iteration_bound(2, 1) == 0);
}

TEST_CASE("C4 needs the fourth node") {
  Graph c = c4();
  AugmentResult r = augment_simple(c, set_of(4, "abc"), 2, 2);
  CHECK(r.s == set_of(4, "d"));
  CHECK(r.trace.iterations == 1);
  REQUIRE(r.trace.chosen_cuts.size() == 1);
  CHECK(r.trace.chosen_cuts[0].x == set_of(4, "a"));
  CHECK(r.trace.added_paths[0] == std::vector<NodeId>{0, 3, 2});
  std::ostringstream os;
  write_trace(os, r.trace);
  CHECK(os.str() == "iter 1 cut {0} path 0 3 2\n");
}

TEST_CASE("nothing to do when T is already k-connected") {
  Graph k5 = shapes::complete(5);
  AugmentResult r = augment_simple(k5, NodeSet(5, {0, 1, 2}), 3, 3);
  CHECK(r.s.empty());
  CHECK(r.trace.iterations == 0);
}

TEST_CASE("preconditions are told apart") {
  Graph c = c4();
  // the graph is not 3-connected
  CHECK_THROWS_WITH_AS(augment_simple(c, set_of(4, "abc"), 3, 3), doctest::Contains("graph"), PreconditionViolation);
  // T is not 2-dominating
  CHECK_THROWS_WITH_AS(augment_simple(c, set_of(4, "ab"), 2, 2), doctest::Contains("dominating"),
                       PreconditionViolation);
  // T is not connected
  CHECK_THROWS_WITH_AS(augment_simple(c, set_of(4, "ac"), 2, 2), doctest::Contains("connected"),
                       PreconditionViolation);
  CHECK_THROWS_AS(augment_simple(c, set_of(4, "abc"), 3, 2), PreconditionViolation);
}

TEST_CASE("unweighted driver on small shapes") {
  Graph k5 = shapes::complete(5);
  NodeSet s = solve_unweighted_kmcds(k5, 3, 3);
  CHECK(s.size() == 3);
  CHECK(exact_min_kmcds(k5, 3, 3).optimum == 3);
  Graph p = shapes::path(6);
  CHECK(solve_unweighted_kmcds(p, 1, 1) == NodeSet(6, {1, 2, 3, 4}));
  CHECK_THROWS_AS(solve_unweighted_kmcds(p, 2, 2), InfeasibleInstance);
  Graph c = c4();
  CHECK(solve_unweighted_kmcds(c, 2, 2) == c.all());
}

TEST_CASE("exhaustively checked augmentations on small graphs") {
  int checked = 0, nontrivial = 0;
  for (std::uint64_t seed = 1; checked < 200 && seed < 5000; ++seed) {
    std::size_t n = 7 + seed % 6;
    std::size_t k = 2 + seed % 3;
    std::size_t m = k + seed % 2;
    auto c = random_case(seed, n, k, m, 30 + static_cast<std::int64_t>(seed % 3) * 5);
    if (!c) continue;
    ++checked;
    AugmentResult r = augment_simple(c->g, c->t, k, m);
    CHECK_FALSE(r.s.intersects(c->t));
    CHECK(brute_k_connected(c->g, c->t | r.s, k));
    CHECK(is_m_dominating(c->g, c->t | r.s, m));
    CHECK(r.trace.iterations == r.trace.chosen_cuts.size());
    CHECK(r.trace.iterations == r.trace.added_paths.size());
    CHECK(r.trace.iterations <= iteration_bound(k, c->t.size()));
    CHECK(r.s.size() <= 2 * r.trace.iterations);
    for (const auto& p : r.trace.added_paths) CHECK(p.size() <= 4);
    CHECK_NOTHROW(check_trace(c->g, c->t, k, r.trace));
    nontrivial += r.trace.iterations > 0;
  }
  CHECK(checked == 200);
  CHECK(nontrivial > 80);
}

TEST_CASE("100-node unit disk instances with k = m = 3") {
  int runs = 0;
  for (std::uint64_t seed = 1; runs < 50 && seed < 200; ++seed) {
    Graph g = build_unit_disk(random_instance(100, units(60), units(60), units(20), seed));
    if (!is_k_connected(g, g.all(), 3)) continue;
    ++runs;
    NodeSet t = solve_unweighted_kmcds(g, 2, 3);
    AugmentResult r = augment_simple(g, t, 3, 3);
    CHECK(validate_kmcds(g, t | r.s, 3, 3).ok());
    CHECK(r.trace.iterations <= 3 * (2 * t.size() - 3));
  }
  CHECK(runs == 50);
}

TEST_CASE("the unweighted pipeline keeps its stages consistent") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Graph g = build_unit_disk(random_instance(150, units(70), units(70), units(20), seed));
    for (std::size_t k = 1; k <= 3; ++k) {
      if (!is_k_connected(g, g.all(), k)) continue;
      UnweightedRun run = run_unweighted_kmcds(g, k, k + 1);
      CHECK(run.t_post.is_subset_of(run.t_pre));
      CHECK(run.t_post.is_subset_of(run.solution));
      CHECK(run.iterations == run.trace.iterations);
      CHECK(run.solution.size() <= run.t_post.size() + 2 * run.iterations);
      CHECK(validate_kmcds(g, run.solution, k, k + 1).ok());
      UnweightedRun raw = run_unweighted_kmcds(g, k, k + 1, false);
      CHECK(raw.t_post == raw.t_pre);
      CHECK(validate_kmcds(g, raw.solution, k, k + 1).ok());
    }
  }
}
