#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kmcds/connectivity.hpp"
#include "kmcds/errors.hpp"
#include "kmcds/exact_oracle.hpp"
#include "support.hpp"

using namespace kmcds;
using namespace kmcds::test;

namespace {

// Cheapest qualifying subset over all 2^n masks, checked with brute-force connectivity.
Weight brute_optimum(const Graph& g, std::size_t k, std::size_t m, const std::vector<Weight>& w) {
  const std::size_t n = g.size();
  Weight best = -1;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    NodeSet s = from_mask(n, mask);
    if (!is_m_dominating(g, s, m) || !brute_k_connected(g, s, k)) continue;
    Weight cost = total_weight(w, s);
    if (best < 0 || cost < best) best = cost;
  }
  return best;
}

std::vector<NodeSet> xs(const std::vector<CutCertificate>& certs) {
  std::vector<NodeSet> out;
  for (const auto& c : certs) out.push_back(c.x);
  return out;
}

}  // namespace

TEST_CASE("small optima") {
  CHECK(exact_min_kmcds(shapes::complete(5), 3, 3).optimum == 3);
  CHECK(exact_min_kmcds(c4(), 2, 2).optimum == 4);
  for (std::size_t n = 2; n <= 7; ++n) CHECK(exact_min_kmcds(shapes::complete(n), 1, 1).optimum == 1);
  OracleResult star = exact_min_kmcds(shapes::star(4), 1, 1);
  CHECK(star.optimum == 1);
  CHECK(star.witness == NodeSet(5, {0}));
  CHECK(exact_min_kmcds(shapes::star(4), 1, 2).optimum == 5);
  CHECK_THROWS_AS(exact_min_kmcds(shapes::path(6), 2, 2), InfeasibleInstance);
}

TEST_CASE("weighted optimum and tie order") {
  OracleResult r = exact_min_kmcds(c4(), 1, 1, {5, 1, 5, 1});
  CHECK(r.optimum == 6);
  CHECK(r.witness == set_of(4, "ab"));
}

TEST_CASE("budget") {
  CHECK_THROWS_AS(exact_min_kmcds(shapes::complete(20), 1, 1), BudgetExceeded);
  CHECK_THROWS_AS(exact_min_kmcds(shapes::complete(31), 1, 1, {}, 40), BudgetExceeded);
  CHECK(exact_min_kmcds(shapes::complete(20), 1, 1, {}, 20).optimum == 1);
}

TEST_CASE("agrees with plain enumeration") {
  std::mt19937_64 rng(3);
  std::size_t feasible = 0;
  for (int round = 0; round < 300; ++round) {
    std::size_t n = 3 + rng() % 7;
    Graph g = random_graph(n, 0.55, rng);
    std::size_t k = 1 + rng() % 3, m = 1 + rng() % 3;
    std::vector<Weight> unit(n, 1), w;
    for (std::size_t i = 0; i < n; ++i) w.emplace_back(static_cast<long>(1 + rng() % 6));
    Weight b = brute_optimum(g, k, m, unit);
    if (b < 0) {
      CHECK_THROWS_AS(exact_min_kmcds(g, k, m), InfeasibleInstance);
      continue;
    }
    ++feasible;
    OracleResult r = exact_min_kmcds(g, k, m);
    CHECK(r.optimum == b);
    CHECK(r.witness.size() == r.optimum);
    CHECK(brute_k_connected(g, r.witness, k));
    OracleResult rw = exact_min_kmcds(g, k, m, w);
    CHECK(rw.optimum == brute_optimum(g, k, m, w));
    CHECK(total_weight(w, rw.witness) == rw.optimum);
  }
  CHECK(feasible > 100);
}

TEST_CASE("optimum grows with k and m") {
  std::size_t compared = 0;
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    Graph g = build_unit_disk(small_udg(12, seed, 40));
    for (std::size_t k = 1; k <= 3; ++k) {
      if (!is_k_connected(g, g.all(), k + 1)) break;
      for (std::size_t m = 1; m <= 3; ++m) {
        Weight base = exact_min_kmcds(g, k, m).optimum;
        CHECK(base <= exact_min_kmcds(g, k + 1, m).optimum);
        CHECK(base <= exact_min_kmcds(g, k, m + 1).optimum);
        ++compared;
      }
    }
  }
  CHECK(compared > 100);
}

TEST_CASE("augmentation optimum") {
  OracleResult r = exact_augmentation(c4(), set_of(4, "abc"), 2, std::vector<Weight>(4, 1));
  CHECK(r.optimum == 1);
  CHECK(r.witness == set_of(4, "d"));
  OracleResult e = exact_augmentation(c4e(), set_of(5, "abc"), 2, {1, 1, 1, 7, 2});
  CHECK(e.optimum == 2);
  CHECK(e.witness == set_of(5, "e"));
  CHECK(exact_augmentation(shapes::complete(5), NodeSet(5, {0, 1, 2}), 3, std::vector<Weight>(5, 1)).optimum ==
        0);
}

TEST_CASE("demand cut enumeration on C4") {
  Graph c = c4();
  NodeSet t = set_of(4, "abc");
  CHECK(xs(enumerate_demand_cuts(c, t, c.empty_set(), 2, std::nullopt)) ==
        std::vector<NodeSet>{set_of(4, "a"), set_of(4, "c")});
  CHECK(enumerate_demand_cuts(c, t, set_of(4, "d"), 2, std::nullopt).empty());
  CHECK(xs(enumerate_demand_cuts(c, t, c.empty_set(), 2, NodeId{0})) == std::vector<NodeSet>{set_of(4, "c")});
  CHECK(enumerate_demand_cuts(c, t, set_of(4, "d"), 2, NodeId{0}).empty());
}

TEST_CASE("cores and the uncrossing check") {
  std::vector<NodeSet> fam{NodeSet(4, {0}), NodeSet(4, {0, 1}), NodeSet(4, {2}), NodeSet(4, {0, 1, 2})};
  CHECK(cores_of(fam, NodeSet(4, {0})) == std::vector<NodeSet>{NodeSet(4, {0}), NodeSet(4, {0, 1})});
  CHECK(cores_of(fam, NodeSet(4, {2})) == std::vector<NodeSet>{NodeSet(4, {2})});

  Graph p = shapes::path(5);
  UncrossReport apart = check_uncrossable(p, p.all(), {NodeSet(5, {0}), NodeSet(5, {4})});
  CHECK(apart.pairs == 1);
  CHECK(apart.by_difference == 1);
  UncrossReport chain = check_uncrossable(p, p.all(), {NodeSet(5, {0}), NodeSet(5, {0, 1})});
  CHECK(chain.by_meet_join == 1);
  UncrossReport bad = check_uncrossable(p, p.all(), {NodeSet(5, {0, 1}), NodeSet(5, {1, 2})});
  CHECK(bad.failures == 1);
  CHECK(bad.failures_sharing_t == 1);
}

TEST_CASE("family cover") {
  Graph g = c4e();
  OracleResult r = exact_family_cover(g, set_of(5, "abc"), {set_of(5, "c")}, {1, 1, 1, 7, 2});
  CHECK(r.optimum == 2);
  CHECK(r.witness == set_of(5, "e"));
  CHECK(exact_family_cover(g, set_of(5, "abc"), {}, {1, 1, 1, 7, 2}).optimum == 0);
}
