#include <doctest.h>

#include <algorithm>
#include <random>

#include "bwcoh/examples.hpp"
#include "bwcoh/fuzz.hpp"
#include "bwcoh/partition.hpp"
#include "support.hpp"

using namespace bwcoh;
using namespace bwcoh::testing;

TEST_CASE("algorithm_a on the example families") {
  const Quiver chain = gen_example(Family::chain, 3);
  const Partition pc = algorithm_a(chain);
  CHECK(pc == hand_partition(Family::chain, 3, chain));

  const Quiver cycle = gen_example(Family::cycle, 3);
  const Partition py = algorithm_a(cycle);
  CHECK(py == hand_partition(Family::cycle, 3, cycle));

  const Quiver single({"v"}, {});
  const Partition ps = algorithm_a(single);
  CHECK(ps.a.empty());
  CHECK(ps.b == std::vector<VertexId>{0});
  CHECK(ps.f.empty());
  CHECK(ps.g.empty());
  CHECK(ps.h.empty());

  const Quiver loop({"v"}, {{"l", "v", "v"}});
  const Partition pl = algorithm_a(loop);
  CHECK(pl.h == std::vector<ArrowId>{0});
  CHECK(pl.b == std::vector<VertexId>{0});
  CHECK(validate_partition(loop, pl).valid());

  for (int n = 2; n <= 4; ++n) {
    const Quiver bi = gen_example(Family::bicycle, n);
    // h comes out in arrow order; the hand partition lists it differently.
    Partition got = algorithm_a(bi);
    Partition want = hand_partition(Family::bicycle, n, bi);
    std::sort(got.h.begin(), got.h.end());
    std::sort(want.h.begin(), want.h.end());
    CHECK(got == want);
  }
}

TEST_CASE("row order follows f, g, h") {
  const Quiver bi = gen_example(Family::bicycle, 3);
  const Partition p = algorithm_a(bi);
  std::vector<ArrowId> expected = p.f;
  expected.insert(expected.end(), p.g.begin(), p.g.end());
  expected.insert(expected.end(), p.h.begin(), p.h.end());
  CHECK(p.row_arrows() == expected);
}

TEST_CASE("validate_partition") {
  const Quiver chain = gen_example(Family::chain, 3);
  CHECK(validate_partition(chain, algorithm_a(chain)).valid());

  Partition bad = algorithm_a(chain);
  std::swap(bad.a[0], bad.a[1]);
  auto report = validate_partition(chain, bad);
  REQUIRE_FALSE(report.valid());
  CHECK(report.summary().starts_with("target mismatch"));

  const Quiver star = gen_example(Family::star, 3);
  CHECK(validate_partition(star, hand_partition(Family::star, 3, star)).valid());

  Partition missing = algorithm_a(chain);
  missing.f.pop_back();
  missing.a.pop_back();
  CHECK(validate_partition(chain, missing).summary().starts_with("vertex partition"));

  const Quiver cycle = gen_example(Family::cycle, 3);
  Partition cyc = algorithm_a(cycle);
  cyc.g.push_back(cyc.h.back());
  cyc.h.pop_back();
  CHECK(validate_partition(cycle, cyc).summary() == "Q1 + Q2 has a cycle");

  // Dropping a g arrow into h breaks maximality on an acyclic quiver.
  Partition star_p = hand_partition(Family::star, 3, star);
  star_p.h.push_back(star_p.g.back());
  star_p.g.pop_back();
  CHECK(validate_partition(star, star_p).summary().starts_with("Q1 + Q2 is not maximal"));
}

TEST_CASE("partition properties on random quivers") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 400; ++trial) {
    const Quiver q = random_quiver(rng, 7, 12);
    CAPTURE(trial);
    const PartitionRun run = run_algorithm_a(q);
    const Partition& p = run.partition;
    CHECK(p.a.size() + p.b.size() == q.vertex_count());
    CHECK(p.f.size() + p.g.size() + p.h.size() == q.arrow_count());
    CHECK(p.a.size() == p.f.size());
    CHECK(run.iterations <= q.vertex_count());
    CHECK(validate_partition(q, p).valid());
    CHECK(run_algorithm_a(q).partition == p);
    if (brute_is_acyclic(q, all_arrows(q))) CHECK(p.h.empty());
  }
}
