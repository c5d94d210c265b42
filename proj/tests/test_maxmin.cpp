#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "instances.hpp"
#include "schulze/maxmin.hpp"
#include "schulze/oracle.hpp"

using namespace schulze;

namespace {

std::vector<BeatpathValue> oracle_row(const BeatpathMatrix& b, int x) {
  std::vector<BeatpathValue> row;
  for (int y = 0; y < b.size(); ++y) row.push_back(b.strength(x, y));
  return row;
}

std::vector<BeatpathValue> oracle_column(const BeatpathMatrix& b, int y) {
  std::vector<BeatpathValue> col;
  for (int x = 0; x < b.size(); ++x) col.push_back(b.strength(x, y));
  return col;
}

}  // namespace

TEST_CASE("single-source strengths reproduce the documented chain rows") {
  const WeightedDigraph g = testkit::chain_example().graph();
  const BeatpathMatrix expected = testkit::chain_expected_beatpaths();
  for (int s = 0; s < 4; ++s) {
    const PriorityVector got = single_source_maxmin(g, s);
    CHECK(got.anchor == s);
    CHECK(got.direction == PathDirection::FromSource);
    CHECK(got.values == oracle_row(expected, s));
  }
}

TEST_CASE("single-destination strengths reproduce the documented chain columns") {
  const WeightedDigraph g = testkit::chain_example().graph();
  const BeatpathMatrix expected = testkit::chain_expected_beatpaths();
  for (int d = 0; d < 4; ++d) {
    const PriorityVector got = single_destination_maxmin(g, d);
    CHECK(got.anchor == d);
    CHECK(got.direction == PathDirection::ToDestination);
    CHECK(got.values == oracle_column(expected, d));
  }
}

TEST_CASE("a single candidate is infinitely strong against itself only") {
  const WeightedDigraph g{CandidateSet({"only"})};
  CHECK(single_source_maxmin(g, 0).values ==
        std::vector<BeatpathValue>{BeatpathValue::pos_infinity()});
  CHECK(single_destination_maxmin(g, 0).values ==
        std::vector<BeatpathValue>{BeatpathValue::pos_infinity()});
}

TEST_CASE("anchor bounds are validated") {
  const WeightedDigraph g = testkit::tie_example().graph();
  CHECK_THROWS_AS(single_source_maxmin(g, -1), std::invalid_argument);
  CHECK_THROWS_AS(single_source_maxmin(g, 3), std::invalid_argument);
  CHECK_THROWS_AS(single_destination_maxmin(g, 7), std::invalid_argument);
}

TEST_CASE("scan kernels agree with the cubic all-pairs computation") {
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 150; ++trial) {
    const int m = 2 + static_cast<int>(rng.below(15));
    const WeightedDigraph g = testkit::distinct_weight_digraph(rng, m);
    const BeatpathMatrix oracle = floyd_warshall_beatpaths(g);
    for (int v = 0; v < m; ++v) {
      REQUIRE(single_source_maxmin(g, v).values == oracle_row(oracle, v));
      REQUIRE(single_destination_maxmin(g, v).values == oracle_column(oracle, v));
    }
  }
}

TEST_CASE("extraction order reports non-increasing bottleneck priorities") {
  SplitMix64 rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    const int m = 2 + static_cast<int>(rng.below(12));
    const MarginMatrix margins = testkit::random_margins(rng, m, 40);
    std::vector<BeatpathValue> order;
    single_source_maxmin(margins.graph(), 0,
                         [&order](int, BeatpathValue beta) { order.push_back(beta); });
    REQUIRE(order.size() == static_cast<std::size_t>(m));
    CHECK(order.front() == BeatpathValue::pos_infinity());
    for (std::size_t i = 1; i < order.size(); ++i) REQUIRE(order[i - 1] >= order[i]);
  }
}

TEST_CASE("pivot partition splits the tie example around A") {
  const WeightedDigraph g = testkit::tie_example().graph();
  const PivotPartition part = pivot_partition(g, 0, {0, 1, 2});
  CHECK(part.pivot == 0);
  CHECK(part.low == std::vector<int>{1});
  CHECK(part.incomparable == std::vector<int>{0, 2});
  CHECK(part.high.empty());
}

TEST_CASE("pivot partition splits the chain example around C") {
  const WeightedDigraph g = testkit::chain_example().graph();
  const PivotPartition part = pivot_partition(g, 2, {0, 1, 2, 3});
  CHECK(part.low == std::vector<int>{3});
  CHECK(part.incomparable == std::vector<int>{2});
  CHECK(part.high == std::vector<int>{0, 1});
}

TEST_CASE("pivot partition restricted to a subset still uses full-graph paths") {
  const WeightedDigraph g = testkit::chain_example().graph();
  const PivotPartition part = pivot_partition(g, 1, {1, 2, 3});
  CHECK(part.low == std::vector<int>{2, 3});
  CHECK(part.incomparable == std::vector<int>{1});
  CHECK(part.high.empty());

  // B < A holds only through paths that leave {A, B}; the membership of A
  // in `high` shows the partition consulted the full graph.
  const PivotPartition ab = pivot_partition(g, 1, {0, 1});
  CHECK(ab.high == std::vector<int>{0});
  CHECK(ab.low.empty());
}

TEST_CASE("pivot partition validates the pivot and the queried set") {
  const WeightedDigraph g = testkit::tie_example().graph();
  CHECK_THROWS_AS(pivot_partition(g, 0, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(pivot_partition(g, 0, {0, 5}), std::invalid_argument);
  CHECK_THROWS_AS(pivot_partition(g, 9, {0}), std::invalid_argument);
}

TEST_CASE("pivot partition matches the brute-force order on random graphs") {
  SplitMix64 rng(31);
  for (int trial = 0; trial < 80; ++trial) {
    const int m = 2 + static_cast<int>(rng.below(12));
    const MarginMatrix margins = testkit::random_margins(rng, m, 30);
    const WeightedDigraph& g = margins.graph();
    const BeatpathMatrix oracle = floyd_warshall_beatpaths(g);
    const int p = static_cast<int>(rng.below(static_cast<std::uint64_t>(m)));

    std::vector<int> all;
    for (int i = 0; i < m; ++i) all.push_back(i);
    const PivotPartition part = pivot_partition(g, p, all);
    for (int v : part.low) REQUIRE(oracle.compare(v, p) == SchulzeComparison::Less);
    for (int v : part.high) REQUIRE(oracle.compare(v, p) == SchulzeComparison::Greater);
    for (int v : part.incomparable) {
      if (v == p) continue;
      REQUIRE(oracle.compare(v, p) == SchulzeComparison::Incomparable);
    }
    REQUIRE(part.low.size() + part.incomparable.size() + part.high.size() ==
            static_cast<std::size_t>(m));
  }
}

TEST_CASE("restricting to an induced subgraph would flip documented comparisons") {
  // Full chain-example graph: A > B. Induced subgraphs on {A, B} and
  // {A, B, C} order B > A instead, so partitions must never induce.
  const MarginMatrix full = testkit::chain_example();
  const BeatpathMatrix full_b = floyd_warshall_beatpaths(full.graph());
  CHECK(full_b.compare(0, 1) == SchulzeComparison::Greater);

  const MarginMatrix ab(CandidateSet({"A", "B"}),
                        {0, full.margin(0, 1), full.margin(1, 0), 0});
  const BeatpathMatrix ab_b = floyd_warshall_beatpaths(ab.graph());
  CHECK(ab_b.compare(0, 1) == SchulzeComparison::Less);

  const MarginMatrix abc(CandidateSet({"A", "B", "C"}),
                         {0, full.margin(0, 1), full.margin(0, 2),
                          full.margin(1, 0), 0, full.margin(1, 2),
                          full.margin(2, 0), full.margin(2, 1), 0});
  const BeatpathMatrix abc_b = floyd_warshall_beatpaths(abc.graph());
  CHECK(abc_b.compare(0, 1) == SchulzeComparison::Less);
}
