#include <catch2/catch_amalgamated.hpp>

#include <limits>
#include <string>
#include <vector>

#include "instances.hpp"
#include "schulze/core.hpp"

using namespace schulze;

TEST_CASE("candidate sets map names to dense indices") {
  const CandidateSet cs({"alice", "bob", "carol.3", "d-e_f"});
  CHECK(cs.size() == 4);
  CHECK(cs.name(0) == "alice");
  CHECK(cs.name(3) == "d-e_f");
  CHECK(cs.index_of("bob") == 1);
  CHECK(cs.index_of("carol.3") == 2);
  CHECK(cs.index_of("nobody") == -1);
  CHECK(cs.index_of("") == -1);
}

TEST_CASE("candidate set construction rejects bad input") {
  CHECK_THROWS_AS(CandidateSet(std::vector<std::string>{}), std::invalid_argument);
  CHECK_THROWS_AS(CandidateSet({"A", "A"}), std::invalid_argument);
  CHECK_THROWS_AS(CandidateSet({""}), std::invalid_argument);
  CHECK_THROWS_AS(CandidateSet({"A B"}), std::invalid_argument);
  CHECK_THROWS_AS(CandidateSet({"x,y"}), std::invalid_argument);
  CHECK_THROWS_AS(CandidateSet({"a>b"}), std::invalid_argument);
  CHECK(CandidateSet({"A"}).size() == 1);
}

TEST_CASE("name characters are letters, digits, underscore, dot, dash") {
  for (char c : std::string("azAZ09_.-")) CHECK(CandidateSet::is_name_char(c));
  for (char c : std::string(" \t,>=#<\"")) CHECK_FALSE(CandidateSet::is_name_char(c));
}

TEST_CASE("weighted digraphs store a square matrix with zero diagonal") {
  const CandidateSet cs({"A", "B"});
  const WeightedDigraph g(cs, {0, 5, -3, 0});
  CHECK(g.size() == 2);
  CHECK(g.weight(0, 1) == 5);
  CHECK(g.weight(1, 0) == -3);
  CHECK(g.row(1)[0] == -3);

  CHECK_THROWS_AS(WeightedDigraph(cs, {0, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(WeightedDigraph(cs, {1, 0, 0, 0}), std::invalid_argument);

  WeightedDigraph zero{cs};
  CHECK(zero.weight(0, 1) == 0);
  zero.set_weight(0, 1, 9);
  CHECK(zero.weight(0, 1) == 9);
  CHECK_THROWS_AS(zero.set_weight(1, 1, 2), std::invalid_argument);
}

TEST_CASE("transposing reverses every edge and is an involution") {
  SplitMix64 rng(11);
  const WeightedDigraph g = testkit::distinct_weight_digraph(rng, 7);
  const WeightedDigraph t = g.transposed();
  for (int x = 0; x < g.size(); ++x)
    for (int y = 0; y < g.size(); ++y) CHECK(t.weight(x, y) == g.weight(y, x));
  CHECK(t.transposed() == g);
}

TEST_CASE("margin matrices must be antisymmetric") {
  const CandidateSet cs({"A", "B"});
  CHECK_NOTHROW(MarginMatrix(cs, {0, 4, -4, 0}));
  CHECK_THROWS_AS(MarginMatrix(cs, {0, 4, 4, 0}), std::invalid_argument);
  CHECK_THROWS_AS(MarginMatrix(cs, {0, 4, 0, 0}), std::invalid_argument);

  const MarginMatrix m = testkit::tie_example();
  CHECK(m.margin(0, 1) == 2);
  CHECK(m.margin(1, 0) == -2);
  CHECK(m.graph().weight(0, 1) == 2);
}

TEST_CASE("beatpath values order as -inf < finite < +inf") {
  const auto neg = BeatpathValue::neg_infinity();
  const auto pos = BeatpathValue::pos_infinity();
  const auto lo = BeatpathValue::finite(std::numeric_limits<std::int64_t>::min());
  const auto hi = BeatpathValue::finite(std::numeric_limits<std::int64_t>::max());

  const std::vector<BeatpathValue> ascending = {
      neg, lo, BeatpathValue::finite(-2), BeatpathValue::finite(0), BeatpathValue::finite(7), hi, pos};
  for (std::size_t i = 0; i < ascending.size(); ++i)
    for (std::size_t j = 0; j < ascending.size(); ++j) {
      CHECK((ascending[i] < ascending[j]) == (i < j));
      CHECK((ascending[i] == ascending[j]) == (i == j));
    }

  CHECK(min(neg, pos) == neg);
  CHECK(max(neg, pos) == pos);
  CHECK(min(BeatpathValue::finite(3), BeatpathValue::finite(5)) == BeatpathValue::finite(3));
  CHECK(max(BeatpathValue::finite(3), BeatpathValue::finite(5)) == BeatpathValue::finite(5));

  CHECK(pos.is_pos_infinity());
  CHECK(neg.is_neg_infinity());
  CHECK(BeatpathValue::finite(0).is_finite());
  CHECK(BeatpathValue::finite(42).value() == 42);
}

TEST_CASE("pairwise comparison follows the strength comparison") {
  const auto f = BeatpathValue::finite;
  CHECK(compare_by_beatpaths(f(1), f(2)) == SchulzeComparison::Less);
  CHECK(compare_by_beatpaths(f(2), f(1)) == SchulzeComparison::Greater);
  CHECK(compare_by_beatpaths(f(2), f(2)) == SchulzeComparison::Incomparable);
  CHECK(compare_by_beatpaths(BeatpathValue::neg_infinity(), f(-100)) == SchulzeComparison::Less);
  CHECK(compare_by_beatpaths(BeatpathValue::pos_infinity(), f(100)) == SchulzeComparison::Greater);
}

TEST_CASE("beatpath matrices require an infinite diagonal") {
  const auto b = testkit::tie_expected_beatpaths();
  CHECK(b.strength(0, 1) == BeatpathValue::finite(2));
  CHECK(b.compare(0, 0) == SchulzeComparison::Same);
  CHECK(b.compare(0, 1) == SchulzeComparison::Greater);
  CHECK(b.compare(1, 0) == SchulzeComparison::Less);
  CHECK(b.compare(0, 2) == SchulzeComparison::Incomparable);

  const CandidateSet cs({"A", "B"});
  const auto f = BeatpathValue::finite;
  CHECK_THROWS_AS(BeatpathMatrix(cs, {f(0), f(1), f(1), f(0)}), std::invalid_argument);
  CHECK_THROWS_AS(BeatpathMatrix(cs, {BeatpathValue::pos_infinity(), f(1)}), std::invalid_argument);
}

TEST_CASE("partial order specs validate their relation") {
  const CandidateSet cs({"a", "b", "c"});
  // A chain a < b < c must include the closure pair (a, c).
  CHECK_THROWS_AS(PartialOrderSpec(cs, {{0, 1}, {1, 2}}), std::invalid_argument);
  const PartialOrderSpec chain(cs, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(chain.less(0, 1));
  CHECK(chain.less(0, 2));
  CHECK_FALSE(chain.less(1, 0));
  CHECK(chain.pair_count() == 3);

  CHECK_THROWS_AS(PartialOrderSpec(cs, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(PartialOrderSpec(cs, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(PartialOrderSpec(cs, {{0, 3}}), std::invalid_argument);

  const PartialOrderSpec empty(cs, {});
  CHECK(empty.pair_count() == 0);
}

TEST_CASE("transitive closure adds exactly the implied pairs") {
  const auto closed = transitive_closure(4, {{0, 1}, {1, 2}, {2, 3}});
  const PartialOrderSpec chain(testkit::numbered_candidates(4), closed);
  CHECK(chain.pair_count() == 6);
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) CHECK(chain.less(x, y) == (x < y));

  // Closing a 2-cycle yields reflexive pairs, which PartialOrderSpec rejects.
  const auto cyclic = transitive_closure(2, {{0, 1}, {1, 0}});
  CHECK_THROWS_AS(PartialOrderSpec(testkit::numbered_candidates(2), cyclic),
                  std::invalid_argument);
}

TEST_CASE("random posets from the test kit are valid and have unique extremes") {
  SplitMix64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const int m = 2 + static_cast<int>(rng.below(9));
    const PartialOrderSpec spec = testkit::random_poset(rng, m);
    CHECK(maximal_elements(spec).size() == 1);
    CHECK(minimal_elements(spec).size() == 1);
  }
}
