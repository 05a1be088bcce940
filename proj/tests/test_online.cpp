#include <vector>

#include "doctest.h"
#include "hitsets/errors.hpp"
#include "hitsets/hypergraph.hpp"
#include "hitsets/online.hpp"
#include "hitsets/ranking.hpp"

using namespace hitsets;

namespace {

Coloring make_coloring(std::vector<int> colors) {
  Coloring c;
  c.colors = std::move(colors);
  return c;
}

}  // namespace

TEST_CASE("color-driven stabbing follows the unique maximum") {
  AlgCState st = make_algc_state(make_coloring({1, 2, 1, 3}));

  auto first = algc_step(st, make_interval(0, 3));
  REQUIRE(first.has_value());
  CHECK(*first == 3);
  CHECK(st.hitting_set.points == std::vector<PointId>{3});

  // Already stabbed: nothing happens.
  auto second = algc_step(st, make_interval(2, 3));
  CHECK_FALSE(second.has_value());
  CHECK(st.hitting_set.size() == 1);

  auto third = algc_step(st, make_interval(0, 1));
  REQUIRE(third.has_value());
  CHECK(*third == 1);
  CHECK(st.hitting_set.points == std::vector<PointId>{1, 3});
}

TEST_CASE("color ties inside a range are an invariant violation") {
  AlgCState st = make_algc_state(make_coloring({1, 1}));
  CHECK_THROWS_AS(algc_step(st, make_interval(0, 1)), InvariantViolation);
}

TEST_CASE("empty ranges are rejected") {
  AlgCState st = make_algc_state(make_coloring({1, 2}));
  CHECK_THROWS_AS(algc_step(st, {}), InputError);
  LeftmostAlg lm;
  lm.reset();
  CHECK_THROWS_AS(lm.feed({}), InputError);
}

TEST_CASE("out-of-range points are rejected") {
  AlgCState st = make_algc_state(make_coloring({1, 2}));
  CHECK_THROWS_AS(algc_step(st, {0, 2}), InputError);
}

TEST_CASE("per-color stab counts add up to the hitting set size") {
  Coloring ruler = rank_path(16).coloring;
  AlgCState st = make_algc_state(ruler);
  algc_step(st, make_interval(0, 15));
  algc_step(st, make_interval(0, 6));
  algc_step(st, make_interval(4, 6));
  algc_step(st, make_interval(4, 6));
  algc_step(st, make_interval(9, 12));
  int total = 0;
  for (const auto& [color, count] : st.per_color_counts) {
    CHECK(count >= 1);
    total += count;
  }
  CHECK(total == st.hitting_set.size());
}

TEST_CASE("algorithm adapter resets cleanly and replays deterministically") {
  AlgC alg(make_coloring({1, 2, 1, 3}));
  alg.reset();
  StepOutcome o1 = alg.feed(make_interval(0, 3));
  CHECK_FALSE(o1.was_stabbed);
  REQUIRE(o1.added.size() == 1);
  CHECK(o1.added[0] == 3);
  StepOutcome o2 = alg.feed(make_interval(2, 3));
  CHECK(o2.was_stabbed);
  CHECK(o2.added.empty());
  std::vector<PointId> first_run = alg.hitting_set().points;

  alg.reset();
  CHECK(alg.hitting_set().size() == 0);
  alg.feed(make_interval(0, 3));
  alg.feed(make_interval(2, 3));
  CHECK(alg.hitting_set().points == first_run);
  CHECK(alg.name() == "algc");
}

TEST_CASE("leftmost baseline stabs the smallest point") {
  LeftmostAlg lm;
  lm.reset();
  StepOutcome o1 = lm.feed(make_interval(3, 7));
  REQUIRE(o1.added.size() == 1);
  CHECK(o1.added[0] == 3);
  StepOutcome o2 = lm.feed(make_interval(0, 3));
  CHECK(o2.was_stabbed);
  StepOutcome o3 = lm.feed(make_interval(5, 6));
  REQUIRE(o3.added.size() == 1);
  CHECK(o3.added[0] == 5);
  CHECK(lm.hitting_set().points == std::vector<PointId>{3, 5});
  CHECK(lm.name() == "leftmost");
}

TEST_CASE("coloring size is enforced by the adapter") {
  AlgC alg(make_coloring({1, 2}));
  alg.reset();
  CHECK_THROWS_AS(alg.feed({0, 1, 2}), InputError);
}
