#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "hitsets/arena.hpp"
#include "hitsets/errors.hpp"
#include "hitsets/graph.hpp"
#include "hitsets/hypergraph.hpp"
#include "test_util.hpp"

using namespace hitsets;

namespace {

Coloring make_coloring(std::vector<int> colors) {
  Coloring c;
  c.colors = std::move(colors);
  return c;
}

}  // namespace

TEST_CASE("hypergraph construction validates and normalizes") {
  Hypergraph h = Hypergraph::make(3, {{2, 0}, {1}});
  CHECK(h.n == 3);
  REQUIRE(h.ranges.size() == 2);
  CHECK(h.ranges[0] == Range{0, 2});
  CHECK(h.ranges[1] == Range{1});
  CHECK(h.has_range({0, 2}));
  CHECK_FALSE(h.has_range({0, 1}));

  // Members are deduplicated before the duplicate-range check.
  Hypergraph dedup = Hypergraph::make(2, {{0, 0}});
  CHECK(dedup.ranges[0] == Range{0});

  CHECK_THROWS_AS(Hypergraph::make(2, {{0, 2}}), InputError);
  CHECK_THROWS_AS(Hypergraph::make(2, {{-1}}), InputError);
  CHECK_THROWS_AS(Hypergraph::make(2, {{0}, {0}}), InputError);
  CHECK_THROWS_AS(Hypergraph::make(2, {{0, 0}, {0}}), InputError);
  CHECK_THROWS_AS(Hypergraph::make(-1, {}), InputError);
}

TEST_CASE("interval families are closed under intersecting unions") {
  CHECK(is_itype(make_intervals_hypergraph(3)));

  // Two ranges meeting in a single point whose union is missing.
  Hypergraph fig = Hypergraph::make(5, {{0, 3}, {1, 3}});
  CHECK_FALSE(is_itype(fig));

  // Disjoint ranges impose nothing.
  CHECK(is_itype(Hypergraph::make(2, {{0}, {1}})));

  // Empty family, vacuously closed.
  CHECK(is_itype(Hypergraph::make(4, {})));

  for (int n = 1; n <= 32; ++n) CHECK(is_itype(make_intervals_hypergraph(n)));
}

TEST_CASE("separability means every singleton is a range") {
  CHECK(is_separable(make_intervals_hypergraph(3)));
  CHECK_FALSE(is_separable(Hypergraph::make(2, {{0, 1}})));
  CHECK(is_separable(Hypergraph::make(2, {{0}, {1}, {0, 1}})));
  CHECK(is_separable(Hypergraph::make(0, {})));
  CHECK_FALSE(is_separable(Hypergraph::make(1, {})));
}

TEST_CASE("unique-max colorings put a strict maximum in every range") {
  Hypergraph h4 = make_intervals_hypergraph(4);
  CHECK(is_unique_max(h4, make_coloring({1, 2, 1, 3})));
  CHECK_FALSE(is_unique_max(Hypergraph::make(2, {{0, 1}}), make_coloring({1, 1})));
  CHECK(is_unique_max(Hypergraph::make(3, {{0}, {1}, {2}}), make_coloring({1, 1, 1})));
  CHECK_THROWS_AS(is_unique_max(h4, make_coloring({1, 2, 1})), InputError);
}

TEST_CASE("unique-min colorings put a strict minimum in every range") {
  Hypergraph h4 = make_intervals_hypergraph(4);
  CHECK(is_unique_min(h4, make_coloring({3, 2, 3, 1})));
  CHECK_FALSE(is_unique_min(Hypergraph::make(2, {{0, 1}}), make_coloring({2, 2})));
  CHECK(is_unique_min(Hypergraph::make(3, {{0}, {1}, {2}}), make_coloring({1, 1, 1})));
}

TEST_CASE("unique-max of a coloring is unique-min of its reversal") {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 60; ++iter) {
    int n = 2 + static_cast<int>(rng() % 5);
    Hypergraph h = random_itype_hypergraph(1000 + static_cast<unsigned long long>(iter), n);
    Coloring c = test_util::random_coloring(rng, n, 4);
    Coloring rev;
    rev.colors.resize(c.colors.size());
    int top = c.max_color();
    for (size_t i = 0; i < c.colors.size(); ++i) rev.colors[i] = top + 1 - c.colors[i];
    CHECK(is_unique_max(h, c) == is_unique_min(h, rev));
  }
}

TEST_CASE("hitting verification checks every range") {
  std::vector<Range> ranges = {{0, 1}, {2, 3}};
  HittingSet hs;
  hs.insert(1);
  CHECK_FALSE(verify_hitting(ranges, hs));
  hs.insert(2);
  CHECK(verify_hitting(ranges, hs));
  CHECK(verify_hitting({}, HittingSet{}));
}

TEST_CASE("least unique-max palette on interval families") {
  Hypergraph h4 = make_intervals_hypergraph(4);
  auto res = um_chromatic_exact(h4, 5);
  REQUIRE(res.has_value());
  CHECK(res->chromatic == 3);
  CHECK(is_unique_max(h4, res->witness));
  CHECK(res->witness.max_color() <= 3);
}

TEST_CASE("least unique-max palette, small cases") {
  auto one = um_chromatic_exact(Hypergraph::make(1, {{0}}), 3);
  REQUIRE(one.has_value());
  CHECK(one->chromatic == 1);

  // Star with five leaves: center colored above the leaves suffices for
  // every connected subgraph.
  Graph star = star_graph(5);
  Hypergraph hs = connected_subgraph_hypergraph(star);
  auto rs = um_chromatic_exact(hs, star.n + 1);
  REQUIRE(rs.has_value());
  CHECK(rs->chromatic == 2);

  // Palette cap short-circuits to nullopt.
  CHECK_FALSE(um_chromatic_exact(make_intervals_hypergraph(2), 1).has_value());
}

TEST_CASE("least unique-max palette does not assume some point takes color one") {
  // The optimum here is [2,1,1]: point 0 must beat both others, so color 1
  // is never the strict maximum of a range and no optimal coloring is forced
  // to use color 1 on a range maximum.
  Hypergraph h = Hypergraph::make(3, {{0, 1}, {0, 2}, {0, 1, 2}});
  auto res = um_chromatic_exact(h, 4);
  REQUIRE(res.has_value());
  CHECK(res->chromatic == 2);
  CHECK(is_unique_max(h, res->witness));
}

TEST_CASE("least unique-max palette is monotone under range deletion") {
  std::mt19937_64 rng(17);
  for (int iter = 0; iter < 20; ++iter) {
    int n = 2 + static_cast<int>(rng() % 5);
    Hypergraph h = random_itype_hypergraph(500 + static_cast<unsigned long long>(iter), n);
    auto full = um_chromatic_exact(h, n + 1);
    REQUIRE(full.has_value());
    if (h.ranges.empty()) continue;
    std::vector<Range> fewer = h.ranges;
    fewer.erase(fewer.begin() + static_cast<long>(rng() % fewer.size()));
    auto sub = um_chromatic_exact(Hypergraph::make(n, fewer), n + 1);
    REQUIRE(sub.has_value());
    CHECK(sub->chromatic <= full->chromatic);
  }
}

TEST_CASE("coloring palette accessors") {
  Coloring c = make_coloring({3, 1, 3, 2});
  CHECK(c.palette_size() == 3);
  CHECK(c.max_color() == 3);
  CHECK(c[0] == 3);
  CHECK(Coloring{}.palette_size() == 0);
}

TEST_CASE("hitting set is a sorted monotone chain") {
  HittingSet hs;
  CHECK(hs.insert(4));
  CHECK(hs.insert(1));
  CHECK_FALSE(hs.insert(4));
  CHECK(hs.points == std::vector<PointId>{1, 4});
  CHECK(hs.contains(1));
  CHECK_FALSE(hs.contains(2));
  CHECK(hs.stabs({2, 3, 4}));
  CHECK_FALSE(hs.stabs({0, 2}));
}
