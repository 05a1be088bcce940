#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "hitsets/arena.hpp"
#include "hitsets/errors.hpp"
#include "hitsets/graph.hpp"
#include "hitsets/hypergraph.hpp"
#include "hitsets/online.hpp"
#include "hitsets/ranking.hpp"
#include "test_util.hpp"

using namespace hitsets;

TEST_CASE("fixed-source games record faithful transcripts") {
  AlgC alg(rank_path(4).coloring);
  HypergraphEngine engine(alg);
  FixedSource<Range> source({make_interval(0, 3)});
  Transcript<Range> t = run_game(engine, source);
  REQUIRE(t.events.size() == 1);
  CHECK_FALSE(t.events[0].was_stabbed);
  CHECK(t.events[0].added.size() == 1);
  CHECK(t.events[0].size_after == 1);
  CHECK(t.alg_size() == 1);
  CHECK(t.presented_ranges().size() == 1);
}

TEST_CASE("nested-interval adversary forces a logarithmic chain") {
  AlgC alg(rank_path(8).coloring);
  HypergraphEngine engine(alg);
  NestedIntervalAdversary adv(8);
  Transcript<Range> t = run_game(engine, adv);
  CHECK(t.events.size() == 4);
  CHECK(t.alg_size() == 4);
  RatioReport report = ratio_report(t, 8);
  CHECK(report.opt_size == 1);
  CHECK(report.ratio == Rational(4));
}

TEST_CASE("nested-interval adversary on tiny ground sets") {
  {
    AlgC alg(rank_path(1).coloring);
    HypergraphEngine engine(alg);
    NestedIntervalAdversary adv(1);
    Transcript<Range> t = run_game(engine, adv);
    CHECK(t.events.size() == 1);
    CHECK(t.alg_size() == 1);
  }
  {
    AlgC alg(rank_path(2).coloring);
    HypergraphEngine engine(alg);
    NestedIntervalAdversary adv(2);
    Transcript<Range> t = run_game(engine, adv);
    CHECK(t.alg_size() == 2);
  }
  {
    AlgC alg(rank_path(7).coloring);
    HypergraphEngine engine(alg);
    NestedIntervalAdversary adv(7);
    Transcript<Range> t = run_game(engine, adv);
    CHECK(t.alg_size() == 3);
    CHECK(ratio_report(t, 7).opt_size == 1);
  }
}

TEST_CASE("nested-interval adversary presses any monotone algorithm") {
  for (int n : {2, 16, 33, 100}) {
    LeftmostAlg lm;
    HypergraphEngine engine(lm);
    NestedIntervalAdversary adv(n);
    Transcript<Range> t = run_game(engine, adv);
    CHECK(t.alg_size() >= floor_log2(n) + 1);
    CHECK(ratio_report(t, n).opt_size == 1);
  }
}

TEST_CASE("games replay deterministically") {
  auto play = [] {
    AlgC alg(rank_path(16).coloring);
    HypergraphEngine engine(alg);
    NestedIntervalAdversary adv(16);
    return run_game(engine, adv);
  };
  Transcript<Range> a = play();
  Transcript<Range> b = play();
  REQUIRE(a.events.size() == b.events.size());
  for (size_t i = 0; i < a.events.size(); ++i) {
    CHECK(a.events[i].range == b.events[i].range);
    CHECK(a.events[i].added == b.events[i].added);
  }
  CHECK(a.final_set.points == b.final_set.points);
}

TEST_CASE("minimum hitting sets on hand instances") {
  CHECK(opt_hitting_set({{0}, {2}, {4}}, 5).points == std::vector<PointId>{0, 2, 4});
  CHECK(opt_hitting_set({make_interval(0, 7), make_interval(2, 5), make_interval(3, 4)}, 8)
            .points == std::vector<PointId>{3});
  CHECK(opt_hitting_set({{0, 1}, {2, 3}}, 4).points == std::vector<PointId>{0, 2});
  CHECK(opt_hitting_set({}, 4).points.empty());
  CHECK_THROWS_AS(opt_hitting_set({{}}, 4), InputError);
}

TEST_CASE("minimum hitting sets match exhaustive search") {
  std::mt19937_64 rng(61);
  for (int iter = 0; iter < 200; ++iter) {
    int n = 2 + static_cast<int>(rng() % 11);
    int k = 1 + static_cast<int>(rng() % 10);
    std::set<Range> distinct;
    for (int i = 0; i < k; ++i) {
      Range r;
      for (int p = 0; p < n; ++p)
        if (rng() % 3 == 0) r.push_back(p);
      if (r.empty()) r.push_back(static_cast<PointId>(rng() % static_cast<unsigned>(n)));
      distinct.insert(r);
    }
    std::vector<Range> ranges(distinct.begin(), distinct.end());
    std::vector<int> brute = test_util::brute_min_hitting(ranges, n);
    HittingSet got = opt_hitting_set(ranges, n);
    CHECK(static_cast<size_t>(got.size()) == brute.size());
    CHECK(got.points == std::vector<PointId>(brute.begin(), brute.end()));
  }
}

TEST_CASE("minimum hitting set scales to block-bitset ground sets") {
  // Disjoint intervals over a large ground set: optimum picks one point per
  // interval, lexicographically least means each interval's left endpoint.
  std::vector<Range> ranges;
  for (int b = 0; b < 20; ++b) ranges.push_back(make_interval(b * 50, b * 50 + 49));
  HittingSet hs = opt_hitting_set(ranges, 1000);
  REQUIRE(hs.size() == 20);
  for (int b = 0; b < 20; ++b) CHECK(hs.points[static_cast<size_t>(b)] == b * 50);
}

TEST_CASE("exact game values on interval families") {
  CHECK(exact_rho(Hypergraph::make(1, {{0}})) == Rational(1));
  CHECK(exact_rho(make_intervals_hypergraph(2)) == Rational(2));
  CHECK(exact_rho(make_intervals_hypergraph(4)) == Rational(3));
}

TEST_CASE("exact game value matches the optimal ranking on a clique") {
  Graph k3 = Graph::make(3, {{0, 1}, {1, 2}, {0, 2}});
  Hypergraph h = connected_subgraph_hypergraph(k3);
  CHECK(exact_rho(h) == Rational(rank_exact(k3).coloring.palette_size()));
}

TEST_CASE("exact game value guards") {
  CHECK_THROWS_AS(exact_rho(make_intervals_hypergraph(7)), InputError);
}

TEST_CASE("ratio reports and named bounds") {
  AlgC alg(rank_path(8).coloring);
  HypergraphEngine engine(alg);
  NestedIntervalAdversary adv(8);
  Transcript<Range> t = run_game(engine, adv);
  RatioReport report = ratio_report(t, 8);
  CHECK(report.alg_size == 4);
  CHECK(report.opt_size == 1);
  CHECK(report.ratio == Rational(4));

  attach_bound(report, "intervals-log", 8);
  REQUIRE(report.bound.has_value());
  CHECK(report.bound->name == "intervals-log");
  CHECK(report.bound->bound == Rational(4));
  CHECK(report.bound->pass);

  attach_bound(report, "lb-log", 8);
  CHECK(report.bound->pass);

  CHECK_THROWS_AS(attach_bound(report, "no-such-bound", 8), InputError);
}

TEST_CASE("empty transcripts report ratio one") {
  RatioReport report = make_ratio_report(0, {}, 4);
  CHECK(report.alg_size == 0);
  CHECK(report.opt_size == 0);
  CHECK(report.ratio == Rational(1));
}

TEST_CASE("upper bounds compare ratio, lower bounds compare size") {
  RatioReport r;
  r.alg_size = 6;
  r.opt_size = 2;
  r.ratio = Rational(3);
  attach_bound(r, "intervals-log", 8);  // bound 4, ratio 3 -> pass
  CHECK(r.bound->pass);
  attach_bound(r, "lb-log", 8);  // opt != 1 -> fail
  CHECK_FALSE(r.bound->pass);

  RatioReport tight;
  tight.alg_size = 8;
  tight.opt_size = 2;
  tight.ratio = Rational(4);
  attach_bound(tight, "intervals-log", 8);  // bound 4, ratio 4 -> pass (not strict)
  CHECK(tight.bound->pass);
  tight.alg_size = 9;
  tight.ratio = Rational(9, 2);
  attach_bound(tight, "intervals-log", 8);
  CHECK_FALSE(tight.bound->pass);
}

TEST_CASE("per-color first-stab disjointness audit") {
  std::vector<std::pair<int, Range>> good = {{1, {0, 1}}, {1, {3, 4}}, {2, {0, 4}}};
  CHECK(stabs_pairwise_disjoint(good));
  std::string detail;
  std::vector<std::pair<int, Range>> bad = {{1, {0, 1}}, {1, {1, 2}}};
  CHECK_FALSE(stabs_pairwise_disjoint(bad, &detail));
  CHECK_FALSE(detail.empty());
}

TEST_CASE("small ground sets have few interval-closed families") {
  std::vector<Hypergraph> all2 = enumerate_itype_hypergraphs(2);
  CHECK(all2.size() == 6);
  for (const Hypergraph& h : all2) CHECK(is_itype(h));

  std::vector<Hypergraph> all1 = enumerate_itype_hypergraphs(1);
  CHECK(all1.size() == 2);

  std::vector<Hypergraph> all3 = enumerate_itype_hypergraphs(3);
  for (const Hypergraph& h : all3) CHECK(is_itype(h));
  CHECK(all3.size() > 6);
}

TEST_CASE("random interval-closed families really are closed") {
  for (int iter = 0; iter < 30; ++iter) {
    Hypergraph h =
        random_itype_hypergraph(4000 + static_cast<unsigned long long>(iter), 2 + iter % 7);
    CHECK(is_itype(h));
  }
}

TEST_CASE("connected graph representatives per order") {
  CHECK(connected_graph_representatives(1).size() == 1);
  CHECK(connected_graph_representatives(2).size() == 1);
  CHECK(connected_graph_representatives(3).size() == 2);
  CHECK(connected_graph_representatives(4).size() == 6);
  CHECK(connected_graph_representatives(5).size() == 21);
  for (const Graph& g : connected_graph_representatives(4)) CHECK(g.is_connected());
}

TEST_CASE("competitive ratio sandwich on tiny ground sets") {
  SandwichResult res = theorem_sandwich_sweep(3);
  INFO(res.detail);
  CHECK(res.ok);
  CHECK(res.instances > 0);
  CHECK(res.separable > 0);
}

TEST_CASE("parabola chords embed intervals") {
  CHECK(parabola_embedding_check(16));
}

TEST_CASE("parabola adversary forces the interval lower bound") {
  HalfPlaneInstance inst = make_parabola_instance(8);
  HalfPlaneEngine engine(inst);
  ParabolaAdversary adv(8);
  Transcript<HalfPlaneQuery> t = run_game(engine, adv);
  CHECK(t.alg_size() == 4);
  RatioReport report = ratio_report(t, 8);
  CHECK(report.opt_size == 1);
  attach_bound(report, "lb-log", 8);
  CHECK(report.bound->pass);
  CHECK(audit_halfplane_colors(inst, t));
}

TEST_CASE("collinear disc adversary forces the interval lower bound") {
  for (int n : {4, 16}) {
    CollinearDiscFamily family = make_collinear_family(n);
    DiscInstance inst = DiscInstance::make(family.points);
    DiscEngine engine(inst);
    CollinearDiscAdversary adv(family);
    Transcript<DiscQuery> t = run_game(engine, adv);
    CHECK(t.alg_size() == floor_log2(n) + 1);
    RatioReport report = ratio_report(t, n);
    CHECK(report.opt_size == 1);
    CHECK(engine.max_tiles_per_arrival() == 1);
  }
}

TEST_CASE("collinear family discs cover exactly the asked runs") {
  CollinearDiscFamily family = make_collinear_family(64);
  DiscInstance inst = DiscInstance::make(family.points);
  for (auto [i, j] : std::vector<std::pair<int, int>>{{0, 63}, {10, 20}, {31, 31}}) {
    DiscQuery d = family.disc_for(i, j);
    std::vector<PointId> range = disc_range(inst, d);
    CHECK(range == make_interval(i, j));
  }
  CHECK_THROWS_AS(make_collinear_family(1 << 15), InputError);
}

TEST_CASE("random case generators are deterministic") {
  HalfPlaneCase a = random_halfplane_case(99, 20, 12);
  HalfPlaneCase b = random_halfplane_case(99, 20, 12);
  CHECK(a.instance.points.size() == b.instance.points.size());
  REQUIRE(a.queries.size() == b.queries.size());
  for (size_t i = 0; i < a.queries.size(); ++i) {
    CHECK(a.queries[i].a == b.queries[i].a);
    CHECK(a.queries[i].c == b.queries[i].c);
  }

  DiscCase da = random_disc_case(99, 20, 12);
  DiscCase db = random_disc_case(99, 20, 12);
  CHECK(da.instance.points.size() == db.instance.points.size());
  CHECK(da.queries.size() == db.queries.size());
}

TEST_CASE("random half-plane cases stay inside the doubled ruler bound") {
  for (unsigned long long seed = 1; seed <= 10; ++seed) {
    HalfPlaneCase c = random_halfplane_case(seed, 24, 16);
    HalfPlaneEngine engine(c.instance);
    FixedSource<HalfPlaneQuery> source(c.queries);
    Transcript<HalfPlaneQuery> t = run_game(engine, source);
    std::string detail;
    bool audit = audit_halfplane_colors(c.instance, t, &detail);
    INFO(detail);
    CHECK(audit);
    RatioReport report = ratio_report(t, static_cast<int>(c.instance.points.size()));
    attach_bound(report, "halfplane-2log", static_cast<int>(c.instance.points.size()));
    CHECK(report.bound->pass);
  }
}

TEST_CASE("random disc cases pass their audits and the global bound") {
  for (unsigned long long seed = 1; seed <= 6; ++seed) {
    DiscCase c = random_disc_case(seed, 16, 12);
    DiscEngine engine(c.instance);
    FixedSource<DiscQuery> source(c.queries);
    Transcript<DiscQuery> t = run_game(engine, source);
    std::string detail;
    bool colors = audit_disc_colors(c.instance, t, engine.stab_log(), &detail);
    INFO(detail);
    CHECK(colors);
    bool distinct = audit_disc_distinct_colors(c.instance, t, engine.stab_log(), &detail);
    INFO(detail);
    CHECK(distinct);
    CHECK(engine.max_tiles_per_arrival() <= 25);
    int n = static_cast<int>(c.instance.points.size());
    RatioReport report = ratio_report(t, n);
    attach_bound(report, "disc-global", n, engine.max_tiles_per_arrival());
    CHECK(report.bound->pass);
  }
}

TEST_CASE("disc games satisfy the per-optimum-point local bound") {
  DiscCase c = random_disc_case(7, 14, 10);
  CHECK(disc_local_bound_ok(c.instance, c.queries));
}
