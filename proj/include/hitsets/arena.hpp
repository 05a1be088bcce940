#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hitsets/disc.hpp"
#include "hitsets/errors.hpp"
#include "hitsets/graph.hpp"
#include "hitsets/halfplane.hpp"
#include "hitsets/hypergraph.hpp"
#include "hitsets/online.hpp"
#include "hitsets/parallel.hpp"
#include "hitsets/rational.hpp"

namespace hitsets {

// ---------------------------------------------------------------------------
// Transcripts and the game loop
// ---------------------------------------------------------------------------

/// One arrival in an online game: the query as presented, the set of points
/// it covers, whether the hitting set already stabbed it, and the points the
/// algorithm added in response.
template <typename Query>
struct TranscriptEvent {
  Query query;
  Range range;
  bool was_stabbed = false;
  std::vector<PointId> added;
  int size_after = 0;
};

template <typename Query>
struct Transcript {
  std::vector<TranscriptEvent<Query>> events;
  HittingSet final_set;

  int alg_size() const { return final_set.size(); }

  /// Nonempty ranges in arrival order (the input to the optimum oracle).
  std::vector<Range> presented_ranges() const {
    std::vector<Range> out;
    for (const auto& ev : events)
      if (!ev.range.empty()) out.push_back(ev.range);
    return out;
  }
};

/// Engines adapt one algorithm+instance pair to the game loop. Each engine
/// exposes the query type it consumes, a step function producing a
/// transcript event, and the current hitting set for adaptive sources.
class HypergraphEngine {
 public:
  using Query = Range;
  explicit HypergraphEngine(OnlineAlgorithm& alg) : alg_(&alg) { alg_->reset(); }
  TranscriptEvent<Range> step(const Range& r);
  const HittingSet& chosen() const { return alg_->hitting_set(); }

 private:
  OnlineAlgorithm* alg_;
};

class HalfPlaneEngine {
 public:
  using Query = HalfPlaneQuery;
  explicit HalfPlaneEngine(const HalfPlaneInstance& inst) : state_(make_algp_state(inst)) {}
  TranscriptEvent<HalfPlaneQuery> step(const HalfPlaneQuery& q);
  const HittingSet& chosen() const { return state_.chosen; }
  const AlgPState& state() const { return state_; }

 private:
  AlgPState state_;
};

class DiscEngine {
 public:
  using Query = DiscQuery;
  explicit DiscEngine(const DiscInstance& inst) : state_(make_algd_state(inst)) {}
  TranscriptEvent<DiscQuery> step(const DiscQuery& q);
  const HittingSet& chosen() const { return state_.chosen; }
  int max_tiles_per_arrival() const { return state_.max_tiles_per_arrival; }
  /// Stab records per event, aligned with the transcript (empty for stabbed
  /// arrivals).
  const std::vector<std::vector<DiscStabRecord>>& stab_log() const { return stab_log_; }

 private:
  DiscGameState state_;
  std::vector<std::vector<DiscStabRecord>> stab_log_;
};

/// Replays a fixed query sequence.
template <typename Query>
class FixedSource {
 public:
  explicit FixedSource(std::vector<Query> queries) : queries_(std::move(queries)) {}
  std::optional<Query> next(const HittingSet&) {
    if (pos_ >= queries_.size()) return std::nullopt;
    return queries_[pos_++];
  }

 private:
  std::vector<Query> queries_;
  size_t pos_ = 0;
};

/// Runs one online game to completion: pulls queries from the source
/// (adaptive sources see the current hitting set), feeds them to the engine,
/// and records the transcript. Engines are single-game; pass a fresh one.
template <typename Engine, typename Source>
Transcript<typename Engine::Query> run_game(Engine& engine, Source& source,
                                            int max_steps = 1 << 20) {
  Transcript<typename Engine::Query> t;
  int steps = 0;
  while (auto q = source.next(engine.chosen())) {
    if (++steps > max_steps) throw InvariantViolation("online game exceeded the step budget");
    t.events.push_back(engine.step(*q));
    const auto& ev = t.events.back();
    if (ev.was_stabbed != ev.added.empty())
      throw InvariantViolation("transcript invariant: points are added exactly when unstabbed");
  }
  t.final_set = engine.chosen();
  int total = 0;
  for (const auto& ev : t.events) total += static_cast<int>(ev.added.size());
  if (total != t.final_set.size())
    throw InvariantViolation("transcript invariant: hitting-set size must equal the sum of adds");
  return t;
}

// ---------------------------------------------------------------------------
// Adaptive adversaries
// ---------------------------------------------------------------------------

/// Presents the full interval [0, n-1] first, then repeatedly the largest
/// maximal run of unchosen points inside the previous interval (leftmost on
/// ties), stopping when the previous interval is fully covered. Forces at
/// least floor(log2 n)+1 arrivals against any algorithm while the presented
/// chain has a common point, so its optimum is a single point.
class NestedIntervalAdversary {
 public:
  explicit NestedIntervalAdversary(int n);
  std::optional<Range> next(const HittingSet& chosen);
  int events() const { return events_; }

 private:
  int n_;
  bool started_ = false;
  int lo_ = 0;
  int hi_ = -1;
  int events_ = 0;
};

/// Points (i, i^2) for i in [0, n): the interval [i, j] of indices is exactly
/// the set of points on or below the chord through points i and j.
HalfPlaneInstance make_parabola_instance(int n);

/// Drives the nested-interval adversary through chords of the parabola.
class ParabolaAdversary {
 public:
  explicit ParabolaAdversary(int n) : inner_(n) {}
  std::optional<HalfPlaneQuery> next(const HittingSet& chosen);

 private:
  NestedIntervalAdversary inner_;
};

/// n collinear points spanning less than one unit, plus unit discs that cover
/// exactly a chosen contiguous run of them.
struct CollinearDiscFamily {
  int n = 0;
  std::vector<RatPoint> points;
  /// Unit disc covering exactly the points with ids in [i, j]; covering is
  /// verified exactly at construction.
  DiscQuery disc_for(int i, int j) const;
};

CollinearDiscFamily make_collinear_family(int n);

class CollinearDiscAdversary {
 public:
  explicit CollinearDiscAdversary(const CollinearDiscFamily& family)
      : family_(&family), inner_(family.n) {}
  std::optional<DiscQuery> next(const HittingSet& chosen);

 private:
  const CollinearDiscFamily* family_;
  NestedIntervalAdversary inner_;
};

// ---------------------------------------------------------------------------
// Exact oracles
// ---------------------------------------------------------------------------

/// Exact minimum hitting set by branch and bound (greedy upper bound,
/// disjoint-packing lower bound, fewest-candidates branching), then the
/// lexicographically least minimum is reconstructed. Guards: n <= 1024,
/// at most 64 distinct inclusion-minimal ranges, bounded node budget.
HittingSet opt_hitting_set(const std::vector<Range>& ranges, int n);

/// Value of the finite hitting-set game: the adversary presents any range
/// not yet stabbed (or stops), the algorithm answers with one point of it,
/// and the payoff is the maximum over prefixes of |C_i| / |OPT(presented_i)|.
/// Solved by memoized minimax over (chosen-set, presented-set) states with
/// hypergraph-automorphism canonicalization. Guards: n <= 6, ranges <= 32.
/// An empty transcript has ratio 1 by convention.
Rational exact_rho(const Hypergraph& h);

// ---------------------------------------------------------------------------
// Ratio reports and bound checks
// ---------------------------------------------------------------------------

struct BoundCheck {
  std::string name;
  Rational bound;
  bool pass = false;
};

struct RatioReport {
  int alg_size = 0;
  int opt_size = 0;
  Rational ratio = 1;
  std::optional<BoundCheck> bound;
};

/// Computes the optimum for the presented nonempty ranges and the final
/// size ratio. With no nonempty arrivals the ratio is 1 by convention.
RatioReport make_ratio_report(int alg_size, const std::vector<Range>& presented, int n);

template <typename Query>
RatioReport ratio_report(const Transcript<Query>& t, int n) {
  return make_ratio_report(t.alg_size(), t.presented_ranges(), n);
}

/// Attaches a named bound check to a report. Names:
///   "intervals-log":  ratio <= floor(log2 n)+1
///   "halfplane-2log": ratio <= 2*(floor(log2 n)+1)
///   "disc-global":    ratio <= tile_constant*4*floor(log2(2n))
///   "lb-log":         alg_size >= floor(log2 n)+1 and opt_size == 1
/// tile_constant is only consulted for "disc-global" (measured max tiles
/// touched by one unstabbed arrival).
void attach_bound(RatioReport& report, const std::string& name, int n, int tile_constant = 0);

// ---------------------------------------------------------------------------
// Transcript audits
// ---------------------------------------------------------------------------

/// Checks that ranges first-stabbed by equal-color points are pairwise
/// disjoint within each color class.
bool stabs_pairwise_disjoint(const std::vector<std::pair<int, Range>>& stabs,
                             std::string* detail = nullptr);

/// Per-envelope color audit for a half-plane transcript: every query routed
/// to an envelope realizes a position interval there; first-stab intervals of
/// equal color must be pairwise disjoint per envelope.
bool audit_halfplane_colors(const HalfPlaneInstance& inst,
                            const Transcript<HalfPlaneQuery>& t, std::string* detail = nullptr);

/// Per-(tile, type) color audit for a disc transcript, using the engine's
/// stab log: position intervals of equal color must be pairwise disjoint.
bool audit_disc_colors(const DiscInstance& inst, const Transcript<DiscQuery>& t,
                       const std::vector<std::vector<DiscStabRecord>>& stab_log,
                       std::string* detail = nullptr);

/// Same-type discs through a common point of one tile, both unstabbed on
/// arrival, must stab with distinct colors.
bool audit_disc_distinct_colors(const DiscInstance& inst, const Transcript<DiscQuery>& t,
                                const std::vector<std::vector<DiscStabRecord>>& stab_log,
                                std::string* detail = nullptr);

/// For every point of an optimum of the presented ranges, replays the
/// subsequence of discs covering it through a fresh engine and checks the
/// local bound |adds| <= 64*floor(log2(2n)).
bool disc_local_bound_ok(const DiscInstance& inst, const std::vector<DiscQuery>& queries,
                         std::string* detail = nullptr);

// ---------------------------------------------------------------------------
// Instance generators and sweeps
// ---------------------------------------------------------------------------

/// All hypergraphs over [0, n) whose range family is closed under union of
/// intersecting ranges, one representative per point-relabeling class.
/// Exhaustive; n <= 4.
std::vector<Hypergraph> enumerate_itype_hypergraphs(int n);

/// Random range family closed under union of intersecting ranges (closure is
/// taken after sampling). Deterministic in the seed; n <= 10.
Hypergraph random_itype_hypergraph(unsigned long long seed, int n);

/// One representative per isomorphism class of connected graphs on n
/// vertices (n <= 5).
std::vector<Graph> connected_graph_representatives(int n);

struct SandwichResult {
  int instances = 0;
  int separable = 0;
  bool ok = true;
  std::string detail;
};

/// Over every enumerated family with ground sets 1..max_n, checks
/// chromatic-1 <= game value <= chromatic, with equality when separable.
SandwichResult theorem_sandwich_sweep(int max_n, ExecMode mode = ExecMode::serial);

/// Exhaustively checks that the chord through parabola points i and j
/// realizes exactly the index interval [i, j], for all pairs.
bool parabola_embedding_check(int n, ExecMode mode = ExecMode::serial,
                              std::string* detail = nullptr);

/// Deterministic random test cases for the geometric algorithms.
struct HalfPlaneCase {
  HalfPlaneInstance instance;
  std::vector<HalfPlaneQuery> queries;
};
HalfPlaneCase random_halfplane_case(unsigned long long seed, int max_n, int max_queries);

struct DiscCase {
  DiscInstance instance;
  std::vector<DiscQuery> queries;
};
DiscCase random_disc_case(unsigned long long seed, int max_n, int max_queries);

}  // namespace hitsets
