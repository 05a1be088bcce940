#include "hitsets/arena.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <unordered_map>

namespace hitsets {

// ---------------------------------------------------------------------------
// Engines
// ---------------------------------------------------------------------------

TranscriptEvent<Range> HypergraphEngine::step(const Range& r) {
  StepOutcome o = alg_->feed(r);
  return TranscriptEvent<Range>{r, r, o.was_stabbed, o.added, alg_->hitting_set().size()};
}

TranscriptEvent<HalfPlaneQuery> HalfPlaneEngine::step(const HalfPlaneQuery& q) {
  TranscriptEvent<HalfPlaneQuery> ev;
  ev.query = q;
  ev.range = halfplane_range(*state_.instance, q);
  std::optional<PointId> pt = algp_step(state_, q);
  ev.was_stabbed = !pt.has_value();
  if (pt) ev.added.push_back(*pt);
  ev.size_after = state_.chosen.size();
  return ev;
}

TranscriptEvent<DiscQuery> DiscEngine::step(const DiscQuery& q) {
  TranscriptEvent<DiscQuery> ev;
  ev.query = q;
  ev.range = disc_range(*state_.instance, q);
  DiscStepOutcome o = algd_step(state_, q);
  ev.was_stabbed = o.was_stabbed;
  ev.added = o.added;
  ev.size_after = state_.chosen.size();
  stab_log_.push_back(std::move(o.stabs));
  return ev;
}

// ---------------------------------------------------------------------------
// Adversaries
// ---------------------------------------------------------------------------

NestedIntervalAdversary::NestedIntervalAdversary(int n) : n_(n) {
  if (n < 1) throw InputError("nested-interval adversary needs n >= 1");
}

std::optional<Range> NestedIntervalAdversary::next(const HittingSet& chosen) {
  if (!started_) {
    started_ = true;
    lo_ = 0;
    hi_ = n_ - 1;
    ++events_;
    return make_interval(lo_, hi_);
  }
  int best_lo = -1, best_len = 0, run_lo = -1;
  bool any_chosen = false;
  for (int k = lo_; k <= hi_ + 1; ++k) {
    bool free_pt = k <= hi_ && !chosen.contains(k);
    if (free_pt) {
      if (run_lo < 0) run_lo = k;
    } else {
      if (k <= hi_) any_chosen = true;
      if (run_lo >= 0) {
        int len = k - run_lo;
        if (len > best_len) {
          best_len = len;
          best_lo = run_lo;
        }
        run_lo = -1;
      }
    }
  }
  if (!any_chosen)
    throw InvariantViolation("the algorithm failed to stab the presented interval");
  if (best_len == 0) return std::nullopt;
  lo_ = best_lo;
  hi_ = best_lo + best_len - 1;
  ++events_;
  return make_interval(lo_, hi_);
}

HalfPlaneInstance make_parabola_instance(int n) {
  if (n < 1) throw InputError("parabola instance needs n >= 1");
  std::vector<RatPoint> pts;
  pts.reserve(static_cast<size_t>(n));
  for (long long i = 0; i < n; ++i) pts.push_back(RatPoint{Rational(i), Rational(i * i)});
  return HalfPlaneInstance::make(std::move(pts));
}

std::optional<HalfPlaneQuery> ParabolaAdversary::next(const HittingSet& chosen) {
  std::optional<Range> r = inner_.next(chosen);
  if (!r) return std::nullopt;
  long long i = r->front();
  long long j = r->back();
  // Chord through (i, i^2) and (j, j^2): y = (i+j)x - ij; for i = j this is
  // the tangent, whose closed lower side contains only point i.
  return HalfPlaneQuery{Rational(-(i + j)), Rational(1), Rational(-(i * j)), Side::below};
}

CollinearDiscFamily make_collinear_family(int n) {
  if (n < 1) throw InputError("collinear family needs n >= 1");
  if (n > (1 << 14)) throw InputError("collinear family: n too large for the exact gap margin");
  CollinearDiscFamily fam;
  fam.n = n;
  fam.points.reserve(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k)
    fam.points.push_back(RatPoint{Rational(1, 8) + Rational(k + 1, 8LL * n), Rational(1, 4)});
  return fam;
}

DiscQuery CollinearDiscFamily::disc_for(int i, int j) const {
  if (i < 0 || j >= n || i > j) throw InputError("disc_for: interval out of range");
  const Rational& xi = points[static_cast<size_t>(i)].x;
  const Rational& xj = points[static_cast<size_t>(j)].x;
  Rational mx = (xi + xj) / 2;
  Rational w = (xj - xi) / 2;
  // Largest h with denominator 2^40 such that h^2 <= 1 - w^2. The shortfall
  // below 1 - w^2 is under 2^-38, far smaller than the squared-distance gap
  // to the nearest excluded point, so the disc centered h below the line
  // covers exactly the points of [i, j].
  Rational target = (1 - w * w) * Rational(BigInt(1) << 80);
  BigInt f = boost::multiprecision::numerator(target) / boost::multiprecision::denominator(target);
  BigInt a = boost::multiprecision::sqrt(f);
  Rational h(a, BigInt(1) << 40);
  DiscQuery d{RatPoint{mx, points[static_cast<size_t>(i)].y - h}};
  for (int k = 0; k < n; ++k) {
    bool inside = sqdist(points[static_cast<size_t>(k)], d.center) <= 1;
    if (inside != (k >= i && k <= j))
      throw InvariantViolation("collinear family: disc covers the wrong point set");
  }
  return d;
}

std::optional<DiscQuery> CollinearDiscAdversary::next(const HittingSet& chosen) {
  std::optional<Range> r = inner_.next(chosen);
  if (!r) return std::nullopt;
  return family_->disc_for(r->front(), r->back());
}

// ---------------------------------------------------------------------------
// Exact minimum hitting set
// ---------------------------------------------------------------------------

namespace {

using Blocks = std::vector<uint64_t>;

bool blocks_subset(const Blocks& inner, const Blocks& outer) {
  for (size_t w = 0; w < inner.size(); ++w)
    if (inner[w] & ~outer[w]) return false;
  return true;
}

int blocks_popcount(const Blocks& a) {
  int c = 0;
  for (uint64_t w : a) c += std::popcount(w);
  return c;
}

bool blocks_test(const Blocks& a, int p) { return a[static_cast<size_t>(p >> 6)] >> (p & 63) & 1; }

struct HitSearch {
  const std::vector<Blocks>* ranges = nullptr;
  int n = 0;
  long long nodes = 0;
  long long budget = 1LL << 21;
  int best = INT_MAX;
  std::vector<int> best_set;

  int packing_lb(const std::vector<int>& uncovered, const Blocks& allowed) const {
    std::vector<std::pair<int, int>> order;
    order.reserve(uncovered.size());
    for (int idx : uncovered) {
      const Blocks& r = (*ranges)[static_cast<size_t>(idx)];
      int cnt = 0;
      for (size_t w = 0; w < r.size(); ++w) cnt += std::popcount(r[w] & allowed[w]);
      order.push_back({cnt, idx});
    }
    std::sort(order.begin(), order.end());
    Blocks used(allowed.size(), 0);
    int lb = 0;
    for (auto [cnt, idx] : order) {
      const Blocks& r = (*ranges)[static_cast<size_t>(idx)];
      bool disjoint = true;
      for (size_t w = 0; w < r.size() && disjoint; ++w)
        if (r[w] & used[w]) disjoint = false;
      if (!disjoint) continue;
      ++lb;
      for (size_t w = 0; w < r.size(); ++w) used[w] |= r[w];
    }
    return lb;
  }

  void dfs(std::vector<int>& chosen, const std::vector<int>& uncovered, const Blocks& allowed) {
    if (++nodes > budget) throw InputError("opt_hitting_set: branch budget exceeded");
    if (uncovered.empty()) {
      if (static_cast<int>(chosen.size()) < best) {
        best = static_cast<int>(chosen.size());
        best_set = chosen;
      }
      return;
    }
    if (static_cast<int>(chosen.size()) + packing_lb(uncovered, allowed) >= best) return;
    int pick = -1, pick_cnt = INT_MAX;
    for (int idx : uncovered) {
      const Blocks& r = (*ranges)[static_cast<size_t>(idx)];
      int cnt = 0;
      for (size_t w = 0; w < r.size(); ++w) cnt += std::popcount(r[w] & allowed[w]);
      if (cnt < pick_cnt) {
        pick_cnt = cnt;
        pick = idx;
      }
    }
    if (pick_cnt == 0) return;
    const Blocks& r = (*ranges)[static_cast<size_t>(pick)];
    for (int p = 0; p < n; ++p) {
      if (!blocks_test(r, p) || !blocks_test(allowed, p)) continue;
      std::vector<int> rest;
      rest.reserve(uncovered.size());
      for (int idx : uncovered)
        if (!blocks_test((*ranges)[static_cast<size_t>(idx)], p)) rest.push_back(idx);
      chosen.push_back(p);
      dfs(chosen, rest, allowed);
      chosen.pop_back();
    }
  }

  /// Minimum hitting set size over the given range indices using only
  /// allowed points; INT_MAX when infeasible. Seeds the search with a
  /// greedy cover so pruning is effective from the start.
  int solve(const std::vector<int>& idxs, const Blocks& allowed) {
    best = INT_MAX;
    best_set.clear();
    // greedy upper bound
    {
      std::vector<int> uncovered = idxs;
      std::vector<int> greedy;
      while (!uncovered.empty()) {
        int bp = -1, bc = 0;
        for (int p = 0; p < n; ++p) {
          if (!blocks_test(allowed, p)) continue;
          int c = 0;
          for (int idx : uncovered)
            if (blocks_test((*ranges)[static_cast<size_t>(idx)], p)) ++c;
          if (c > bc) {
            bc = c;
            bp = p;
          }
        }
        if (bp < 0) break;  // some range has no allowed point
        greedy.push_back(bp);
        std::vector<int> rest;
        for (int idx : uncovered)
          if (!blocks_test((*ranges)[static_cast<size_t>(idx)], bp)) rest.push_back(idx);
        uncovered = std::move(rest);
      }
      if (uncovered.empty()) {
        best = static_cast<int>(greedy.size());
        best_set = greedy;
      }
    }
    if (best == INT_MAX && !idxs.empty()) {
      // infeasibility confirmed below only if a range truly has no allowed point
      for (int idx : idxs) {
        const Blocks& r = (*ranges)[static_cast<size_t>(idx)];
        int cnt = 0;
        for (size_t w = 0; w < r.size(); ++w) cnt += std::popcount(r[w] & allowed[w]);
        if (cnt == 0) return INT_MAX;
      }
    }
    std::vector<int> chosen;
    dfs(chosen, idxs, allowed);
    return best;
  }
};

}  // namespace

HittingSet opt_hitting_set(const std::vector<Range>& ranges_in, int n) {
  if (n < 0 || n > 1024) throw InputError("opt_hitting_set: ground set too large (n <= 1024)");
  if (ranges_in.size() > 4096) throw InputError("opt_hitting_set: too many ranges");
  const int words = std::max(1, (n + 63) / 64);

  std::vector<Blocks> rs;
  {
    std::set<Range> seen;
    for (const Range& r : ranges_in) {
      if (r.empty()) throw InputError("opt_hitting_set: an empty range cannot be hit");
      Blocks b(static_cast<size_t>(words), 0);
      for (PointId p : r) {
        if (p < 0 || p >= n) throw InputError("opt_hitting_set: point outside the ground set");
        b[static_cast<size_t>(p >> 6)] |= 1ull << (p & 63);
      }
      if (seen.insert(r).second) rs.push_back(std::move(b));
    }
  }
  if (rs.empty()) return HittingSet{};

  // Keep only inclusion-minimal ranges: hitting those hits everything.
  std::sort(rs.begin(), rs.end(), [](const Blocks& a, const Blocks& b) {
    int pa = blocks_popcount(a), pb = blocks_popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  std::vector<Blocks> minimal;
  for (const Blocks& r : rs) {
    bool dominated = false;
    for (const Blocks& k : minimal)
      if (blocks_subset(k, r)) {
        dominated = true;
        break;
      }
    if (!dominated) minimal.push_back(r);
  }
  if (minimal.size() > 64)
    throw InputError("opt_hitting_set: too many distinct minimal ranges (<= 64)");

  HitSearch search;
  search.ranges = &minimal;
  search.n = n;

  std::vector<int> all_idx(minimal.size());
  std::iota(all_idx.begin(), all_idx.end(), 0);
  Blocks full(static_cast<size_t>(words), 0);
  for (int p = 0; p < n; ++p) full[static_cast<size_t>(p >> 6)] |= 1ull << (p & 63);

  int k = search.solve(all_idx, full);
  if (k == INT_MAX) throw InvariantViolation("opt_hitting_set: nonempty ranges must be hittable");

  // Lexicographically least minimum: fix the smallest feasible element, then
  // recurse on the ranges it leaves uncovered with strictly larger points.
  HittingSet result;
  std::vector<int> remaining = all_idx;
  int need = k;
  int next_min = 0;
  while (need > 0) {
    bool advanced = false;
    for (int p = next_min; p < n && !advanced; ++p) {
      std::vector<int> rest;
      for (int idx : remaining)
        if (!blocks_test(minimal[static_cast<size_t>(idx)], p)) rest.push_back(idx);
      int rmin;
      if (rest.empty()) {
        rmin = 0;
      } else {
        Blocks gt(static_cast<size_t>(words), 0);
        for (int q = p + 1; q < n; ++q) gt[static_cast<size_t>(q >> 6)] |= 1ull << (q & 63);
        rmin = search.solve(rest, gt);
      }
      if (rmin == need - 1) {
        result.insert(p);
        remaining = std::move(rest);
        next_min = p + 1;
        --need;
        advanced = true;
      }
    }
    if (!advanced)
      throw InvariantViolation("opt_hitting_set: reconstruction failed to extend the prefix");
  }
  return result;
}

// ---------------------------------------------------------------------------
// Exact game value
// ---------------------------------------------------------------------------

namespace {

struct Frac {
  int num = 0;
  int den = 1;
};

bool frac_less(const Frac& a, const Frac& b) {
  return static_cast<long long>(a.num) * b.den < static_cast<long long>(b.num) * a.den;
}

Frac frac_max(const Frac& a, const Frac& b) { return frac_less(a, b) ? b : a; }

struct RhoSolver {
  int n = 0;
  int m = 0;
  std::vector<uint32_t> rmask;
  std::vector<uint32_t> subsets_by_size;
  std::unordered_map<uint32_t, int> opt_cache;
  std::unordered_map<uint64_t, Frac> memo;
  std::vector<std::vector<int>> aut_point;
  std::vector<std::vector<int>> aut_range;

  void find_automorphisms() {
    std::unordered_map<uint32_t, int> rindex;
    for (int ri = 0; ri < m; ++ri) rindex[rmask[static_cast<size_t>(ri)]] = ri;
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<int> rperm(static_cast<size_t>(m));
      bool ok = true;
      for (int ri = 0; ri < m && ok; ++ri) {
        uint32_t pm = 0;
        uint32_t bits = rmask[static_cast<size_t>(ri)];
        while (bits) {
          int b = std::countr_zero(bits);
          bits &= bits - 1;
          pm |= 1u << perm[static_cast<size_t>(b)];
        }
        auto it = rindex.find(pm);
        if (it == rindex.end())
          ok = false;
        else
          rperm[static_cast<size_t>(ri)] = it->second;
      }
      if (ok) {
        aut_point.push_back(perm);
        aut_range.push_back(rperm);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  uint64_t canonical(uint32_t c, uint32_t p) const {
    uint64_t best = ~0ull;
    for (size_t a = 0; a < aut_point.size(); ++a) {
      uint32_t pc = 0, pp = 0;
      uint32_t bits = c;
      while (bits) {
        int b = std::countr_zero(bits);
        bits &= bits - 1;
        pc |= 1u << aut_point[a][static_cast<size_t>(b)];
      }
      bits = p;
      while (bits) {
        int b = std::countr_zero(bits);
        bits &= bits - 1;
        pp |= 1u << aut_range[a][static_cast<size_t>(b)];
      }
      uint64_t key = pc | (static_cast<uint64_t>(pp) << 6);
      best = std::min(best, key);
    }
    return best;
  }

  int opt_of(uint32_t pmask) {
    auto it = opt_cache.find(pmask);
    if (it != opt_cache.end()) return it->second;
    int result = INT_MAX;
    for (uint32_t s : subsets_by_size) {
      bool hits = true;
      uint32_t bits = pmask;
      while (bits && hits) {
        int ri = std::countr_zero(bits);
        bits &= bits - 1;
        if (!(rmask[static_cast<size_t>(ri)] & s)) hits = false;
      }
      if (hits) {
        result = std::popcount(s);
        break;
      }
    }
    opt_cache.emplace(pmask, result);
    return result;
  }

  Frac solve(uint32_t c, uint32_t p) {
    uint64_t key = canonical(c, p);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Frac best{0, 1};  // the adversary may stop here
    for (int ri = 0; ri < m; ++ri) {
      uint32_t rm = rmask[static_cast<size_t>(ri)];
      if (rm & c) continue;  // stabbed ranges never help the adversary
      uint32_t p2 = p | (1u << ri);
      int opt = opt_of(p2);
      Frac worst{INT_MAX, 1};
      uint32_t pts = rm;
      while (pts) {
        int x = std::countr_zero(pts);
        pts &= pts - 1;
        uint32_t c2 = c | (1u << x);
        Frac now{std::popcount(c2), opt};
        Frac val = frac_max(now, solve(c2, p2));
        if (frac_less(val, worst)) worst = val;
      }
      best = frac_max(best, worst);
    }
    memo.emplace(key, best);
    return best;
  }
};

}  // namespace

Rational exact_rho(const Hypergraph& h) {
  if (h.n > 6) throw InputError("exact_rho: ground set too large (n <= 6)");
  if (h.ranges.size() > 32) throw InputError("exact_rho: too many ranges (<= 32)");
  RhoSolver solver;
  solver.n = h.n;
  solver.m = static_cast<int>(h.ranges.size());
  for (const Range& r : h.ranges) {
    uint32_t mask = 0;
    for (PointId x : r) mask |= 1u << x;
    solver.rmask.push_back(mask);
  }
  for (uint32_t s = 0; s < (1u << h.n); ++s) solver.subsets_by_size.push_back(s);
  std::sort(solver.subsets_by_size.begin(), solver.subsets_by_size.end(),
            [](uint32_t a, uint32_t b) {
              int pa = std::popcount(a), pb = std::popcount(b);
              return pa != pb ? pa < pb : a < b;
            });
  solver.find_automorphisms();
  Frac v = solver.solve(0, 0);
  Frac one{1, 1};
  Frac res = frac_max(one, v);
  return Rational(res.num, res.den);
}

// ---------------------------------------------------------------------------
// Ratio reports
// ---------------------------------------------------------------------------

RatioReport make_ratio_report(int alg_size, const std::vector<Range>& presented, int n) {
  RatioReport rep;
  rep.alg_size = alg_size;
  if (presented.empty()) {
    rep.opt_size = 0;
    rep.ratio = 1;  // empty transcript convention
    return rep;
  }
  rep.opt_size = opt_hitting_set(presented, n).size();
  rep.ratio = Rational(alg_size, rep.opt_size);
  return rep;
}

void attach_bound(RatioReport& rep, const std::string& name, int n, int tile_constant) {
  if (n < 1) throw InputError("attach_bound: n must be >= 1");
  BoundCheck bc;
  bc.name = name;
  bool lower_bound = false;
  if (name == "intervals-log") {
    bc.bound = floor_log2(n) + 1;
  } else if (name == "halfplane-2log") {
    bc.bound = 2 * (floor_log2(n) + 1);
  } else if (name == "disc-global") {
    bc.bound = Rational(tile_constant) * 4 * floor_log2(2LL * n);
  } else if (name == "lb-log") {
    bc.bound = floor_log2(n) + 1;
    lower_bound = true;
  } else {
    throw InputError("unknown bound name: " + name);
  }
  if (lower_bound) {
    bc.pass = Rational(rep.alg_size) >= bc.bound && rep.opt_size == 1;
  } else {
    // alg <= bound * opt; with nothing presented both sides are zero
    bc.pass = Rational(rep.alg_size) <= bc.bound * rep.opt_size;
  }
  rep.bound = bc;
}

// ---------------------------------------------------------------------------
// Audits
// ---------------------------------------------------------------------------

bool stabs_pairwise_disjoint(const std::vector<std::pair<int, Range>>& stabs,
                             std::string* detail) {
  std::map<int, std::vector<const Range*>> by_color;
  for (const auto& [color, r] : stabs) by_color[color].push_back(&r);
  for (const auto& [color, group] : by_color)
    for (size_t a = 0; a < group.size(); ++a)
      for (size_t b = a + 1; b < group.size(); ++b)
        if (ranges_intersect(*group[a], *group[b])) {
          if (detail)
            *detail = "two ranges first-stabbed by color " + std::to_string(color) +
                      " intersect";
          return false;
        }
  return true;
}

bool audit_halfplane_colors(const HalfPlaneInstance& inst, const Transcript<HalfPlaneQuery>& t,
                            std::string* detail) {
  std::vector<std::pair<int, Range>> lower, upper;
  for (const auto& ev : t.events) {
    if (ev.was_stabbed) continue;
    std::optional<std::pair<int, int>> iv = halfplane_to_interval(inst, ev.query);
    if (!iv) {
      if (detail) *detail = "unstabbed arrival realized no envelope interval";
      return false;
    }
    bool low = ev.query.side == Side::below;
    const std::vector<PointId>& extreme = low ? inst.lower_extreme : inst.upper_extreme;
    const Coloring& ranking = low ? inst.lower_ranking : inst.upper_ranking;
    PointId added = ev.added.at(0);
    int pos = -1;
    for (int k = iv->first; k <= iv->second; ++k)
      if (extreme[static_cast<size_t>(k)] == added) {
        pos = k;
        break;
      }
    if (pos < 0) {
      if (detail) *detail = "added point is not an extreme point of its interval";
      return false;
    }
    (low ? lower : upper).push_back({ranking[pos], make_interval(iv->first, iv->second)});
  }
  return stabs_pairwise_disjoint(lower, detail) && stabs_pairwise_disjoint(upper, detail);
}

namespace {

/// Positions (in angular order) of the extreme points of (tile, tau) covered
/// by the disc; verified contiguous.
std::pair<int, int> hit_positions(const DiscInstance& inst, const TileData& tile, int tau,
                                  const DiscQuery& q) {
  const TileTypeData& tt = tile.types[static_cast<size_t>(tau - 1)];
  int first = -1, last = -1, count = 0;
  for (size_t pos = 0; pos < tt.extreme.size(); ++pos)
    if (sqdist(inst.points[static_cast<size_t>(tt.extreme[pos])], q.center) <= 1) {
      if (first < 0) first = static_cast<int>(pos);
      last = static_cast<int>(pos);
      ++count;
    }
  if (count == 0 || count != last - first + 1)
    throw InvariantViolation("disc does not hit a nonempty contiguous angular stretch");
  return {first, last};
}

}  // namespace

bool audit_disc_colors(const DiscInstance& inst, const Transcript<DiscQuery>& t,
                       const std::vector<std::vector<DiscStabRecord>>& stab_log,
                       std::string* detail) {
  if (stab_log.size() != t.events.size())
    throw InputError("audit_disc_colors: stab log does not match the transcript");
  std::map<std::pair<TileKey, int>, std::vector<std::pair<int, Range>>> groups;
  for (size_t e = 0; e < t.events.size(); ++e) {
    for (const DiscStabRecord& rec : stab_log[e]) {
      const TileData& tile = inst.tiles.at(rec.tile);
      auto [first, last] = hit_positions(inst, tile, rec.tau, t.events[e].query);
      groups[{rec.tile, rec.tau}].push_back({rec.color, make_interval(first, last)});
    }
  }
  for (const auto& kv : groups)
    if (!stabs_pairwise_disjoint(kv.second, detail)) return false;
  return true;
}

bool audit_disc_distinct_colors(const DiscInstance& inst, const Transcript<DiscQuery>& t,
                                const std::vector<std::vector<DiscStabRecord>>& stab_log,
                                std::string* detail) {
  if (stab_log.size() != t.events.size())
    throw InputError("audit_disc_distinct_colors: stab log does not match the transcript");
  // Per (tile, type): the tile sites covered by each unstabbed arrival and
  // the color it stabbed with. Two arrivals sharing a site must differ.
  std::map<std::pair<TileKey, int>, std::vector<std::pair<Range, int>>> groups;
  for (size_t e = 0; e < t.events.size(); ++e) {
    for (const DiscStabRecord& rec : stab_log[e]) {
      const TileData& tile = inst.tiles.at(rec.tile);
      Range covered;
      for (PointId id : tile.sites)
        if (sqdist(inst.points[static_cast<size_t>(id)], t.events[e].query.center) <= 1)
          covered.push_back(id);
      groups[{rec.tile, rec.tau}].push_back({std::move(covered), rec.color});
    }
  }
  for (const auto& kv : groups) {
    const auto& entries = kv.second;
    for (size_t a = 0; a < entries.size(); ++a)
      for (size_t b = a + 1; b < entries.size(); ++b)
        if (entries[a].second == entries[b].second &&
            ranges_intersect(entries[a].first, entries[b].first)) {
          if (detail)
            *detail = "same-type discs through a common tile point stabbed with equal color " +
                      std::to_string(entries[a].second);
          return false;
        }
  }
  return true;
}

bool disc_local_bound_ok(const DiscInstance& inst, const std::vector<DiscQuery>& queries,
                         std::string* detail) {
  const int n = static_cast<int>(inst.points.size());
  if (n == 0) return true;
  std::vector<Range> realized;
  realized.reserve(queries.size());
  for (const DiscQuery& q : queries) realized.push_back(disc_range(inst, q));
  std::vector<Range> presented;
  for (const Range& r : realized)
    if (!r.empty()) presented.push_back(r);
  if (presented.empty()) return true;
  HittingSet opt = opt_hitting_set(presented, n);
  const long long cap = 64LL * floor_log2(2LL * n);
  for (PointId x : opt.points) {
    std::vector<DiscQuery> sub;
    for (size_t i = 0; i < queries.size(); ++i)
      if (range_contains(realized[i], x)) sub.push_back(queries[i]);
    DiscEngine engine(inst);
    FixedSource<DiscQuery> source(sub);
    Transcript<DiscQuery> t = run_game(engine, source);
    if (t.alg_size() > cap) {
      if (detail)
        *detail = "point " + std::to_string(x) + " charged " + std::to_string(t.alg_size()) +
                  " > " + std::to_string(cap);
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Generators and sweeps
// ---------------------------------------------------------------------------

std::vector<Hypergraph> enumerate_itype_hypergraphs(int n) {
  if (n < 1 || n > 4) throw InputError("enumerate_itype_hypergraphs: n must be in 1..4");
  const int full = (1 << n) - 1;
  std::vector<std::vector<int>> perms;
  {
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));
  }
  auto apply_perm = [](const std::vector<int>& perm, uint32_t mask) {
    uint32_t out = 0;
    while (mask) {
      int b = std::countr_zero(mask);
      mask &= mask - 1;
      out |= 1u << perm[static_cast<size_t>(b)];
    }
    return out;
  };
  std::set<std::vector<uint32_t>> seen;
  std::vector<Hypergraph> out;
  for (uint32_t family = 0; family < (1u << full); ++family) {
    std::vector<uint32_t> ms;
    for (int mask = 1; mask <= full; ++mask)
      if (family >> (mask - 1) & 1) ms.push_back(static_cast<uint32_t>(mask));
    bool itype = true;
    for (size_t a = 0; a < ms.size() && itype; ++a)
      for (size_t b = a + 1; b < ms.size() && itype; ++b)
        if ((ms[a] & ms[b]) && !(family >> ((ms[a] | ms[b]) - 1) & 1)) itype = false;
    if (!itype) continue;
    std::vector<uint32_t> canon;
    bool first = true;
    for (const auto& perm : perms) {
      std::vector<uint32_t> v;
      v.reserve(ms.size());
      for (uint32_t mask : ms) v.push_back(apply_perm(perm, mask));
      std::sort(v.begin(), v.end());
      if (first || v < canon) {
        canon = std::move(v);
        first = false;
      }
    }
    if (!seen.insert(canon).second) continue;
    std::vector<Range> ranges;
    for (uint32_t mask : ms) {
      Range r;
      uint32_t bits = mask;
      while (bits) {
        r.push_back(std::countr_zero(bits));
        bits &= bits - 1;
      }
      ranges.push_back(std::move(r));
    }
    out.push_back(Hypergraph::make(n, std::move(ranges)));
  }
  return out;
}

Hypergraph random_itype_hypergraph(unsigned long long seed, int n) {
  if (n < 1 || n > 10) throw InputError("random_itype_hypergraph: n must be in 1..10");
  std::mt19937_64 rng(seed);
  const uint32_t full = (1u << n) - 1;
  std::set<uint32_t> fam;
  int k = 1 + static_cast<int>(rng() % static_cast<unsigned long long>(2 * n));
  for (int t = 0; t < k; ++t) fam.insert(1 + static_cast<uint32_t>(rng() % full));
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<uint32_t> ms(fam.begin(), fam.end());
    for (size_t a = 0; a < ms.size(); ++a)
      for (size_t b = a + 1; b < ms.size(); ++b)
        if ((ms[a] & ms[b]) && fam.insert(ms[a] | ms[b]).second) changed = true;
  }
  std::vector<Range> ranges;
  for (uint32_t mask : fam) {
    Range r;
    uint32_t bits = mask;
    while (bits) {
      r.push_back(std::countr_zero(bits));
      bits &= bits - 1;
    }
    ranges.push_back(std::move(r));
  }
  return Hypergraph::make(n, std::move(ranges));
}

std::vector<Graph> connected_graph_representatives(int n) {
  if (n < 1 || n > 5) throw InputError("connected_graph_representatives: n must be in 1..5");
  std::vector<std::pair<int, int>> all_edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all_edges.push_back({u, v});
  const int ecount = static_cast<int>(all_edges.size());
  std::vector<std::vector<int>> eidx(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), -1));
  for (int e = 0; e < ecount; ++e) {
    eidx[static_cast<size_t>(all_edges[static_cast<size_t>(e)].first)]
        [static_cast<size_t>(all_edges[static_cast<size_t>(e)].second)] = e;
    eidx[static_cast<size_t>(all_edges[static_cast<size_t>(e)].second)]
        [static_cast<size_t>(all_edges[static_cast<size_t>(e)].first)] = e;
  }
  std::vector<std::vector<int>> perms;
  {
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));
  }
  std::set<uint32_t> seen;
  std::vector<Graph> out;
  for (uint32_t em = 0; em < (1u << ecount); ++em) {
    std::vector<std::pair<int, int>> edges;
    for (int e = 0; e < ecount; ++e)
      if (em >> e & 1) edges.push_back(all_edges[static_cast<size_t>(e)]);
    Graph g = Graph::make(n, edges);
    if (!g.is_connected()) continue;
    uint32_t canon = ~0u;
    for (const auto& perm : perms) {
      uint32_t pm = 0;
      for (const auto& [u, v] : edges)
        pm |= 1u << eidx[static_cast<size_t>(perm[static_cast<size_t>(u)])]
                        [static_cast<size_t>(perm[static_cast<size_t>(v)])];
      canon = std::min(canon, pm);
    }
    if (seen.insert(canon).second) out.push_back(std::move(g));
  }
  return out;
}

SandwichResult theorem_sandwich_sweep(int max_n, ExecMode mode) {
  if (max_n < 1 || max_n > 4) throw InputError("theorem_sandwich_sweep: max_n must be in 1..4");
  SandwichResult res;
  for (int n = 1; n <= max_n && res.ok; ++n) {
    std::vector<Hypergraph> hs = enumerate_itype_hypergraphs(n);
    std::vector<std::string> errs(hs.size());
    std::vector<char> sep(hs.size(), 0);
    for_each_index(hs.size(), mode, [&](size_t i) {
      const Hypergraph& h = hs[i];
      std::optional<UmChromaticResult> um = um_chromatic_exact(h, h.n + 1);
      if (!um) {
        errs[i] = "chromatic search exceeded its palette bound";
        return;
      }
      Rational rho = exact_rho(h);
      int chi = um->chromatic;
      bool s = is_separable(h);
      sep[i] = s ? 1 : 0;
      bool ok = Rational(chi - 1) <= rho && rho <= Rational(chi);
      if (s && rho != Rational(chi)) ok = false;
      if (!ok)
        errs[i] = "n=" + std::to_string(n) + " instance " + std::to_string(i) + ": chromatic " +
                  std::to_string(chi) + " vs game value " + format_rational(rho);
    });
    res.instances += static_cast<int>(hs.size());
    for (size_t i = 0; i < hs.size(); ++i) {
      if (sep[i]) ++res.separable;
      if (!errs[i].empty() && res.ok) {
        res.ok = false;
        res.detail = errs[i];
      }
    }
  }
  return res;
}

bool parabola_embedding_check(int n, ExecMode mode, std::string* detail) {
  if (n < 1 || n > 64) throw InputError("parabola_embedding_check: n must be in 1..64");
  HalfPlaneInstance inst = make_parabola_instance(n);
  std::vector<std::string> errs(static_cast<size_t>(n));
  for_each_index(static_cast<size_t>(n), mode, [&](size_t i) {
    for (long long j = static_cast<long long>(i); j < n; ++j) {
      long long ii = static_cast<long long>(i);
      HalfPlaneQuery q{Rational(-(ii + j)), Rational(1), Rational(-(ii * j)), Side::below};
      Range r = halfplane_range(inst, q);
      if (r != make_interval(static_cast<int>(ii), static_cast<int>(j))) {
        errs[i] = "chord through " + std::to_string(ii) + "," + std::to_string(j) +
                  " realizes the wrong range";
        return;
      }
    }
  });
  for (const std::string& e : errs)
    if (!e.empty()) {
      if (detail) *detail = e;
      return false;
    }
  return true;
}

HalfPlaneCase random_halfplane_case(unsigned long long seed, int max_n, int max_queries) {
  if (max_n < 2 || max_n > 512) throw InputError("random_halfplane_case: max_n must be in 2..512");
  if (max_queries < 1) throw InputError("random_halfplane_case: max_queries must be >= 1");
  std::mt19937_64 rng(seed);
  const int n = 2 + static_cast<int>(rng() % static_cast<unsigned long long>(max_n - 1));
  std::set<long long> xs;
  while (static_cast<int>(xs.size()) < n)
    xs.insert(static_cast<long long>(rng() % static_cast<unsigned long long>(4 * n)));
  std::vector<RatPoint> pts;
  for (long long xv : xs)
    pts.push_back(RatPoint{Rational(xv, 4),
                           Rational(static_cast<long long>(rng() % static_cast<unsigned long long>(8 * n)), 4)});
  HalfPlaneCase out{HalfPlaneInstance::make(std::move(pts)), {}};
  const int nq = 1 + static_cast<int>(rng() % static_cast<unsigned long long>(max_queries));
  for (int t = 0; t < nq; ++t) {
    Side side = (rng() & 1) ? Side::above : Side::below;
    if (rng() % 4 == 0) {
      // vertical line x = c
      Rational c(static_cast<long long>(rng() % static_cast<unsigned long long>(16 * n + 1)), 4);
      out.queries.push_back(HalfPlaneQuery{Rational(1), Rational(0), c, side});
    } else {
      Rational a(static_cast<long long>(rng() % 33) - 16, 4);
      const RatPoint& p = out.instance.points[rng() % out.instance.points.size()];
      Rational c = a * p.x + p.y + Rational(static_cast<long long>(rng() % 9) - 4, 8);
      out.queries.push_back(HalfPlaneQuery{a, Rational(1), c, side});
    }
  }
  return out;
}

DiscCase random_disc_case(unsigned long long seed, int max_n, int max_queries) {
  if (max_n < 1 || max_n > 256) throw InputError("random_disc_case: max_n must be in 1..256");
  if (max_queries < 1) throw InputError("random_disc_case: max_queries must be >= 1");
  std::mt19937_64 rng(seed);
  const int n = 1 + static_cast<int>(rng() % static_cast<unsigned long long>(max_n));
  std::optional<DiscInstance> inst;
  for (int attempt = 0; attempt < 64 && !inst; ++attempt) {
    std::set<std::pair<long long, long long>> grid;
    while (static_cast<int>(grid.size()) < n)
      grid.insert({static_cast<long long>(rng() % 32), static_cast<long long>(rng() % 32)});
    std::vector<RatPoint> pts;
    for (const auto& [gx, gy] : grid)
      pts.push_back(RatPoint{Rational(gx, 8), Rational(gy, 8)});
    try {
      inst = DiscInstance::make(std::move(pts));
    } catch (const InputError&) {
      // degenerate draw (boundary or collinear with a quadrant center); redraw
    }
  }
  if (!inst) throw InputError("random_disc_case: could not draw a nondegenerate instance");
  DiscCase out{std::move(*inst), {}};
  const int nq = 1 + static_cast<int>(rng() % static_cast<unsigned long long>(max_queries));
  for (int t = 0; t < nq; ++t) {
    Rational cx(static_cast<long long>(rng() % 97) - 16, 16);
    Rational cy(static_cast<long long>(rng() % 97) - 16, 16);
    out.queries.push_back(DiscQuery{RatPoint{cx, cy}});
  }
  return out;
}

}  // namespace hitsets
