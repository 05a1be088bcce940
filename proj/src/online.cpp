#include "hitsets/online.hpp"

#include <string>

#include "hitsets/errors.hpp"

namespace hitsets {

AlgCState make_algc_state(Coloring coloring) {
  return AlgCState{std::move(coloring), HittingSet{}, {}};
}

std::optional<PointId> algc_step(AlgCState& state, const Range& r) {
  if (r.empty()) throw InputError("algc_step: empty range");
  for (PointId p : r)
    if (p < 0 || p >= state.coloring.size())
      throw InputError("algc_step: range point " + std::to_string(p) + " outside the coloring");
  if (state.hitting_set.stabs(r)) return std::nullopt;
  PointId best = r.front();
  bool tied = false;
  for (size_t i = 1; i < r.size(); ++i) {
    PointId p = r[i];
    if (state.coloring[p] > state.coloring[best]) {
      best = p;
      tied = false;
    } else if (state.coloring[p] == state.coloring[best]) {
      tied = true;
    }
  }
  if (tied)
    throw InvariantViolation(
        "algc_step: two points of the range tie for maximum color " +
        std::to_string(state.coloring[best]) +
        "; the coloring is not unique-max for this range family");
  state.hitting_set.insert(best);
  state.per_color_counts[state.coloring[best]] += 1;
  return best;
}

AlgC::AlgC(Coloring coloring)
    : initial_(coloring), state_(make_algc_state(std::move(coloring))) {}

void AlgC::reset() { state_ = make_algc_state(initial_); }

StepOutcome AlgC::feed(const Range& r) {
  auto point = algc_step(state_, r);
  StepOutcome out;
  out.was_stabbed = !point.has_value();
  if (point) out.added.push_back(*point);
  return out;
}

void LeftmostAlg::reset() { chosen_ = HittingSet{}; }

StepOutcome LeftmostAlg::feed(const Range& r) {
  if (r.empty()) throw InputError("leftmost: empty range");
  StepOutcome out;
  if (chosen_.stabs(r)) {
    out.was_stabbed = true;
    return out;
  }
  chosen_.insert(r.front());
  out.added.push_back(r.front());
  return out;
}

}  // namespace hitsets
