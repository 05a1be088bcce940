#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hitsets/hypergraph.hpp"

namespace hitsets {

/// Result of presenting one range to an online algorithm.
struct StepOutcome {
  bool was_stabbed = false;     ///< the range was already hit on arrival
  std::vector<PointId> added;   ///< points selected by this step (empty iff was_stabbed)
};

/// A deterministic online hitting-set algorithm: a resettable black box fed
/// one range at a time whose hitting set only ever grows.
class OnlineAlgorithm {
 public:
  virtual ~OnlineAlgorithm() = default;
  virtual void reset() = 0;
  virtual StepOutcome feed(const Range& r) = 0;
  virtual const HittingSet& hitting_set() const = 0;
  virtual std::string name() const = 0;
};

/// State of the coloring-driven algorithm: stab every new range at its
/// unique maximum-color point.
struct AlgCState {
  Coloring coloring;
  HittingSet hitting_set;
  /// color -> number of ranges first stabbed by a point of that color
  std::map<int, int> per_color_counts;
};

AlgCState make_algc_state(Coloring coloring);

/// Presents r to the algorithm. Returns the chosen point, or nothing when r
/// was already stabbed. Throws InvariantViolation when two points of r tie
/// for the maximum color (the coloring is not unique-max for this family).
std::optional<PointId> algc_step(AlgCState& state, const Range& r);

/// OnlineAlgorithm adapter around AlgCState.
class AlgC final : public OnlineAlgorithm {
 public:
  explicit AlgC(Coloring coloring);
  void reset() override;
  StepOutcome feed(const Range& r) override;
  const HittingSet& hitting_set() const override { return state_.hitting_set; }
  std::string name() const override { return "algc"; }
  const AlgCState& state() const { return state_; }

 private:
  Coloring initial_;
  AlgCState state_;
};

/// Baseline that stabs every unstabbed range at its smallest point.
class LeftmostAlg final : public OnlineAlgorithm {
 public:
  void reset() override;
  StepOutcome feed(const Range& r) override;
  const HittingSet& hitting_set() const override { return chosen_; }
  std::string name() const override { return "leftmost"; }

 private:
  HittingSet chosen_;
};

}  // namespace hitsets
