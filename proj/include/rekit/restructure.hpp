#pragma once

// Restructuring: move an initial solution S1 toward a goal S2 with a bounded
// change cost, min rho(S*, S2) s.t. H(S1 -> S*) <= h.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "rekit/rational.hpp"

namespace rekit {

enum class Proximity { element_difference, objective_gap };

/// Subset solutions over items 0..n-1. Toggling item e (insert or delete)
/// costs move_cost[e].
struct SubsetRestructure {
  std::vector<bool> initial;
  std::vector<bool> goal;
  std::vector<Rational> move_cost;
  /// nullopt means unlimited.
  std::optional<Rational> budget;
  Proximity proximity = Proximity::element_difference;
  /// Additive objective f(S) = sum of value[e] over members, for objective-gap.
  std::vector<Rational> value;
  /// Feasibility of a candidate; an empty function accepts everything.
  std::function<bool(const std::vector<bool>&)> feasible;
};

/// Knapsack-style feasibility: sum of weight over members <= capacity.
std::function<bool(const std::vector<bool>&)> knapsack_constraint(std::vector<Rational> weight, Rational capacity);

struct SubsetResult {
  std::vector<bool> solution;
  Rational change_cost{0};
  Rational proximity{0};
};

/// Exhaustive over the budgeted neighbourhood of S1. Ties on proximity go to
/// the lower change cost, then to the lexicographically smaller indicator
/// vector (false < true).
SubsetResult restructure_subset(const SubsetRestructure& p);

struct ChoiceItem {
  Rational cost{0};
  Rational profit{0};
};

/// One-per-group solutions; re-picking group g costs switch_cost[g].
struct ChoiceRestructure {
  std::vector<std::vector<ChoiceItem>> groups;
  std::vector<std::size_t> initial;
  std::vector<std::size_t> goal;
  std::vector<Rational> switch_cost;
  std::optional<Rational> budget;
  Proximity proximity = Proximity::element_difference;
  /// Optional cap on summed item cost (multiple-choice knapsack feasibility).
  std::optional<Rational> capacity;
};

struct ChoiceResult {
  std::vector<std::size_t> solution;
  Rational change_cost{0};
  Rational proximity{0};
};

ChoiceResult restructure_mckp(const ChoiceRestructure& p);

}  // namespace rekit
