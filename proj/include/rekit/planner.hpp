#pragma once

// Multiple-choice knapsack: exactly one item per group, total cost within a
// budget, maximal profit. Greedy and exact solvers, a multicriteria variant,
// and application of chosen improvement actions to a composition.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rekit/bottleneck.hpp"
#include "rekit/model.hpp"
#include "rekit/rational.hpp"

namespace rekit {

struct MckpItem {
  std::string id;
  Rational cost{0};
  Rational profit{0};
  /// Per-criterion profits for the multicriteria solver; empty otherwise.
  std::vector<Rational> criteria;
  /// Set for items produced by generate_actions.
  std::optional<Bottleneck> action;
};

struct MckpGroup {
  std::string id;
  std::vector<MckpItem> items;
};

enum class Sense { max, min };

struct MckpInstance {
  std::vector<MckpGroup> groups;
  Rational budget{0};
  /// Costs and budget are integer multiples of this unit for the exact solver.
  Rational granularity{1, 10};
  /// Orientation of each criterion when items carry criteria vectors.
  std::vector<Sense> senses;

  void validate() const;
};

struct Selection {
  std::vector<std::size_t> chosen;  // item index per group
  Rational total_cost{0};
  Rational total_profit{0};

  friend bool operator==(const Selection&, const Selection&) = default;
};

Selection make_selection(const MckpInstance& inst, std::vector<std::size_t> chosen);

Selection mckp_greedy(const MckpInstance& inst);

/// Exact optimum by dynamic programming over the integer-scaled budget. Among
/// optimal selections the lexicographically smallest index vector is returned.
Selection mckp_exact(const MckpInstance& inst);

struct WeightedMode {
  std::vector<Rational> weights;
};
struct ParetoMode {
  std::size_t max_selections = 100000;
};

/// weights . criteria with min-sense criteria negated.
Rational scalarize(const MckpInstance& inst, const MckpItem& item, const std::vector<Rational>& weights);

Selection mckp_weighted(const MckpInstance& inst, const WeightedMode& mode);

/// All budget-feasible selections whose summed criteria vectors are not
/// dominated by another feasible selection, in lexicographic order.
std::vector<Selection> mckp_pareto(const MckpInstance& inst, const ParetoMode& mode = {});

/// Summed criteria vector of a selection.
std::vector<Rational> criteria_totals(const MckpInstance& inst, const Selection& s);

/// "<D1_4 * D2_3 * ...>".
std::string format_plan(const MckpInstance& inst, const Selection& s);

struct AppliedActions {
  MorphStructure structure;
  QualityVector quality;
};

/// Rewrites every priority or compatibility level named by a chosen action
/// item and re-evaluates the composition on the rewritten structure.
AppliedActions apply_actions(const MorphStructure& ms, const Composition& c, const MckpInstance& inst,
                             const Selection& s);

}  // namespace rekit
