#pragma once

// Budgeted vertex recoloring toward a goal configuration, keeping the
// coloring proper.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "rekit/rational.hpp"

namespace rekit {

struct Graph {
  std::size_t vertex_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// Color index per vertex.
using Coloring = std::vector<std::size_t>;

/// k x k transition cost matrix, row = from color, column = to color.
using CostMatrix = std::vector<std::vector<Rational>>;

struct RecolorInstance {
  Graph graph;
  std::size_t colors = 0;
  Coloring initial;
  Coloring goal;
  /// One matrix per vertex.
  std::vector<CostMatrix> cost;
  /// nullopt means unlimited.
  std::optional<Rational> budget;

  void validate() const;
};

/// Unit off-diagonal costs for every vertex.
std::vector<CostMatrix> unit_costs(std::size_t vertices, std::size_t colors);

bool is_proper(const Graph& g, const Coloring& c);

/// Sum over vertices of d_v(initial(v), c(v)).
Rational recolor_cost(const RecolorInstance& inst, const Coloring& c);

/// Vertices whose color differs from the goal.
std::size_t goal_distance(const RecolorInstance& inst, const Coloring& c);

struct RecolorResult {
  Coloring coloring;
  std::size_t distance = 0;
  Rational cost{0};
  /// False when the local-search fallback was used.
  bool exact = true;
};

/// Largest graph solved by branch-and-bound; above it a steepest-descent
/// local search from the initial coloring is used and the result may be
/// suboptimal.
inline constexpr std::size_t kExactRecolorLimit = 16;

/// Minimizes the Hamming distance to the goal among proper colorings within
/// the budget; ties go to lower cost, then to the lexicographically smaller
/// coloring.
RecolorResult recolor_optimize(const RecolorInstance& inst);

}  // namespace rekit
