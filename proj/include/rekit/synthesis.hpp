#pragma once

#include <map>
#include <vector>

#include "rekit/bottleneck.hpp"
#include "rekit/model.hpp"
#include "rekit/planner.hpp"
#include "rekit/rational.hpp"

namespace rekit {

struct ScoredComposition {
  Composition composition;
  QualityVector quality;
};

/// w = minimum pairwise compatibility (l for a single component), n_r = number
/// of picks with priority r. Throws infeasible when some pair has w = 0.
QualityVector evaluate(const MorphStructure& ms, const Composition& c);

struct SynthesisResult {
  std::vector<ScoredComposition> frontier;  // lexicographic by picks
  std::size_t feasible_count = 0;
  bool infeasible = false;
};

/// Exhaustive enumeration with pruning on incompatible pairs, followed by
/// Pareto filtering under compare_quality.
SynthesisResult pareto_synthesize(const MorphStructure& ms);

/// One entry per (subject, better level): every pick with r > 1 proposes each
/// level r-1..1, every pair with w < l proposes each level w+1..l.
std::vector<Bottleneck> detect_bottlenecks(const MorphStructure& ms, const Composition& c);

struct ActionCost {
  Rational cost{0};
  Rational profit{0};
};

/// Keyed by the bottleneck with `current` ignored: lookups use the subject
/// and the proposed level only.
class ActionCatalog {
 public:
  void add(BottleneckKind kind, std::string first, std::string second, int proposed, ActionCost cost);
  [[nodiscard]] const ActionCost* find(const Bottleneck& b) const;

 private:
  struct Key {
    BottleneckKind kind;
    std::string first;
    std::string second;
    int proposed;
    friend auto operator<=>(const Key&, const Key&) = default;
  };
  static Key normalized(BottleneckKind kind, std::string first, std::string second, int proposed);
  std::map<Key, ActionCost> entries_;
};

/// One group per distinct subject (first-appearance order), each starting
/// with a zero-cost "None" item followed by one item per proposal.
MckpInstance generate_actions(const std::vector<Bottleneck>& bottlenecks, const ActionCatalog& catalog,
                              Rational budget = Rational(0));

}  // namespace rekit
