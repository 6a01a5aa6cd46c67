#include "rekit/synthesis.hpp"

#include <algorithm>

#include "rekit/error.hpp"

namespace rekit {

std::string subject_of(const Bottleneck& b) {
  if (b.kind == BottleneckKind::element) return b.first;
  return "(" + b.first + "," + b.second + ")";
}

std::string to_string(const Bottleneck& b) {
  return subject_of(b) + ": " + std::to_string(b.current) + "=>" + std::to_string(b.proposed);
}

QualityVector evaluate(const MorphStructure& ms, const Composition& c) {
  validate_composition(ms, c);
  QualityVector q;
  q.w = ms.scales().compat_levels;
  q.n.assign(static_cast<std::size_t>(ms.scales().priority_levels), 0);
  const auto m = c.picks.size();
  for (std::size_t i = 0; i < m; ++i) {
    AltRef a{i, c.picks[i]};
    ++q.n[static_cast<std::size_t>(ms.alternative(a).priority - 1)];
    for (std::size_t j = i + 1; j < m; ++j) {
      AltRef b{j, c.picks[j]};
      int w = ms.compatibility(a, b);
      if (w == 0) {
        throw Error(ErrorKind::infeasible, "incompatible pair (" + ms.alternative(a).id + "," +
                                               ms.alternative(b).id + ") in " + format_composition(ms, c));
      }
      q.w = std::min(q.w, w);
    }
  }
  return q;
}

namespace {

// Depth-first enumeration in lexicographic pick order; `min_w` carries the
// running minimum so incompatible prefixes are cut immediately.
void enumerate(const MorphStructure& ms, std::vector<std::size_t>& picks, std::size_t depth, int min_w,
               std::vector<ScoredComposition>& out) {
  const auto m = ms.component_count();
  if (depth == m) {
    QualityVector q;
    q.w = min_w;
    q.n.assign(static_cast<std::size_t>(ms.scales().priority_levels), 0);
    for (std::size_t i = 0; i < m; ++i) ++q.n[static_cast<std::size_t>(ms.alternative({i, picks[i]}).priority - 1)];
    out.push_back({Composition{picks}, std::move(q)});
    return;
  }
  const auto& alts = ms.components()[depth].alternatives;
  for (std::size_t a = 0; a < alts.size(); ++a) {
    int w = min_w;
    bool ok = true;
    for (std::size_t i = 0; i < depth && ok; ++i) {
      int pair = ms.compatibility({i, picks[i]}, {depth, a});
      ok = pair > 0;
      w = std::min(w, pair);
    }
    if (!ok) continue;
    picks[depth] = a;
    enumerate(ms, picks, depth + 1, w, out);
  }
}

}  // namespace

SynthesisResult pareto_synthesize(const MorphStructure& ms) {
  std::vector<ScoredComposition> feasible;
  std::vector<std::size_t> picks(ms.component_count(), 0);
  enumerate(ms, picks, 0, ms.scales().compat_levels, feasible);

  SynthesisResult result;
  result.feasible_count = feasible.size();
  result.infeasible = feasible.empty();
  for (const auto& cand : feasible) {
    bool dominated = std::any_of(feasible.begin(), feasible.end(), [&](const ScoredComposition& other) {
      return compare_quality(other.quality, cand.quality) == Verdict::dominates;
    });
    if (!dominated) result.frontier.push_back(cand);
  }
  return result;
}

std::vector<Bottleneck> detect_bottlenecks(const MorphStructure& ms, const Composition& c) {
  validate_composition(ms, c);
  std::vector<Bottleneck> out;
  const auto m = c.picks.size();
  for (std::size_t i = 0; i < m; ++i) {
    const auto& alt = ms.alternative({i, c.picks[i]});
    for (int r = alt.priority - 1; r >= 1; --r) {
      out.push_back({BottleneckKind::element, alt.id, {}, alt.priority, r});
    }
  }
  const int l = ms.scales().compat_levels;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      AltRef a{i, c.picks[i]};
      AltRef b{j, c.picks[j]};
      int w = ms.compatibility(a, b);
      for (int up = w + 1; up <= l; ++up) {
        out.push_back({BottleneckKind::pair, ms.alternative(a).id, ms.alternative(b).id, w, up});
      }
    }
  }
  return out;
}

ActionCatalog::Key ActionCatalog::normalized(BottleneckKind kind, std::string first, std::string second,
                                             int proposed) {
  if (kind == BottleneckKind::pair && second < first) std::swap(first, second);
  return Key{kind, std::move(first), std::move(second), proposed};
}

void ActionCatalog::add(BottleneckKind kind, std::string first, std::string second, int proposed, ActionCost cost) {
  if (cost.cost < 0) throw Error(ErrorKind::invalid_input, "negative action cost");
  entries_[normalized(kind, std::move(first), std::move(second), proposed)] = cost;
}

const ActionCost* ActionCatalog::find(const Bottleneck& b) const {
  auto it = entries_.find(normalized(b.kind, b.first, b.second, b.proposed));
  return it == entries_.end() ? nullptr : &it->second;
}

MckpInstance generate_actions(const std::vector<Bottleneck>& bottlenecks, const ActionCatalog& catalog,
                              Rational budget) {
  MckpInstance inst;
  inst.budget = budget;
  for (const auto& b : bottlenecks) {
    const auto* priced = catalog.find(b);
    if (priced == nullptr) {
      throw Error(ErrorKind::incomplete_catalog, "no cost/profit for improvement " + to_string(b));
    }
    const auto subject = subject_of(b);
    auto group = std::find_if(inst.groups.begin(), inst.groups.end(),
                              [&](const MckpGroup& g) { return g.id == subject; });
    if (group == inst.groups.end()) {
      inst.groups.push_back({subject, {MckpItem{subject + ":None", 0, 0, {}, std::nullopt}}});
      group = std::prev(inst.groups.end());
    }
    group->items.push_back(MckpItem{subject + ":" + std::to_string(b.current) + "=>" + std::to_string(b.proposed),
                                    priced->cost, priced->profit, {}, b});
  }
  return inst;
}

}  // namespace rekit
