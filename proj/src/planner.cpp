#include "rekit/planner.hpp"

#include <algorithm>
#include <numeric>

#include "rekit/error.hpp"
#include "rekit/synthesis.hpp"

namespace rekit {

namespace {

[[noreturn]] void invalid(const std::string& msg) { throw Error(ErrorKind::invalid_input, msg); }

std::int64_t lcm_of_denominators(const std::vector<Rational>& values) {
  std::int64_t l = 1;
  for (const auto& v : values) l = std::lcm(l, v.denominator());
  return l;
}

}  // namespace

void MckpInstance::validate() const {
  if (budget < 0) invalid("negative budget");
  if (granularity <= 0) invalid("granularity must be positive");
  for (const auto& g : groups) {
    if (g.items.empty()) invalid("group '" + g.id + "' has no items");
    for (const auto& item : g.items) {
      if (item.cost < 0) invalid("item '" + item.id + "' has negative cost");
      if (!senses.empty() && item.criteria.size() != senses.size()) {
        invalid("item '" + item.id + "' criteria length does not match senses");
      }
    }
  }
}

Selection make_selection(const MckpInstance& inst, std::vector<std::size_t> chosen) {
  if (chosen.size() != inst.groups.size()) invalid("selection must pick one item per group");
  Selection s;
  for (std::size_t g = 0; g < chosen.size(); ++g) {
    if (chosen[g] >= inst.groups[g].items.size()) invalid("selection index out of range");
    s.total_cost += inst.groups[g].items[chosen[g]].cost;
    s.total_profit += inst.groups[g].items[chosen[g]].profit;
  }
  s.chosen = std::move(chosen);
  return s;
}

Selection mckp_greedy(const MckpInstance& inst) {
  inst.validate();
  struct Entry {
    int tier;
    Rational ratio;
    Rational profit;
    std::size_t group;
    std::size_t item;
  };
  std::vector<Entry> order;
  for (std::size_t g = 0; g < inst.groups.size(); ++g) {
    for (std::size_t j = 0; j < inst.groups[g].items.size(); ++j) {
      const auto& it = inst.groups[g].items[j];
      const bool free = it.cost == 0;
      const bool gain = it.profit > 0;
      int tier = free && gain ? 0 : (!free && gain ? 1 : (free ? 2 : 3));
      Rational ratio = tier == 1 ? it.profit / it.cost : Rational(0);
      order.push_back({tier, ratio, it.profit, g, j});
    }
  }
  std::sort(order.begin(), order.end(), [](const Entry& a, const Entry& b) {
    if (a.tier != b.tier) return a.tier < b.tier;
    if (a.ratio != b.ratio) return a.ratio > b.ratio;
    if (a.profit != b.profit) return a.profit > b.profit;
    if (a.group != b.group) return a.group < b.group;
    return a.item < b.item;
  });

  const auto n = inst.groups.size();
  std::vector<std::size_t> chosen(n, 0);
  std::vector<bool> settled(n, false);
  Rational remaining = inst.budget;
  for (const auto& e : order) {
    if (settled[e.group]) continue;
    const auto& cost = inst.groups[e.group].items[e.item].cost;
    if (cost > remaining) continue;
    remaining -= cost;
    chosen[e.group] = e.item;
    settled[e.group] = true;
  }
  if (auto g = std::find(settled.begin(), settled.end(), false); g != settled.end()) {
    throw Error(ErrorKind::infeasible,
                "greedy could not fill group '" + inst.groups[static_cast<std::size_t>(g - settled.begin())].id + "'");
  }
  Selection sweep = make_selection(inst, std::move(chosen));

  // Best single-group upgrade over the zero-cost fallbacks.
  std::vector<std::size_t> base(n);
  Rational base_profit = 0;
  for (std::size_t g = 0; g < n; ++g) {
    const auto& items = inst.groups[g].items;
    std::optional<std::size_t> pick;
    for (std::size_t j = 0; j < items.size(); ++j) {
      if (items[j].cost == 0 && (!pick || items[j].profit > items[*pick].profit)) pick = j;
    }
    if (!pick) return sweep;
    base[g] = *pick;
    base_profit += items[*pick].profit;
  }
  std::optional<Selection> best_single;
  for (std::size_t g = 0; g < n; ++g) {
    const auto& items = inst.groups[g].items;
    for (std::size_t j = 0; j < items.size(); ++j) {
      if (items[j].cost > inst.budget) continue;
      Rational profit = base_profit - items[base[g]].profit + items[j].profit;
      if (!best_single || profit > best_single->total_profit) {
        auto picks = base;
        picks[g] = j;
        best_single = make_selection(inst, std::move(picks));
      }
    }
  }
  if (best_single && best_single->total_profit > sweep.total_profit) return *best_single;
  return sweep;
}

Selection mckp_exact(const MckpInstance& inst) {
  inst.validate();
  const auto n = inst.groups.size();
  std::vector<std::vector<std::int64_t>> units(n);
  std::int64_t cap = 0;
  for (std::size_t g = 0; g < n; ++g) {
    std::int64_t widest = 0;
    for (const auto& item : inst.groups[g].items) {
      units[g].push_back(scale_to_units(item.cost, inst.granularity));
      widest = std::max(widest, units[g].back());
    }
    cap += widest;
  }
  const std::int64_t budget = std::min(floor_units(inst.budget, inst.granularity), cap);
  const auto width = static_cast<std::size_t>(budget + 1);

  // best[g][c]: max profit of groups g..n-1 with cost <= c.
  std::vector<std::vector<std::optional<Rational>>> best(n + 1, std::vector<std::optional<Rational>>(width));
  std::fill(best[n].begin(), best[n].end(), Rational(0));
  for (std::size_t g = n; g-- > 0;) {
    const auto& items = inst.groups[g].items;
    for (std::size_t c = 0; c < width; ++c) {
      std::optional<Rational> top;
      for (std::size_t j = 0; j < items.size(); ++j) {
        auto u = static_cast<std::size_t>(units[g][j]);
        if (u > c || !best[g + 1][c - u]) continue;
        Rational v = items[j].profit + *best[g + 1][c - u];
        if (!top || v > *top) top = v;
      }
      best[g][c] = top;
    }
  }
  if (!best[0][width - 1]) throw Error(ErrorKind::infeasible, "no selection fits the budget");

  std::vector<std::size_t> chosen(n);
  std::size_t c = width - 1;
  for (std::size_t g = 0; g < n; ++g) {
    const auto& items = inst.groups[g].items;
    for (std::size_t j = 0; j < items.size(); ++j) {
      auto u = static_cast<std::size_t>(units[g][j]);
      if (u > c || !best[g + 1][c - u]) continue;
      if (items[j].profit + *best[g + 1][c - u] == *best[g][c]) {
        chosen[g] = j;
        c -= u;
        break;
      }
    }
  }
  return make_selection(inst, std::move(chosen));
}

Rational scalarize(const MckpInstance& inst, const MckpItem& item, const std::vector<Rational>& weights) {
  Rational v = 0;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    Rational term = weights[k] * item.criteria.at(k);
    v += inst.senses.at(k) == Sense::max ? term : -term;
  }
  return v;
}

namespace {

void require_criteria(const MckpInstance& inst) {
  if (inst.senses.empty()) invalid("multicriteria solve needs criteria senses");
  inst.validate();
}

}  // namespace

Selection mckp_weighted(const MckpInstance& inst, const WeightedMode& mode) {
  require_criteria(inst);
  if (mode.weights.size() != inst.senses.size()) {
    throw Error(ErrorKind::invalid_weights, "expected " + std::to_string(inst.senses.size()) + " weights, got " +
                                                std::to_string(mode.weights.size()));
  }
  MckpInstance scalar = inst;
  for (auto& g : scalar.groups) {
    for (auto& item : g.items) item.profit = scalarize(inst, item, mode.weights);
  }
  Selection s = mckp_exact(scalar);
  // report the original scalar profits
  return make_selection(inst, s.chosen);
}

std::vector<Rational> criteria_totals(const MckpInstance& inst, const Selection& s) {
  std::vector<Rational> totals(inst.senses.size(), Rational(0));
  for (std::size_t g = 0; g < s.chosen.size(); ++g) {
    const auto& item = inst.groups[g].items[s.chosen[g]];
    for (std::size_t k = 0; k < totals.size(); ++k) totals[k] += item.criteria.at(k);
  }
  return totals;
}

std::vector<Selection> mckp_pareto(const MckpInstance& inst, const ParetoMode& mode) {
  require_criteria(inst);
  const auto n = inst.groups.size();
  const auto dims = inst.senses.size();
  std::size_t total = 1;
  for (const auto& g : inst.groups) {
    if (total > mode.max_selections / g.items.size() + 1) {
      invalid("pareto mode limited to " + std::to_string(mode.max_selections) + " selections");
    }
    total *= g.items.size();
  }
  if (total > mode.max_selections) invalid("pareto mode limited to " + std::to_string(mode.max_selections) + " selections");

  // Oriented integer criteria: common denominator per criterion, min senses negated.
  std::vector<std::int64_t> scale(dims);
  for (std::size_t k = 0; k < dims; ++k) {
    std::vector<Rational> column;
    for (const auto& g : inst.groups)
      for (const auto& item : g.items) column.push_back(item.criteria[k]);
    scale[k] = lcm_of_denominators(column);
  }
  auto oriented = [&](const MckpItem& item, std::size_t k) {
    Rational v = item.criteria[k] * scale[k];
    return inst.senses[k] == Sense::max ? v.numerator() : -v.numerator();
  };

  struct Candidate {
    std::vector<std::int64_t> value;
    std::vector<std::size_t> picks;
  };
  std::vector<Candidate> cands;
  std::vector<std::size_t> picks(n, 0);
  for (std::size_t step = 0; step < total; ++step) {
    Rational cost = 0;
    for (std::size_t g = 0; g < n; ++g) cost += inst.groups[g].items[picks[g]].cost;
    if (cost <= inst.budget) {
      Candidate c{std::vector<std::int64_t>(dims, 0), picks};
      for (std::size_t g = 0; g < n; ++g)
        for (std::size_t k = 0; k < dims; ++k) c.value[k] += oriented(inst.groups[g].items[picks[g]], k);
      cands.push_back(std::move(c));
    }
    for (std::size_t g = n; g-- > 0;) {
      if (++picks[g] < inst.groups[g].items.size()) break;
      picks[g] = 0;
    }
  }

  // A dominator is lexicographically larger, so one pass in descending order
  // against the running front is enough.
  std::vector<std::size_t> order(cands.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return cands[a].value > cands[b].value; });
  auto dominates = [&](const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
    bool strict = false;
    for (std::size_t k = 0; k < dims; ++k) {
      if (a[k] < b[k]) return false;
      strict = strict || a[k] > b[k];
    }
    return strict;
  };
  std::vector<std::size_t> front;
  for (auto idx : order) {
    bool dominated = std::any_of(front.begin(), front.end(),
                                 [&](std::size_t f) { return dominates(cands[f].value, cands[idx].value); });
    if (!dominated) front.push_back(idx);
  }
  std::sort(front.begin(), front.end(), [&](std::size_t a, std::size_t b) { return cands[a].picks < cands[b].picks; });
  std::vector<Selection> out;
  out.reserve(front.size());
  for (auto idx : front) out.push_back(make_selection(inst, cands[idx].picks));
  return out;
}

std::string format_plan(const MckpInstance& inst, const Selection& s) {
  std::string out = "<";
  for (std::size_t g = 0; g < s.chosen.size(); ++g) {
    if (g) out += " * ";
    out += inst.groups[g].items[s.chosen[g]].id;
  }
  return out + ">";
}

AppliedActions apply_actions(const MorphStructure& ms, const Composition& c, const MckpInstance& inst,
                             const Selection& s) {
  validate_composition(ms, c);
  if (s.chosen.size() != inst.groups.size()) invalid("selection does not match the action instance");
  auto picked = [&](const std::string& id) {
    auto ref = ms.find(id);
    return ref && c.picks[ref->component] == ref->alternative;
  };
  MorphStructure out = ms;
  for (std::size_t g = 0; g < s.chosen.size(); ++g) {
    const auto& item = inst.groups[g].items.at(s.chosen[g]);
    if (!item.action) continue;
    const auto& a = *item.action;
    if (!picked(a.first) || (a.kind == BottleneckKind::pair && !picked(a.second))) {
      throw Error(ErrorKind::stale_action, "action " + to_string(a) + " names an alternative outside " +
                                               format_composition(ms, c));
    }
    out = a.kind == BottleneckKind::element ? out.with_priority(a.first, a.proposed)
                                            : out.with_compatibility(a.first, a.second, a.proposed);
  }
  auto quality = evaluate(out, c);
  return {std::move(out), std::move(quality)};
}

}  // namespace rekit
