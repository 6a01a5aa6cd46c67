#include "rekit/restructure.hpp"

#include <algorithm>

#include "rekit/error.hpp"

namespace rekit {

namespace {

[[noreturn]] void invalid(const std::string& msg) { throw Error(ErrorKind::invalid_input, msg); }

Rational abs(const Rational& r) { return r < 0 ? -r : r; }

bool within(const std::optional<Rational>& budget, const Rational& cost) { return !budget || cost <= *budget; }

template <typename Sol>
bool better(const Rational& rho, const Rational& cost, const Sol& sol, const Rational& best_rho,
            const Rational& best_cost, const Sol& best_sol) {
  if (rho != best_rho) return rho < best_rho;
  if (cost != best_cost) return cost < best_cost;
  return sol < best_sol;
}

}  // namespace

std::function<bool(const std::vector<bool>&)> knapsack_constraint(std::vector<Rational> weight, Rational capacity) {
  return [weight = std::move(weight), capacity](const std::vector<bool>& s) {
    Rational total = 0;
    for (std::size_t e = 0; e < s.size(); ++e)
      if (s[e]) total += weight.at(e);
    return total <= capacity;
  };
}

SubsetResult restructure_subset(const SubsetRestructure& p) {
  const auto n = p.initial.size();
  if (p.goal.size() != n || p.move_cost.size() != n) invalid("initial, goal and move costs differ in length");
  if (p.proximity == Proximity::objective_gap && p.value.size() != n) invalid("objective-gap needs one value per item");
  if (p.budget && *p.budget < 0) invalid("negative change budget");
  if (std::any_of(p.move_cost.begin(), p.move_cost.end(), [](const Rational& c) { return c < 0; })) {
    invalid("negative move cost");
  }
  if (p.feasible && !p.feasible(p.initial)) invalid("initial solution is infeasible");

  auto objective = [&](const std::vector<bool>& s) {
    Rational f = 0;
    for (std::size_t e = 0; e < n; ++e)
      if (s[e]) f += p.value[e];
    return f;
  };
  const Rational goal_f = p.proximity == Proximity::objective_gap ? objective(p.goal) : Rational(0);
  auto proximity = [&](const std::vector<bool>& s) {
    if (p.proximity == Proximity::objective_gap) return abs(objective(s) - goal_f);
    Rational d = 0;
    for (std::size_t e = 0; e < n; ++e) d += s[e] != p.goal[e] ? 1 : 0;
    return d;
  };

  SubsetResult best{p.initial, 0, proximity(p.initial)};
  std::vector<bool> current = p.initial;
  // Depth-first over toggle decisions; a branch dies once its cost leaves the budget.
  std::function<void(std::size_t, Rational)> visit = [&](std::size_t e, Rational cost) {
    if (e == n) {
      if (p.feasible && !p.feasible(current)) return;
      auto rho = proximity(current);
      if (better(rho, cost, current, best.proximity, best.change_cost, best.solution)) {
        best = {current, cost, rho};
      }
      return;
    }
    visit(e + 1, cost);
    Rational toggled = cost + p.move_cost[e];
    if (within(p.budget, toggled)) {
      current[e] = !current[e];
      visit(e + 1, toggled);
      current[e] = !current[e];
    }
  };
  visit(0, 0);
  return best;
}

ChoiceResult restructure_mckp(const ChoiceRestructure& p) {
  const auto n = p.groups.size();
  if (p.initial.size() != n || p.goal.size() != n || p.switch_cost.size() != n) {
    invalid("initial, goal and switch costs must have one entry per group");
  }
  if (p.budget && *p.budget < 0) invalid("negative change budget");
  for (std::size_t g = 0; g < n; ++g) {
    if (p.groups[g].empty()) invalid("empty group");
    if (p.initial[g] >= p.groups[g].size() || p.goal[g] >= p.groups[g].size()) invalid("pick out of range");
    if (p.switch_cost[g] < 0) invalid("negative switch cost");
  }
  auto total_cost = [&](const std::vector<std::size_t>& s) {
    Rational c = 0;
    for (std::size_t g = 0; g < n; ++g) c += p.groups[g][s[g]].cost;
    return c;
  };
  auto objective = [&](const std::vector<std::size_t>& s) {
    Rational f = 0;
    for (std::size_t g = 0; g < n; ++g) f += p.groups[g][s[g]].profit;
    return f;
  };
  auto feasible = [&](const std::vector<std::size_t>& s) { return !p.capacity || total_cost(s) <= *p.capacity; };
  if (!feasible(p.initial)) invalid("initial solution is infeasible");

  const Rational goal_f = objective(p.goal);
  auto proximity = [&](const std::vector<std::size_t>& s) {
    if (p.proximity == Proximity::objective_gap) return abs(objective(s) - goal_f);
    Rational d = 0;
    for (std::size_t g = 0; g < n; ++g) d += s[g] != p.goal[g] ? 1 : 0;
    return d;
  };

  ChoiceResult best{p.initial, 0, proximity(p.initial)};
  std::vector<std::size_t> current = p.initial;
  std::function<void(std::size_t, Rational)> visit = [&](std::size_t g, Rational cost) {
    if (g == n) {
      if (!feasible(current)) return;
      auto rho = proximity(current);
      if (better(rho, cost, current, best.proximity, best.change_cost, best.solution)) {
        best = {current, cost, rho};
      }
      return;
    }
    Rational moved = cost + p.switch_cost[g];
    for (std::size_t j = 0; j < p.groups[g].size(); ++j) {
      if (j == p.initial[g]) {
        visit(g + 1, cost);
      } else if (within(p.budget, moved)) {
        current[g] = j;
        visit(g + 1, moved);
        current[g] = p.initial[g];
      }
    }
  };
  visit(0, 0);
  return best;
}

}  // namespace rekit
