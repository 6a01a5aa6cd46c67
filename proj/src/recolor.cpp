#include "rekit/recolor.hpp"

#include <algorithm>
#include <numeric>

#include "rekit/error.hpp"

namespace rekit {

namespace {

[[noreturn]] void invalid(const std::string& msg) { throw Error(ErrorKind::invalid_input, msg); }

}  // namespace

void RecolorInstance::validate() const {
  const auto n = graph.vertex_count;
  if (colors == 0) invalid("no colors");
  if (initial.size() != n || goal.size() != n) invalid("configurations must cover every vertex");
  for (auto c : initial)
    if (c >= colors) invalid("initial color out of range");
  for (auto c : goal)
    if (c >= colors) invalid("goal color out of range");
  for (const auto& [a, b] : graph.edges) {
    if (a >= n || b >= n) invalid("edge endpoint out of range");
    if (a == b) invalid("self-loop");
  }
  if (cost.size() != n) invalid("one cost matrix per vertex required");
  for (const auto& m : cost) {
    if (m.size() != colors) invalid("cost matrix must be k x k");
    for (std::size_t i = 0; i < colors; ++i) {
      if (m[i].size() != colors) invalid("cost matrix must be k x k");
      if (m[i][i] != 0) invalid("cost matrix diagonal must be zero");
      for (const auto& v : m[i])
        if (v < 0) invalid("negative recoloring cost");
    }
  }
  if (budget && *budget < 0) invalid("negative budget");
}

std::vector<CostMatrix> unit_costs(std::size_t vertices, std::size_t colors) {
  CostMatrix m(colors, std::vector<Rational>(colors, Rational(1)));
  for (std::size_t i = 0; i < colors; ++i) m[i][i] = 0;
  return std::vector<CostMatrix>(vertices, m);
}

bool is_proper(const Graph& g, const Coloring& c) {
  return std::none_of(g.edges.begin(), g.edges.end(), [&](const auto& e) { return c[e.first] == c[e.second]; });
}

Rational recolor_cost(const RecolorInstance& inst, const Coloring& c) {
  Rational total = 0;
  for (std::size_t v = 0; v < c.size(); ++v) total += inst.cost[v][inst.initial[v]][c[v]];
  return total;
}

std::size_t goal_distance(const RecolorInstance& inst, const Coloring& c) {
  std::size_t d = 0;
  for (std::size_t v = 0; v < c.size(); ++v) d += c[v] != inst.goal[v] ? 1 : 0;
  return d;
}

namespace {

struct Candidate {
  std::size_t distance;
  Rational cost;
  Coloring coloring;
};

bool better(const Candidate& a, const Candidate& b) {
  if (a.distance != b.distance) return a.distance < b.distance;
  if (a.cost != b.cost) return a.cost < b.cost;
  return a.coloring < b.coloring;
}

class BranchAndBound {
 public:
  explicit BranchAndBound(const RecolorInstance& inst) : inst_(inst), adj_(inst.graph.vertex_count) {
    for (const auto& [a, b] : inst.graph.edges) {
      adj_[a].push_back(b);
      adj_[b].push_back(a);
    }
    order_.resize(inst.graph.vertex_count);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) { return adj_[a].size() > adj_[b].size(); });
    current_.assign(inst.graph.vertex_count, kUnset);
  }

  Candidate solve(Candidate incumbent) {
    best_ = std::move(incumbent);
    search(0, 0, Rational(0));
    return best_;
  }

 private:
  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  bool clashes(std::size_t v, std::size_t color) const {
    return std::any_of(adj_[v].begin(), adj_[v].end(), [&](std::size_t u) { return current_[u] == color; });
  }

  // Mismatches already fixed plus unassigned vertices whose goal color is
  // taken by an assigned neighbour.
  std::size_t lower_bound(std::size_t depth, std::size_t mismatches) const {
    std::size_t lb = mismatches;
    for (std::size_t i = depth; i < order_.size(); ++i) {
      auto v = order_[i];
      if (clashes(v, inst_.goal[v])) ++lb;
    }
    return lb;
  }

  void search(std::size_t depth, std::size_t mismatches, Rational cost) {
    auto lb = lower_bound(depth, mismatches);
    if (lb > best_.distance || (lb == best_.distance && cost > best_.cost)) return;
    if (depth == order_.size()) {
      Candidate cand{mismatches, cost, current_};
      if (better(cand, best_)) best_ = std::move(cand);
      return;
    }
    const auto v = order_[depth];
    const auto from = inst_.initial[v];
    // goal color first so good incumbents appear early
    std::vector<std::size_t> colors(inst_.colors);
    std::iota(colors.begin(), colors.end(), 0);
    std::stable_partition(colors.begin(), colors.end(), [&](std::size_t c) { return c == inst_.goal[v]; });
    for (auto c : colors) {
      if (clashes(v, c)) continue;
      Rational next = cost + inst_.cost[v][from][c];
      if (inst_.budget && next > *inst_.budget) continue;
      current_[v] = c;
      search(depth + 1, mismatches + (c != inst_.goal[v] ? 1 : 0), next);
      current_[v] = kUnset;
    }
  }

  const RecolorInstance& inst_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> order_;
  Coloring current_;
  Candidate best_;
};

Candidate local_search(const RecolorInstance& inst, Candidate start) {
  Candidate cur = std::move(start);
  for (;;) {
    std::optional<Candidate> step;
    for (std::size_t v = 0; v < cur.coloring.size(); ++v) {
      for (std::size_t c = 0; c < inst.colors; ++c) {
        if (c == cur.coloring[v]) continue;
        Coloring next = cur.coloring;
        next[v] = c;
        if (!is_proper(inst.graph, next)) continue;
        Rational cost = recolor_cost(inst, next);
        if (inst.budget && cost > *inst.budget) continue;
        Candidate cand{goal_distance(inst, next), cost, std::move(next)};
        if (better(cand, cur) && (!step || better(cand, *step))) step = std::move(cand);
      }
    }
    if (!step) return cur;
    cur = std::move(*step);
  }
}

}  // namespace

RecolorResult recolor_optimize(const RecolorInstance& inst) {
  inst.validate();
  if (!is_proper(inst.graph, inst.initial)) invalid("initial configuration is not a proper coloring");
  Candidate start{goal_distance(inst, inst.initial), Rational(0), inst.initial};
  if (inst.graph.vertex_count <= kExactRecolorLimit) {
    auto best = BranchAndBound(inst).solve(start);
    return {best.coloring, best.distance, best.cost, true};
  }
  auto best = local_search(inst, start);
  return {best.coloring, best.distance, best.cost, false};
}

}  // namespace rekit
