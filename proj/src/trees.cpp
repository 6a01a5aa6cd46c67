#include "rekit/trees.hpp"

#include <algorithm>

#include "rekit/error.hpp"

namespace rekit {

namespace {

[[noreturn]] void invalid(const std::string& msg) { throw Error(ErrorKind::invalid_input, msg); }

}  // namespace

RootedTree::RootedTree(std::vector<std::optional<std::size_t>> parent, std::vector<Rational> weight)
    : parent_(std::move(parent)), weight_(std::move(weight)) {
  const auto n = parent_.size();
  if (n == 0) invalid("empty tree");
  if (weight_.size() != n) invalid("one weight per node required");
  children_.assign(n, {});
  std::size_t roots = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (!parent_[v]) {
      ++roots;
      root_ = v;
    } else {
      if (*parent_[v] >= n || *parent_[v] == v) invalid("bad parent for node " + std::to_string(v));
      children_[*parent_[v]].push_back(v);
    }
  }
  if (roots != 1) invalid("tree must have exactly one root");

  // Breadth-first from the root; anything unreached sits on a cycle.
  depth_.assign(n, 0);
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> queue{root_};
  seen[root_] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (auto c : children_[queue[head]]) {
      seen[c] = true;
      depth_[c] = depth_[queue[head]] + 1;
      queue.push_back(c);
    }
  }
  if (queue.size() != n) invalid("parent links contain a cycle");

  Rational total = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (weight_[v] < 0) invalid("negative weight");
    if (weight_[v] != 0 && !is_leaf(v)) invalid("only leaves carry access weights (node " + std::to_string(v) + ")");
    total += weight_[v];
  }
  if (total <= 0) invalid("leaf weights must sum to a positive value");
}

bool RootedTree::eligible(std::size_t v) const {
  return v < size() && v != root_ && *parent_[v] != root_;
}

Rational expected_path_length(const RootedTree& t, const std::vector<std::size_t>& hotlinks) {
  std::vector<bool> linked(t.size(), false);
  for (auto u : hotlinks) {
    if (!t.eligible(u)) {
      throw Error(ErrorKind::invalid_hotlink, "hotlink target " + std::to_string(u) + " is the root or its child");
    }
    linked[u] = true;
  }
  // dist(v) = min over v and its ancestors a of (linked(a) ? 1 + depth(v) - depth(a) : depth(v)),
  // computed top-down as the shortest distance to each node.
  std::vector<std::size_t> dist(t.size(), 0);
  std::vector<std::size_t> stack{t.root()};
  Rational sum = 0;
  Rational total = 0;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    if (v != t.root()) {
      dist[v] = dist[*t.parent(v)] + 1;
      if (linked[v]) dist[v] = std::min<std::size_t>(dist[v], 1);
    }
    if (t.weights()[v] != 0) {
      sum += t.weights()[v] * Rational(static_cast<std::int64_t>(dist[v]));
      total += t.weights()[v];
    }
    for (auto c : t.children(v)) stack.push_back(c);
  }
  return sum / total;
}

std::optional<HotlinkChoice> assign_single_hotlink(const RootedTree& t, const std::vector<std::size_t>& placed) {
  const Rational base = expected_path_length(t, placed);
  std::optional<HotlinkChoice> best;
  std::vector<std::size_t> trial = placed;
  trial.push_back(0);
  for (std::size_t u = 0; u < t.size(); ++u) {
    if (!t.eligible(u) || std::find(placed.begin(), placed.end(), u) != placed.end()) continue;
    trial.back() = u;
    Rational gain = base - expected_path_length(t, trial);
    if (!best || gain > best->gain) best = HotlinkChoice{u, gain};
  }
  return best;
}

HotlinkPlan assign_hotlinks_greedy(const RootedTree& t, std::size_t count) {
  if (count == 0) invalid("hotlink count must be at least 1");
  HotlinkPlan plan;
  std::vector<std::size_t> placed;
  plan.lengths.push_back(expected_path_length(t, placed));
  while (placed.size() < count) {
    auto next = assign_single_hotlink(t, placed);
    if (!next) {
      plan.short_count = true;
      break;
    }
    placed.push_back(next->target);
    plan.hotlinks.push_back(*next);
    plan.lengths.push_back(plan.lengths.back() - next->gain);
  }
  return plan;
}

MckpInstance steiner_to_mckp(const SteinerInstance& inst) {
  MckpInstance m;
  m.budget = inst.budget;
  m.granularity = inst.granularity;
  for (const auto& region : inst.regions) {
    MckpGroup g{region.id, {MckpItem{"None", 0, 0, {}, std::nullopt}}};
    for (const auto& c : region.candidates) {
      if (c.cost < 0 || c.profit < 0) invalid("Steiner candidate '" + c.id + "' has a negative cost or profit");
      g.items.push_back(MckpItem{c.id, c.cost, c.profit, {}, std::nullopt});
    }
    m.groups.push_back(std::move(g));
  }
  return m;
}

SteinerResult steiner_selection(const SteinerInstance& inst) {
  if (inst.budget < 0) invalid("negative budget");
  auto m = steiner_to_mckp(inst);
  SteinerResult r{mckp_exact(m), {}};
  for (std::size_t g = 0; g < m.groups.size(); ++g) {
    if (r.selection.chosen[g] != 0) r.points.push_back(m.groups[g].items[r.selection.chosen[g]].id);
  }
  return r;
}

}  // namespace rekit
