#pragma once

// Tree upgrades: hotlinks from the root that shorten expected search paths,
// and budgeted Steiner-point selection per region.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rekit/planner.hpp"
#include "rekit/rational.hpp"

namespace rekit {

/// Nodes are 0..n-1; parent[root] is nullopt. Only leaves are search targets
/// and may carry a positive weight.
class RootedTree {
 public:
  RootedTree(std::vector<std::optional<std::size_t>> parent, std::vector<Rational> weight);

  [[nodiscard]] std::size_t size() const noexcept { return parent_.size(); }
  [[nodiscard]] std::size_t root() const noexcept { return root_; }
  [[nodiscard]] const std::optional<std::size_t>& parent(std::size_t v) const { return parent_.at(v); }
  [[nodiscard]] const std::vector<Rational>& weights() const noexcept { return weight_; }
  [[nodiscard]] const std::vector<std::size_t>& children(std::size_t v) const { return children_.at(v); }
  [[nodiscard]] std::size_t depth(std::size_t v) const { return depth_.at(v); }
  [[nodiscard]] bool is_leaf(std::size_t v) const { return children_.at(v).empty(); }

  /// Hotlink targets: every node that is neither the root nor its child.
  [[nodiscard]] bool eligible(std::size_t v) const;

 private:
  std::vector<std::optional<std::size_t>> parent_;
  std::vector<Rational> weight_;
  std::vector<std::vector<std::size_t>> children_;
  std::vector<std::size_t> depth_;
  std::size_t root_ = 0;
};

/// Hotlinks are arcs (root, u); a search for leaf v follows the shortest
/// root-to-v path in the tree plus hotlinks. Returns the weight-normalized
/// mean path length.
Rational expected_path_length(const RootedTree& t, const std::vector<std::size_t>& hotlinks);

struct HotlinkChoice {
  std::size_t target = 0;
  Rational gain{0};
};

/// Best additional hotlink given already placed ones; nullopt when no
/// eligible node remains. Ties go to the smaller node id.
std::optional<HotlinkChoice> assign_single_hotlink(const RootedTree& t, const std::vector<std::size_t>& placed = {});

struct HotlinkPlan {
  std::vector<HotlinkChoice> hotlinks;
  /// Expected path length before any hotlink and after each one.
  std::vector<Rational> lengths;
  bool short_count = false;
};

HotlinkPlan assign_hotlinks_greedy(const RootedTree& t, std::size_t count);

struct SteinerCandidate {
  std::string id;
  Rational cost{0};
  Rational profit{0};
};

struct SteinerRegion {
  std::string id;
  std::vector<SteinerCandidate> candidates;
};

struct SteinerInstance {
  std::vector<SteinerRegion> regions;
  Rational budget{0};
  Rational granularity{1, 10};
};

/// The multiple-choice instance with a "None" item leading every region.
MckpInstance steiner_to_mckp(const SteinerInstance& inst);

struct SteinerResult {
  Selection selection;
  std::vector<std::string> points;
};

SteinerResult steiner_selection(const SteinerInstance& inst);

}  // namespace rekit
