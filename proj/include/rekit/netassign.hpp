#pragma once

// Network workflow: clustering of regions, outranking-based ranking and
// capacitated user-to-access-point assignment with extension strategies.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rekit/planner.hpp"

namespace rekit {

struct RegionPoint {
  std::string id;
  std::vector<double> params;
};

enum class Linkage { single, average, complete };

const char* to_string(Linkage l);

struct Merge {
  std::size_t left = 0;   // smallest member of the first cluster
  std::size_t right = 0;  // smallest member of the second cluster
  double distance = 0;
};

struct Clustering {
  /// Member indices, each cluster sorted, clusters ordered by first member.
  std::vector<std::vector<std::size_t>> clusters;
  std::vector<Merge> merges;
};

/// Agglomerative clustering on Euclidean distance between parameter vectors.
/// The closest pair of clusters merges while its distance is at most
/// `threshold`; ties go to the smallest (first member, first member) pair.
Clustering cluster_agglomerative(const std::vector<RegionPoint>& points, double threshold,
                                 Linkage linkage = Linkage::single);

struct OutrankParams {
  double concordance = 0.6;  // alpha
  double discordance = 0.4;  // beta
  /// Criterion weights; empty means equal weights.
  std::vector<double> weights;
};

/// Layer (1 = best) per alternative. `a` outranks `b` when the weight share
/// of criteria where a is at least as good reaches alpha and the largest
/// range-normalized gap in b's favour stays within beta. Each layer takes the
/// Pareto-undominated remaining alternatives that no remaining one strictly
/// outranks (fewest strict outrankers if that set is empty).
std::vector<int> outrank_rank(const std::vector<std::vector<double>>& alternatives, const std::vector<Sense>& senses,
                              const OutrankParams& params = {});

struct NetUser {
  int id = 0;
  double x = 0, y = 0, z = 0;
  double bandwidth = 0;
  int priority = 1;  // 1 best .. 3
  double reliability = 0;
};

struct AccessPoint {
  int id = 0;
  double x = 0, y = 0, z = 0;
  double capacity = 0;
  int max_users = 0;
  double reliability = 0;
};

struct AssignmentInstance {
  std::vector<NetUser> users;
  std::vector<AccessPoint> points;
  /// nullopt means unbounded.
  std::optional<double> distance_limit;

  void validate() const;
};

double distance(const NetUser& u, const AccessPoint& p);

struct Assignment {
  /// Index into points per user, nullopt when unassigned.
  std::vector<std::optional<std::size_t>> point_of;

  [[nodiscard]] std::size_t assigned_count() const;
};

struct PointLoad {
  double bandwidth = 0;
  int users = 0;
};

std::vector<PointLoad> point_loads(const AssignmentInstance& inst, const Assignment& a);

/// Throws std::logic_error naming the first violated bandwidth, count,
/// distance or shape constraint.
void check_assignment(const AssignmentInstance& inst, const Assignment& a);

/// Ranks in-range pairs with outrank_rank over (min reliability, bandwidth,
/// 4 - priority) and sweeps them in layer order (merit, user id, distance,
/// point order inside a layer), assigning while both capacities allow.
Assignment assign_users(const AssignmentInstance& inst, const OutrankParams& params = {});

enum class Strategy { separate, joint, border };

const char* to_string(Strategy s);

struct ExtensionResult {
  /// Users and points of both regions, first region first.
  AssignmentInstance merged;
  /// 0 for the first region, 1 for the second.
  std::vector<int> user_region;
  std::vector<int> point_region;
  /// Users allowed to use points of the other region.
  std::vector<bool> crossing;
  Assignment assignment;
  /// User ids released for re-assignment by the border strategy.
  std::vector<int> released;
};

/// Throws Error(invalid_input) when the two instances share a user or point
/// id or disagree on the distance limit.
ExtensionResult extend(const AssignmentInstance& first, const AssignmentInstance& second, Strategy strategy,
                       double radius = 0, const OutrankParams& params = {});

/// True when no unassigned user has an in-range pair with spare bandwidth and
/// a spare slot.
bool is_maximal(const AssignmentInstance& inst, const Assignment& a);
/// Same, restricted to the pairs each strategy permits.
bool is_maximal(const ExtensionResult& r);

/// Ids of users whose access point differs between two assignments over the
/// same instance.
std::vector<int> reassigned_users(const AssignmentInstance& inst, const Assignment& a, const Assignment& b);

}  // namespace rekit
