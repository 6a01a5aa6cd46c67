#include "rekit/netassign.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

#include "rekit/error.hpp"

namespace rekit {

namespace {

[[noreturn]] void invalid(const std::string& msg) { throw Error(ErrorKind::invalid_input, msg); }

double sq_dist(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return s;
}

}  // namespace

const char* to_string(Linkage l) {
  switch (l) {
    case Linkage::single: return "single";
    case Linkage::average: return "average";
    case Linkage::complete: return "complete";
  }
  return "?";
}

const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::separate: return "separate";
    case Strategy::joint: return "joint";
    case Strategy::border: return "border";
  }
  return "?";
}

Clustering cluster_agglomerative(const std::vector<RegionPoint>& points, double threshold, Linkage linkage) {
  if (!(threshold >= 0) || !std::isfinite(threshold)) invalid("threshold must be a finite value >= 0");
  Clustering out;
  const auto n = points.size();
  if (n == 0) return out;
  const auto dim = points[0].params.size();
  for (const auto& p : points) {
    if (p.params.size() != dim) invalid("region " + p.id + " has a different parameter count");
    for (double v : p.params)
      if (!std::isfinite(v)) invalid("region " + p.id + " has a non-finite parameter");
  }

  // Squared point distances; single and complete linkage compare these
  // directly so equal distances tie exactly.
  std::vector<std::vector<double>> d2(n, std::vector<double>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) d2[i][j] = d2[j][i] = sq_dist(points[i].params, points[j].params);

  auto link = [&](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    switch (linkage) {
      case Linkage::single: {
        double best = std::numeric_limits<double>::infinity();
        for (auto i : a)
          for (auto j : b) best = std::min(best, d2[i][j]);
        return std::sqrt(best);
      }
      case Linkage::complete: {
        double worst = 0;
        for (auto i : a)
          for (auto j : b) worst = std::max(worst, d2[i][j]);
        return std::sqrt(worst);
      }
      case Linkage::average: {
        double sum = 0;
        for (auto i : a)
          for (auto j : b) sum += std::sqrt(d2[i][j]);
        return sum / static_cast<double>(a.size() * b.size());
      }
    }
    return 0.0;
  };

  std::vector<std::vector<std::size_t>> clusters;
  for (std::size_t i = 0; i < n; ++i) clusters.push_back({i});

  while (clusters.size() > 1) {
    std::size_t ba = 0, bb = 0;
    double best = std::numeric_limits<double>::infinity();
    // clusters stay ordered by first member, so scanning a < b in order
    // yields the lowest id pair among ties
    for (std::size_t a = 0; a < clusters.size(); ++a)
      for (std::size_t b = a + 1; b < clusters.size(); ++b) {
        double d = link(clusters[a], clusters[b]);
        if (d < best) {
          best = d;
          ba = a;
          bb = b;
        }
      }
    if (best > threshold) break;
    out.merges.push_back({clusters[ba].front(), clusters[bb].front(), best});
    auto& dst = clusters[ba];
    dst.insert(dst.end(), clusters[bb].begin(), clusters[bb].end());
    std::sort(dst.begin(), dst.end());
    clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(bb));
  }
  out.clusters = std::move(clusters);
  return out;
}

std::vector<int> outrank_rank(const std::vector<std::vector<double>>& alts, const std::vector<Sense>& senses,
                              const OutrankParams& params) {
  if (alts.empty()) invalid("no alternatives to rank");
  const auto k = senses.size();
  if (k == 0) invalid("empty criteria");
  if (!(params.concordance > 0 && params.concordance <= 1)) invalid("concordance threshold must lie in (0,1]");
  if (!(params.discordance >= 0 && params.discordance < 1)) invalid("discordance threshold must lie in [0,1)");
  for (const auto& a : alts) {
    if (a.size() != k) invalid("criteria vector length differs from the sense count");
    for (double v : a)
      if (!std::isfinite(v)) invalid("non-finite criterion value");
  }
  std::vector<double> w = params.weights;
  if (w.empty()) w.assign(k, 1.0);
  if (w.size() != k) throw Error(ErrorKind::invalid_weights, "one weight per criterion required");
  double wsum = 0;
  for (double x : w) {
    if (!(x >= 0) || !std::isfinite(x)) throw Error(ErrorKind::invalid_weights, "weights must be finite and >= 0");
    wsum += x;
  }
  if (wsum <= 0) throw Error(ErrorKind::invalid_weights, "weights must not all be zero");

  const auto n = alts.size();
  // orient everything to "larger is better"
  std::vector<std::vector<double>> v(n, std::vector<double>(k));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < k; ++c) v[i][c] = senses[c] == Sense::max ? alts[i][c] : -alts[i][c];
  std::vector<double> range(k, 0);
  for (std::size_t c = 0; c < k; ++c) {
    double lo = v[0][c], hi = v[0][c];
    for (std::size_t i = 1; i < n; ++i) {
      lo = std::min(lo, v[i][c]);
      hi = std::max(hi, v[i][c]);
    }
    range[c] = hi - lo;
  }

  auto outranks = [&](std::size_t a, std::size_t b) {
    double conc = 0, disc = 0;
    for (std::size_t c = 0; c < k; ++c) {
      if (v[a][c] >= v[b][c]) conc += w[c];
      else if (range[c] > 0) disc = std::max(disc, (v[b][c] - v[a][c]) / range[c]);
    }
    return conc / wsum >= params.concordance && disc <= params.discordance;
  };
  auto dominates = [&](std::size_t a, std::size_t b) {
    bool strict = false;
    for (std::size_t c = 0; c < k; ++c) {
      if (v[a][c] < v[b][c]) return false;
      if (v[a][c] > v[b][c]) strict = true;
    }
    return strict;
  };

  std::vector<std::vector<bool>> s(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b) s[a][b] = outranks(a, b);

  std::vector<int> layer(n, 0);
  std::size_t left = n;
  for (int current = 1; left > 0; ++current) {
    std::vector<std::size_t> undominated;
    for (std::size_t a = 0; a < n; ++a) {
      if (layer[a]) continue;
      bool dom = false;
      for (std::size_t b = 0; b < n && !dom; ++b) dom = b != a && !layer[b] && dominates(b, a);
      if (!dom) undominated.push_back(a);
    }
    std::vector<std::size_t> beaten(n, 0);
    std::size_t fewest = n;
    for (auto a : undominated) {
      for (std::size_t b = 0; b < n; ++b)
        if (b != a && !layer[b] && s[b][a] && !s[a][b]) ++beaten[a];
      fewest = std::min(fewest, beaten[a]);
    }
    // fewest == 0 is the normal case; anything else means a cycle
    for (auto a : undominated)
      if (beaten[a] == fewest) {
        layer[a] = current;
        --left;
      }
  }
  return layer;
}

void AssignmentInstance::validate() const {
  std::set<int> uid, pid;
  for (const auto& u : users) {
    if (!uid.insert(u.id).second) invalid("duplicate user id " + std::to_string(u.id));
    for (double x : {u.x, u.y, u.z, u.bandwidth, u.reliability})
      if (!std::isfinite(x)) invalid("user " + std::to_string(u.id) + " has a non-finite field");
    if (u.bandwidth < 0) invalid("user " + std::to_string(u.id) + " has negative bandwidth");
    if (u.priority < 1 || u.priority > 3) invalid("user " + std::to_string(u.id) + " priority outside 1..3");
  }
  for (const auto& p : points) {
    if (!pid.insert(p.id).second) invalid("duplicate access point id " + std::to_string(p.id));
    for (double x : {p.x, p.y, p.z, p.capacity, p.reliability})
      if (!std::isfinite(x)) invalid("access point " + std::to_string(p.id) + " has a non-finite field");
    if (p.capacity <= 0 || p.max_users <= 0)
      invalid("access point " + std::to_string(p.id) + " needs positive capacities");
  }
  if (distance_limit && (!std::isfinite(*distance_limit) || *distance_limit < 0))
    invalid("distance limit must be finite and >= 0");
}

double distance(const NetUser& u, const AccessPoint& p) {
  return std::sqrt((u.x - p.x) * (u.x - p.x) + (u.y - p.y) * (u.y - p.y) + (u.z - p.z) * (u.z - p.z));
}

std::size_t Assignment::assigned_count() const {
  return static_cast<std::size_t>(std::count_if(point_of.begin(), point_of.end(), [](auto& p) { return p.has_value(); }));
}

std::vector<PointLoad> point_loads(const AssignmentInstance& inst, const Assignment& a) {
  std::vector<PointLoad> load(inst.points.size());
  for (std::size_t i = 0; i < a.point_of.size() && i < inst.users.size(); ++i)
    if (a.point_of[i] && *a.point_of[i] < load.size()) {
      load[*a.point_of[i]].bandwidth += inst.users[i].bandwidth;
      ++load[*a.point_of[i]].users;
    }
  return load;
}

namespace {

bool in_range(const AssignmentInstance& inst, std::size_t i, std::size_t j) {
  return !inst.distance_limit || distance(inst.users[i], inst.points[j]) <= *inst.distance_limit;
}

bool fits(const AssignmentInstance& inst, const std::vector<PointLoad>& load, std::size_t i, std::size_t j) {
  return load[j].bandwidth + inst.users[i].bandwidth <= inst.points[j].capacity &&
         load[j].users + 1 <= inst.points[j].max_users;
}

using Allowed = std::vector<std::vector<bool>>;

Allowed allow_all(const AssignmentInstance& inst) {
  return Allowed(inst.users.size(), std::vector<bool>(inst.points.size(), true));
}

bool maximal(const AssignmentInstance& inst, const Assignment& a, const Allowed& allowed) {
  auto load = point_loads(inst, a);
  for (std::size_t i = 0; i < inst.users.size(); ++i) {
    if (a.point_of[i]) continue;
    for (std::size_t j = 0; j < inst.points.size(); ++j)
      if (allowed[i][j] && in_range(inst, i, j) && fits(inst, load, i, j)) return false;
  }
  return true;
}

// Ranks every permitted in-range pair of a still unassigned user and sweeps
// them in rank order, extending `a`.
void sweep(const AssignmentInstance& inst, const Allowed& allowed, const OutrankParams& params, Assignment& a) {
  struct Pair {
    std::size_t user, point;
    double dist;
  };
  std::vector<Pair> pairs;
  std::vector<std::vector<double>> crit;
  for (std::size_t i = 0; i < inst.users.size(); ++i) {
    if (a.point_of[i]) continue;
    const auto& u = inst.users[i];
    for (std::size_t j = 0; j < inst.points.size(); ++j) {
      if (!allowed[i][j] || !in_range(inst, i, j)) continue;
      pairs.push_back({i, j, distance(u, inst.points[j])});
      crit.push_back({std::min(u.reliability, inst.points[j].reliability), u.bandwidth, 4.0 - u.priority});
    }
  }
  if (pairs.empty()) return;
  auto layer = outrank_rank(crit, {Sense::max, Sense::max, Sense::max}, params);

  std::vector<std::size_t> order(pairs.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    const auto& p = pairs[x];
    const auto& q = pairs[y];
    return std::make_tuple(layer[x], inst.users[p.user].priority, inst.users[p.user].id, p.dist, p.point) <
           std::make_tuple(layer[y], inst.users[q.user].priority, inst.users[q.user].id, q.dist, q.point);
  });

  auto load = point_loads(inst, a);
  for (auto k : order) {
    const auto& p = pairs[k];
    if (a.point_of[p.user] || !fits(inst, load, p.user, p.point)) continue;
    a.point_of[p.user] = p.point;
    load[p.point].bandwidth += inst.users[p.user].bandwidth;
    ++load[p.point].users;
  }
}

void must_hold(const AssignmentInstance& inst, const Assignment& a, const Allowed& allowed) {
  check_assignment(inst, a);
  if (!maximal(inst, a, allowed)) throw std::logic_error("assignment is not maximal");
}

}  // namespace

void check_assignment(const AssignmentInstance& inst, const Assignment& a) {
  if (a.point_of.size() != inst.users.size()) throw std::logic_error("assignment size differs from the user count");
  for (std::size_t i = 0; i < a.point_of.size(); ++i) {
    if (!a.point_of[i]) continue;
    if (*a.point_of[i] >= inst.points.size()) throw std::logic_error("assignment names an unknown access point");
    if (!in_range(inst, i, *a.point_of[i]))
      throw std::logic_error("user " + std::to_string(inst.users[i].id) + " assigned beyond the distance limit");
  }
  auto load = point_loads(inst, a);
  for (std::size_t j = 0; j < load.size(); ++j) {
    if (load[j].bandwidth > inst.points[j].capacity)
      throw std::logic_error("access point " + std::to_string(inst.points[j].id) + " over bandwidth");
    if (load[j].users > inst.points[j].max_users)
      throw std::logic_error("access point " + std::to_string(inst.points[j].id) + " over its user count");
  }
}

Assignment assign_users(const AssignmentInstance& inst, const OutrankParams& params) {
  inst.validate();
  Assignment a;
  a.point_of.assign(inst.users.size(), std::nullopt);
  auto allowed = allow_all(inst);
  sweep(inst, allowed, params, a);
  must_hold(inst, a, allowed);
  return a;
}

bool is_maximal(const AssignmentInstance& inst, const Assignment& a) { return maximal(inst, a, allow_all(inst)); }

namespace {

Allowed allowed_for(const ExtensionResult& r) {
  Allowed al(r.merged.users.size(), std::vector<bool>(r.merged.points.size()));
  for (std::size_t i = 0; i < al.size(); ++i)
    for (std::size_t j = 0; j < al[i].size(); ++j) al[i][j] = r.crossing[i] || r.user_region[i] == r.point_region[j];
  return al;
}

}  // namespace

bool is_maximal(const ExtensionResult& r) { return maximal(r.merged, r.assignment, allowed_for(r)); }

ExtensionResult extend(const AssignmentInstance& first, const AssignmentInstance& second, Strategy strategy,
                       double radius, const OutrankParams& params) {
  first.validate();
  second.validate();
  std::set<int> ids;
  for (const auto& u : first.users) ids.insert(u.id);
  for (const auto& u : second.users)
    if (ids.count(u.id)) invalid("user id " + std::to_string(u.id) + " appears in both instances");
  ids.clear();
  for (const auto& p : first.points) ids.insert(p.id);
  for (const auto& p : second.points)
    if (ids.count(p.id)) invalid("access point id " + std::to_string(p.id) + " appears in both instances");
  if (first.distance_limit != second.distance_limit) invalid("instances disagree on the distance limit");
  if (!(radius >= 0) || !std::isfinite(radius)) invalid("radius must be finite and >= 0");

  ExtensionResult r;
  r.merged.distance_limit = first.distance_limit;
  for (const auto* part : {&first, &second}) {
    int region = part == &first ? 0 : 1;
    for (const auto& u : part->users) {
      r.merged.users.push_back(u);
      r.user_region.push_back(region);
    }
    for (const auto& p : part->points) {
      r.merged.points.push_back(p);
      r.point_region.push_back(region);
    }
  }
  const auto nu = r.merged.users.size();
  r.crossing.assign(nu, strategy == Strategy::joint);
  r.assignment.point_of.assign(nu, std::nullopt);

  if (strategy == Strategy::joint) {
    r.assignment = assign_users(r.merged, params);
    return r;
  }

  // separate: each region on its own, indices shifted into the merged layout
  auto a1 = assign_users(first, params);
  auto a2 = assign_users(second, params);
  for (std::size_t i = 0; i < first.users.size(); ++i) r.assignment.point_of[i] = a1.point_of[i];
  for (std::size_t i = 0; i < second.users.size(); ++i)
    if (a2.point_of[i]) r.assignment.point_of[first.users.size() + i] = *a2.point_of[i] + first.points.size();

  if (strategy == Strategy::border) {
    for (std::size_t i = 0; i < nu; ++i) {
      double own = std::numeric_limits<double>::infinity(), other = own;
      for (std::size_t j = 0; j < r.merged.points.size(); ++j) {
        double d = distance(r.merged.users[i], r.merged.points[j]);
        auto& slot = r.point_region[j] == r.user_region[i] ? own : other;
        slot = std::min(slot, d);
      }
      if (!std::isfinite(own) || !std::isfinite(other)) continue;
      if (std::abs(other - own) / 2 < radius) {
        r.crossing[i] = true;
        r.released.push_back(r.merged.users[i].id);
        r.assignment.point_of[i].reset();
      }
    }
    if (!r.released.empty()) sweep(r.merged, allowed_for(r), params, r.assignment);
  }
  must_hold(r.merged, r.assignment, allowed_for(r));
  return r;
}

std::vector<int> reassigned_users(const AssignmentInstance& inst, const Assignment& a, const Assignment& b) {
  if (a.point_of.size() != inst.users.size() || b.point_of.size() != inst.users.size())
    invalid("assignments do not match the instance");
  std::vector<int> out;
  for (std::size_t i = 0; i < inst.users.size(); ++i)
    if (a.point_of[i] != b.point_of[i]) out.push_back(inst.users[i].id);
  return out;
}

}  // namespace rekit
