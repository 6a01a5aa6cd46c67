#include "rekit/model.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "rekit/error.hpp"

namespace rekit {

namespace {

[[noreturn]] void invalid(const std::string& msg) { throw Error(ErrorKind::invalid_input, msg); }

}  // namespace

MorphStructure::MorphStructure(OrdinalScales scales, std::vector<Component> components,
                               const std::vector<CompatEntry>& compat)
    : scales_(scales), components_(std::move(components)) {
  if (scales_.priority_levels < 1) invalid("priority scale must have at least one level");
  if (scales_.compat_levels < 1) invalid("compatibility scale must have at least one level");
  if (components_.empty()) invalid("structure has no components");

  std::unordered_set<std::string> seen;
  offsets_.reserve(components_.size());
  for (const auto& comp : components_) {
    if (comp.alternatives.empty()) invalid("component '" + comp.id + "' has no alternatives");
    offsets_.push_back(total_);
    total_ += comp.alternatives.size();
    for (const auto& alt : comp.alternatives) {
      if (!seen.insert(alt.id).second) invalid("duplicate alternative id '" + alt.id + "'");
      if (alt.priority < 1 || alt.priority > scales_.priority_levels) {
        invalid("priority of '" + alt.id + "' outside [1.." + std::to_string(scales_.priority_levels) + "]");
      }
    }
  }
  compat_.assign(total_ * total_, 0);
  listed_.assign(total_ * total_, false);
  for (const auto& e : compat) {
    auto a = find(e.first);
    auto b = find(e.second);
    if (!a || !b) invalid("compatibility entry references unknown alternative '" + e.first + "'/'" + e.second + "'");
    if (a->component == b->component) {
      invalid("compatibility given for same-component pair (" + e.first + "," + e.second + ")");
    }
    if (e.level < 0 || e.level > scales_.compat_levels) {
      invalid("compatibility level outside [0.." + std::to_string(scales_.compat_levels) + "]");
    }
    auto i = flat(*a) * total_ + flat(*b);
    if (listed_[i] && compat_[i] != e.level) {
      invalid("conflicting compatibility for (" + e.first + "," + e.second + ")");
    }
    set_level(*a, *b, e.level);
  }
}

void MorphStructure::set_level(AltRef a, AltRef b, int level) {
  auto fa = flat(a);
  auto fb = flat(b);
  compat_[fa * total_ + fb] = level;
  compat_[fb * total_ + fa] = level;
  listed_[fa * total_ + fb] = true;
  listed_[fb * total_ + fa] = true;
}

std::optional<AltRef> MorphStructure::find(std::string_view alt_id) const {
  for (std::size_t c = 0; c < components_.size(); ++c) {
    const auto& alts = components_[c].alternatives;
    for (std::size_t a = 0; a < alts.size(); ++a) {
      if (alts[a].id == alt_id) return AltRef{c, a};
    }
  }
  return std::nullopt;
}

AltRef MorphStructure::at(std::string_view alt_id) const {
  auto ref = find(alt_id);
  if (!ref) invalid("unknown alternative '" + std::string(alt_id) + "'");
  return *ref;
}

const Alternative& MorphStructure::alternative(AltRef ref) const {
  return components_.at(ref.component).alternatives.at(ref.alternative);
}

int MorphStructure::compatibility(AltRef a, AltRef b) const {
  return compat_[flat(a) * total_ + flat(b)];
}

int MorphStructure::compatibility(std::string_view a, std::string_view b) const {
  return compatibility(at(a), at(b));
}

std::vector<CompatEntry> MorphStructure::compat_entries() const {
  std::vector<CompatEntry> out;
  for (std::size_t ca = 0; ca < components_.size(); ++ca) {
    for (std::size_t aa = 0; aa < components_[ca].alternatives.size(); ++aa) {
      for (std::size_t cb = ca + 1; cb < components_.size(); ++cb) {
        for (std::size_t ab = 0; ab < components_[cb].alternatives.size(); ++ab) {
          AltRef a{ca, aa};
          AltRef b{cb, ab};
          if (!listed_[flat(a) * total_ + flat(b)]) continue;
          out.push_back({alternative(a).id, alternative(b).id, compatibility(a, b)});
        }
      }
    }
  }
  return out;
}

MorphStructure MorphStructure::with_priority(std::string_view alt_id, int priority) const {
  if (priority < 1 || priority > scales_.priority_levels) invalid("priority outside scale");
  MorphStructure copy = *this;
  auto ref = at(alt_id);
  copy.components_[ref.component].alternatives[ref.alternative].priority = priority;
  return copy;
}

MorphStructure MorphStructure::with_compatibility(std::string_view a, std::string_view b, int level) const {
  if (level < 0 || level > scales_.compat_levels) invalid("compatibility level outside scale");
  auto ra = at(a);
  auto rb = at(b);
  if (ra.component == rb.component) invalid("same-component pair has no compatibility");
  MorphStructure copy = *this;
  copy.set_level(ra, rb, level);
  return copy;
}

Composition make_composition(const MorphStructure& ms, const std::vector<std::string>& alt_ids) {
  if (alt_ids.size() != ms.component_count()) {
    invalid("composition needs exactly one pick per component (" + std::to_string(ms.component_count()) +
            "), got " + std::to_string(alt_ids.size()));
  }
  Composition c;
  c.picks.resize(alt_ids.size());
  std::vector<bool> filled(alt_ids.size(), false);
  for (const auto& id : alt_ids) {
    auto ref = ms.at(id);
    if (filled[ref.component]) invalid("two picks for component '" + ms.components()[ref.component].id + "'");
    filled[ref.component] = true;
    c.picks[ref.component] = ref.alternative;
  }
  return c;
}

void validate_composition(const MorphStructure& ms, const Composition& c) {
  if (c.picks.size() != ms.component_count()) invalid("composition size does not match component count");
  for (std::size_t i = 0; i < c.picks.size(); ++i) {
    if (c.picks[i] >= ms.components()[i].alternatives.size()) invalid("composition pick out of range");
  }
}

std::string format_composition(const MorphStructure& ms, const Composition& c) {
  std::string out;
  for (std::size_t i = 0; i < c.picks.size(); ++i) {
    if (i) out += " * ";
    out += ms.alternative({i, c.picks[i]}).id;
  }
  return out;
}

std::string to_string(const QualityVector& q) {
  std::string out = "(" + std::to_string(q.w) + ";";
  for (std::size_t i = 0; i < q.n.size(); ++i) {
    out += (i ? "," : "") + std::to_string(q.n[i]);
  }
  return out + ")";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::dominates: return "dominates";
    case Verdict::dominated: return "dominated";
    case Verdict::equal: return "equal";
    case Verdict::incomparable: return "incomparable";
  }
  return "?";
}

Verdict compare_quality(const QualityVector& a, const QualityVector& b) {
  if (a.n.size() != b.n.size()) {
    throw Error(ErrorKind::invalid_comparison, "quality vectors use different priority scales");
  }
  auto ma = std::accumulate(a.n.begin(), a.n.end(), 0);
  auto mb = std::accumulate(b.n.begin(), b.n.end(), 0);
  if (ma != mb) throw Error(ErrorKind::invalid_comparison, "quality vectors describe different component counts");

  bool a_ge = a.w >= b.w;
  bool b_ge = b.w >= a.w;
  int pa = 0;
  int pb = 0;
  for (std::size_t r = 0; r < a.n.size(); ++r) {
    pa += a.n[r];
    pb += b.n[r];
    a_ge = a_ge && pa >= pb;
    b_ge = b_ge && pb >= pa;
  }
  if (a_ge && b_ge) return Verdict::equal;
  if (a_ge) return Verdict::dominates;
  if (b_ge) return Verdict::dominated;
  return Verdict::incomparable;
}

int MultisetEstimate::total() const { return std::accumulate(counts.begin(), counts.end(), 0); }

std::string to_string(const MultisetEstimate& e) {
  std::string out = "(";
  for (std::size_t i = 0; i < e.counts.size(); ++i) out += (i ? "," : "") + std::to_string(e.counts[i]);
  return out + ")";
}

int chain_index(const MultisetEstimate& e) {
  static const std::vector<std::vector<int>> chain = {
      {3, 0, 0}, {2, 1, 0}, {1, 2, 0}, {0, 3, 0}, {1, 1, 1}, {0, 2, 1}, {0, 1, 2}, {0, 0, 3},
  };
  auto it = std::find(chain.begin(), chain.end(), e.counts);
  if (it == chain.end()) {
    throw Error(ErrorKind::unsupported_estimate, "estimate " + to_string(e) + " is not on the 3-element chain");
  }
  return static_cast<int>(it - chain.begin()) + 1;
}

namespace {

void check_shared_scale(const std::vector<MultisetEstimate>& es, bool same_total) {
  if (es.empty()) throw Error(ErrorKind::empty_input, "no estimates to aggregate");
  for (const auto& e : es) {
    if (e.counts.size() != es.front().counts.size()) invalid("estimates use different scales");
    if (std::any_of(e.counts.begin(), e.counts.end(), [](int c) { return c < 0; })) invalid("negative count");
    if (same_total && e.total() != es.front().total()) invalid("estimates have different totals");
  }
}

}  // namespace

MultisetEstimate aggregate_median(const std::vector<MultisetEstimate>& es) {
  check_shared_scale(es, true);
  std::vector<std::pair<int, std::size_t>> ranked;
  ranked.reserve(es.size());
  for (std::size_t i = 0; i < es.size(); ++i) ranked.emplace_back(chain_index(es[i]), i);
  std::sort(ranked.begin(), ranked.end());
  return es[ranked[(ranked.size() - 1) / 2].second];
}

MultisetEstimate aggregate_integrated(const std::vector<MultisetEstimate>& es) {
  check_shared_scale(es, false);
  MultisetEstimate out{std::vector<int>(es.front().counts.size(), 0)};
  for (const auto& e : es) {
    for (std::size_t i = 0; i < e.counts.size(); ++i) out.counts[i] += e.counts[i];
  }
  return out;
}

}  // namespace rekit
