#pragma once

// Ordinal scales, morphological structures and the two poset-valued quality
// measures used throughout the toolkit: quality vectors (w; n1..nk) and
// interval multiset estimates.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rekit {

/// Priority levels run 1..k (1 is best); compatibility levels run 0..l
/// (0 is incompatible, l is best).
struct OrdinalScales {
  int priority_levels = 1;
  int compat_levels = 1;
};

struct Alternative {
  std::string id;
  int priority = 1;
};

struct Component {
  std::string id;
  std::vector<Alternative> alternatives;
};

struct CompatEntry {
  std::string first;
  std::string second;
  int level = 0;
};

/// Position of an alternative inside a structure.
struct AltRef {
  std::size_t component = 0;
  std::size_t alternative = 0;
};

/// Components, their design alternatives and a symmetric compatibility
/// relation between alternatives of different components. Pairs that were
/// never given a level are incompatible (w = 0). Alternative ids are unique
/// across the whole structure.
class MorphStructure {
 public:
  MorphStructure() = default;
  MorphStructure(OrdinalScales scales, std::vector<Component> components,
                 const std::vector<CompatEntry>& compat);

  [[nodiscard]] const OrdinalScales& scales() const noexcept { return scales_; }
  [[nodiscard]] const std::vector<Component>& components() const noexcept { return components_; }
  [[nodiscard]] std::size_t component_count() const noexcept { return components_.size(); }

  [[nodiscard]] std::optional<AltRef> find(std::string_view alt_id) const;
  [[nodiscard]] AltRef at(std::string_view alt_id) const;
  [[nodiscard]] const Alternative& alternative(AltRef ref) const;

  [[nodiscard]] int compatibility(AltRef a, AltRef b) const;
  [[nodiscard]] int compatibility(std::string_view a, std::string_view b) const;

  /// Listed (non-zero or explicitly given) pairs, ordered by flattened index.
  [[nodiscard]] std::vector<CompatEntry> compat_entries() const;

  [[nodiscard]] MorphStructure with_priority(std::string_view alt_id, int priority) const;
  [[nodiscard]] MorphStructure with_compatibility(std::string_view a, std::string_view b, int level) const;

 private:
  [[nodiscard]] std::size_t flat(AltRef ref) const { return offsets_[ref.component] + ref.alternative; }
  void set_level(AltRef a, AltRef b, int level);

  OrdinalScales scales_;
  std::vector<Component> components_;
  std::vector<std::size_t> offsets_;
  std::size_t total_ = 0;
  std::vector<int> compat_;
  std::vector<bool> listed_;
};

/// One alternative index per component, in component order.
struct Composition {
  std::vector<std::size_t> picks;

  friend auto operator<=>(const Composition&, const Composition&) = default;
};

Composition make_composition(const MorphStructure& ms, const std::vector<std::string>& alt_ids);
void validate_composition(const MorphStructure& ms, const Composition& c);
std::string format_composition(const MorphStructure& ms, const Composition& c);

/// N(S) = (w; n1..nk).
struct QualityVector {
  int w = 0;
  std::vector<int> n;

  friend bool operator==(const QualityVector&, const QualityVector&) = default;
};

/// "(w; n1,n2,...)".
std::string to_string(const QualityVector& q);

enum class Verdict { dominates, dominated, equal, incomparable };

const char* to_string(Verdict v);

/// a >= b iff a.w >= b.w and every prefix sum of a.n is >= the matching prefix
/// sum of b.n. Both vectors must have the same length and the same total.
Verdict compare_quality(const QualityVector& a, const QualityVector& b);

/// Counts over an ordinal assessment scale; {1,1,2} is (2,1,0).
struct MultisetEstimate {
  std::vector<int> counts;

  [[nodiscard]] int total() const;
  friend bool operator==(const MultisetEstimate&, const MultisetEstimate&) = default;
};

std::string to_string(const MultisetEstimate& e);

/// Position 1..8 of a three-element estimate over a three-level scale on the
/// linearized chain (3,0,0) > (2,1,0) > (1,2,0) > (0,3,0) > (1,1,1) >
/// (0,2,1) > (0,1,2) > (0,0,3). Throws unsupported_estimate for anything
/// else, including the non-interval multisets (2,0,1) and (1,0,2).
int chain_index(const MultisetEstimate& e);

/// Input whose chain index is the lower median of all chain indices.
MultisetEstimate aggregate_median(const std::vector<MultisetEstimate>& es);

/// Element-wise sum of counts.
MultisetEstimate aggregate_integrated(const std::vector<MultisetEstimate>& es);

}  // namespace rekit
