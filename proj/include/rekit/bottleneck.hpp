#pragma once

#include <compare>
#include <string>

namespace rekit {

enum class BottleneckKind { element, pair };

/// A proposed improvement of one composition element (priority r -> lower r)
/// or of one element pair (compatibility w -> higher w). `second` is empty for
/// element bottlenecks.
struct Bottleneck {
  BottleneckKind kind = BottleneckKind::element;
  std::string first;
  std::string second;
  int current = 0;
  int proposed = 0;

  friend auto operator<=>(const Bottleneck&, const Bottleneck&) = default;
};

/// "X2: 2=>1" or "(U1,V2): 1=>3".
std::string to_string(const Bottleneck& b);

/// The subject part: "X2" or "(U1,V2)".
std::string subject_of(const Bottleneck& b);

}  // namespace rekit
