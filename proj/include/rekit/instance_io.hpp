#pragma once

// JSON instance documents. Every document carries "kind" and "schema"; the
// payload mirrors the library types. Rationals may be written as numbers or
// as "p/q" / decimal strings.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "rekit/netassign.hpp"
#include "rekit/planner.hpp"
#include "rekit/recolor.hpp"
#include "rekit/restructure.hpp"
#include "rekit/synthesis.hpp"
#include "rekit/trees.hpp"

namespace rekit::io {

using Json = nlohmann::json;

inline constexpr int kSchema = 1;

/// Reads and parses a file; throws Error(invalid_input) on I/O or syntax
/// problems.
Json load_json(const std::string& path);

/// Validates "kind" and "schema" and returns the kind.
std::string document_kind(const Json& doc);

Rational get_rational(const Json& v, const std::string& where);
/// Integer when whole, JSON number when the decimal terminates, "p/q" string
/// otherwise.
Json rational_json(const Rational& r);

struct CatalogRow {
  BottleneckKind kind = BottleneckKind::element;
  std::string first;
  std::string second;
  int proposed = 0;
  ActionCost cost;
};

struct MorphologyDoc {
  MorphStructure structure;
  /// Optional current composition, as alternative ids.
  std::vector<std::string> composition;
  std::vector<CatalogRow> catalog;
  std::optional<Rational> budget;

  [[nodiscard]] ActionCatalog action_catalog() const;
};

struct MckpDoc {
  MckpInstance instance;
  /// Optional structure and composition the actions apply to.
  std::optional<MorphologyDoc> base;
};

struct RestructureDoc {
  bool choice = false;
  SubsetRestructure subset;
  /// Knapsack feasibility for the subset variant.
  std::vector<Rational> weight;
  std::optional<Rational> capacity;
  ChoiceRestructure mckp;
};

struct RecolorDoc {
  RecolorInstance instance;
  std::vector<std::string> vertices;
  std::vector<std::string> colors;
  bool unit_cost = true;
};

struct TreeDoc {
  std::vector<std::optional<std::size_t>> parent;
  std::vector<Rational> weight;
  std::vector<std::string> names;
  std::size_t count = 1;

  [[nodiscard]] RootedTree tree() const { return RootedTree(parent, weight); }
};

struct ClusterDoc {
  std::vector<RegionPoint> points;
  double threshold = 0;
  Linkage linkage = Linkage::single;
};

struct NetworkDoc {
  AssignmentInstance instance;
  OutrankParams params;
};

MorphologyDoc parse_morphology(const Json& doc);
MckpDoc parse_mckp(const Json& doc);
RestructureDoc parse_restructure(const Json& doc);
RecolorDoc parse_recolor(const Json& doc);
TreeDoc parse_tree(const Json& doc);
SteinerInstance parse_steiner(const Json& doc);
ClusterDoc parse_cluster(const Json& doc);
NetworkDoc parse_network(const Json& doc);

Json to_json(const MorphologyDoc& d);
Json to_json(const MckpDoc& d);
Json to_json(const RestructureDoc& d);
Json to_json(const RecolorDoc& d);
Json to_json(const TreeDoc& d);
Json to_json(const SteinerInstance& d);
Json to_json(const ClusterDoc& d);
Json to_json(const NetworkDoc& d);

}  // namespace rekit::io
