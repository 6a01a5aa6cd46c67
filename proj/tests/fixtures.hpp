#pragma once

// Worked instances transcribed by hand, kept separate from the bundled JSON
// so the two transcriptions can be checked against each other.

#include <string>
#include <vector>

#include "rekit/netassign.hpp"
#include "rekit/planner.hpp"
#include "rekit/recolor.hpp"
#include "rekit/synthesis.hpp"
#include "rekit/trees.hpp"

namespace fixture {

using rekit::Rational;

inline rekit::MorphStructure fig16() {
  using rekit::Component;
  std::vector<Component> comps = {
      {"X", {{"X1", 3}, {"X2", 2}}},
      {"Y", {{"Y1", 1}, {"Y2", 3}}},
      {"Z", {{"Z1", 4}, {"Z2", 1}, {"Z3", 3}}},
      {"U", {{"U1", 1}, {"U2", 2}, {"U3", 4}}},
      {"V", {{"V1", 4}, {"V2", 2}, {"V3", 3}}},
  };
  const std::vector<std::string> cols = {"Y1", "Y2", "Z1", "Z2", "Z3", "U1", "U2", "U3", "V1", "V2", "V3"};
  struct Row {
    std::string id;
    std::size_t start;
    std::vector<int> levels;
  };
  const std::vector<Row> rows = {
      {"X1", 0, {3, 3, 2, 3, 2, 3, 3, 0, 3, 3, 2}},
      {"X2", 0, {3, 3, 3, 3, 3, 3, 3, 2, 3, 3, 1}},
      {"Y1", 2, {3, 3, 3, 3, 3, 2, 3, 3, 1}},
      {"Y2", 2, {3, 3, 3, 3, 2, 1, 3, 2, 2}},
      {"Z1", 5, {3, 1, 0, 3, 1, 1}},
      {"Z2", 5, {3, 0, 2, 3, 3, 1}},
      {"Z3", 5, {2, 3, 0, 3, 3, 1}},
      {"U1", 8, {3, 1, 0}},
      {"U2", 8, {2, 3, 1}},
      {"U3", 8, {1, 3, 2}},
  };
  std::vector<rekit::CompatEntry> compat;
  for (const auto& r : rows)
    for (std::size_t k = 0; k < r.levels.size(); ++k) compat.push_back({r.id, cols[r.start + k], r.levels[k]});
  return rekit::MorphStructure({4, 3}, comps, compat);
}

inline std::vector<std::string> s2() { return {"X2", "Y1", "Z3", "U2", "V2"}; }

inline rekit::ActionCatalog table6_catalog() {
  using rekit::BottleneckKind;
  rekit::ActionCatalog c;
  c.add(BottleneckKind::element, "X2", "", 1, {3, 4});
  c.add(BottleneckKind::element, "Z3", "", 2, {1, 2});
  c.add(BottleneckKind::element, "Z3", "", 1, {5, 4});
  c.add(BottleneckKind::element, "U2", "", 1, {4, 4});
  c.add(BottleneckKind::element, "V2", "", 1, {2, 4});
  return c;
}

inline rekit::MckpInstance table6(Rational budget) {
  auto ms = fig16();
  auto c = rekit::make_composition(ms, s2());
  auto inst = rekit::generate_actions(rekit::detect_bottlenecks(ms, c), table6_catalog(), budget);
  inst.granularity = 1;
  return inst;
}

inline rekit::SteinerInstance table9(Rational budget) {
  auto r = [](const char* s) { return rekit::parse_rational(s); };
  rekit::SteinerInstance s;
  s.budget = budget;
  s.regions = {
      {"1", {{"s11", r("1.5"), r("3.1")}, {"s12", r("1.4"), r("1.2")}}},
      {"2", {{"s21", r("1.3"), r("2.0")}}},
      {"3", {{"s31", r("1.4"), r("2.4")}, {"s32", r("1.3"), r("1.8")}}},
      {"4", {{"s41", r("1.2"), r("1.5")}}},
  };
  return s;
}

inline std::vector<rekit::RegionPoint> table11() {
  return {{"A1", {10, 10, 9}}, {"A2", {8, 9, 10}}, {"A3", {6, 7, 4}}, {"A4", {3, 8, 8}}, {"A5", {4, 4, 5}},
          {"A6", {1, 1, 9}},   {"A7", {4, 5, 4}},  {"A8", {5, 6, 4}}, {"A9", {2, 4, 5}}};
}

// p q u v w; colors 1..3 stored as 0..2
inline rekit::RecolorInstance fig18() {
  rekit::RecolorInstance inst;
  inst.graph = {5, {{0, 1}, {1, 3}, {2, 3}, {0, 4}, {4, 3}, {1, 4}, {4, 2}}};
  inst.colors = 3;
  inst.initial = {1, 2, 2, 1, 0};
  inst.goal = {0, 1, 1, 0, 2};
  inst.cost = rekit::unit_costs(5, 3);
  return inst;
}

inline rekit::AssignmentInstance table13() {
  rekit::AssignmentInstance a;
  a.users = {{1, 30, 165, 5, 10, 2, 5},  {2, 58, 174, 5, 5, 1, 9},   {3, 95, 156, 0, 6, 1, 6},
             {4, 52, 134, 5, 6, 1, 8},   {5, 85, 134, 3, 6, 1, 7},   {6, 27, 109, 7, 8, 3, 5},
             {7, 55, 105, 2, 7, 2, 10},  {8, 98, 89, 3, 10, 1, 10},  {9, 25, 65, 2, 7, 3, 5},
             {10, 52, 81, 1, 10, 1, 8},  {11, 65, 25, 7, 6, 2, 9},   {12, 93, 39, 1, 10, 1, 10},
             {13, 172, 26, 2, 10, 2, 7}};
  a.points = {{1, 50, 157, 10, 30, 4, 10}, {2, 72, 102, 10, 42, 6, 10}, {3, 45, 52, 10, 45, 10, 10}};
  return a;
}

inline rekit::AssignmentInstance table14() {
  rekit::AssignmentInstance a;
  a.users = {{14, 110, 169, 5, 7, 2, 5}, {15, 145, 181, 3, 5, 2, 4}, {16, 170, 161, 5, 7, 2, 4},
             {17, 120, 140, 6, 4, 2, 6}, {18, 150, 136, 3, 6, 2, 7}, {19, 175, 125, 1, 8, 3, 5},
             {20, 183, 91, 4, 4, 3, 5},  {21, 135, 59, 4, 13, 3, 4}, {22, 147, 79, 5, 7, 3, 16},
             {23, 172, 26, 2, 10, 2, 7}, {24, 165, 50, 3, 7, 3, 3},  {25, 127, 95, 5, 7, 2, 5}};
  a.points = {{4, 150, 165, 10, 30, 5, 15}, {5, 140, 112, 10, 32, 5, 8}, {6, 147, 47, 10, 30, 5, 15}};
  return a;
}

}  // namespace fixture
