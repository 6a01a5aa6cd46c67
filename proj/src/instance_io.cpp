#include "rekit/instance_io.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "rekit/error.hpp"

namespace rekit::io {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorKind::invalid_input, msg); }

const Json& req(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) bad(where + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) bad(where + ": missing field '" + key + "'");
  return *it;
}

const Json* opt(const Json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return nullptr;
  return &*it;
}

const Json& arr(const Json& v, const std::string& where) {
  if (!v.is_array()) bad(where + ": expected an array");
  return v;
}

std::string str(const Json& v, const std::string& where) {
  if (!v.is_string()) bad(where + ": expected a string");
  return v.get<std::string>();
}

long long integer(const Json& v, const std::string& where) {
  if (!v.is_number_integer()) bad(where + ": expected an integer");
  return v.get<long long>();
}

std::size_t index(const Json& v, const std::string& where) {
  auto i = integer(v, where);
  if (i < 0) bad(where + ": expected a non-negative integer");
  return static_cast<std::size_t>(i);
}

double real(const Json& v, const std::string& where) {
  if (!v.is_number()) bad(where + ": expected a number");
  double d = v.get<double>();
  if (!std::isfinite(d)) bad(where + ": number is not finite");
  return d;
}

std::vector<Rational> rationals(const Json& v, const std::string& where) {
  std::vector<Rational> out;
  for (const auto& x : arr(v, where)) out.push_back(get_rational(x, where));
  return out;
}

Json rationals_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(rational_json(r));
  return out;
}

Json header(const char* kind) {
  Json j = Json::object();
  j["kind"] = kind;
  j["schema"] = kSchema;
  return j;
}

Sense parse_sense(const Json& v, const std::string& where) {
  auto s = str(v, where);
  if (s == "max") return Sense::max;
  if (s == "min") return Sense::min;
  bad(where + ": sense must be 'max' or 'min'");
}

Proximity parse_proximity(const Json& obj) {
  const auto* p = opt(obj, "proximity");
  if (!p) return Proximity::element_difference;
  auto s = str(*p, "proximity");
  if (s == "element_difference") return Proximity::element_difference;
  if (s == "objective_gap") return Proximity::objective_gap;
  bad("proximity must be 'element_difference' or 'objective_gap'");
}

const char* proximity_name(Proximity p) {
  return p == Proximity::objective_gap ? "objective_gap" : "element_difference";
}

std::optional<Rational> opt_rational(const Json& obj, const char* key) {
  if (const auto* v = opt(obj, key)) return get_rational(*v, key);
  return std::nullopt;
}

// A subject is an alternative id or a two-element array naming a pair.
void parse_subject(const Json& v, BottleneckKind& kind, std::string& first, std::string& second,
                   const std::string& where) {
  if (v.is_string()) {
    kind = BottleneckKind::element;
    first = v.get<std::string>();
    second.clear();
  } else if (v.is_array() && v.size() == 2) {
    kind = BottleneckKind::pair;
    first = str(v[0], where);
    second = str(v[1], where);
  } else {
    bad(where + ": subject must be an id or a pair of ids");
  }
}

Json subject_json(BottleneckKind kind, const std::string& first, const std::string& second) {
  if (kind == BottleneckKind::element) return first;
  return Json::array({first, second});
}

MorphologyDoc morphology_payload(const Json& doc) {
  const std::string w = "morphology";
  const auto& sc = req(doc, "scales", w);
  OrdinalScales scales{static_cast<int>(integer(req(sc, "priority", "scales"), "scales.priority")),
                       static_cast<int>(integer(req(sc, "compat", "scales"), "scales.compat"))};
  std::vector<Component> comps;
  for (const auto& c : arr(req(doc, "components", w), "components")) {
    Component comp{str(req(c, "id", "component"), "component.id"), {}};
    for (const auto& a : arr(req(c, "alternatives", "component " + comp.id), "alternatives"))
      comp.alternatives.push_back({str(req(a, "id", "alternative"), "alternative.id"),
                                   static_cast<int>(integer(req(a, "priority", "alternative"), "priority"))});
    comps.push_back(std::move(comp));
  }
  std::vector<CompatEntry> compat;
  if (const auto* cs = opt(doc, "compat")) {
    for (const auto& e : arr(*cs, "compat")) {
      if (!e.is_array() || e.size() != 3) bad("compat entries are [first, second, level]");
      compat.push_back({str(e[0], "compat"), str(e[1], "compat"), static_cast<int>(integer(e[2], "compat level"))});
    }
  }
  MorphologyDoc d{MorphStructure(scales, std::move(comps), compat), {}, {}, std::nullopt};
  if (const auto* c = opt(doc, "composition"))
    for (const auto& id : arr(*c, "composition")) d.composition.push_back(str(id, "composition"));
  if (!d.composition.empty()) validate_composition(d.structure, make_composition(d.structure, d.composition));
  if (const auto* cat = opt(doc, "catalog")) {
    for (const auto& e : arr(*cat, "catalog")) {
      CatalogRow row;
      parse_subject(req(e, "subject", "catalog"), row.kind, row.first, row.second, "catalog");
      row.proposed = static_cast<int>(integer(req(e, "proposed", "catalog"), "catalog.proposed"));
      row.cost = {get_rational(req(e, "cost", "catalog"), "catalog.cost"),
                  get_rational(req(e, "profit", "catalog"), "catalog.profit")};
      d.catalog.push_back(std::move(row));
    }
  }
  d.budget = opt_rational(doc, "budget");
  return d;
}

Json morphology_body(const MorphologyDoc& d, Json j) {
  const auto& ms = d.structure;
  j["scales"] = {{"priority", ms.scales().priority_levels}, {"compat", ms.scales().compat_levels}};
  Json comps = Json::array();
  for (const auto& c : ms.components()) {
    Json alts = Json::array();
    for (const auto& a : c.alternatives) alts.push_back({{"id", a.id}, {"priority", a.priority}});
    comps.push_back({{"id", c.id}, {"alternatives", alts}});
  }
  j["components"] = comps;
  Json compat = Json::array();
  for (const auto& e : ms.compat_entries()) compat.push_back(Json::array({e.first, e.second, e.level}));
  j["compat"] = compat;
  if (!d.composition.empty()) j["composition"] = d.composition;
  if (!d.catalog.empty()) {
    Json cat = Json::array();
    for (const auto& r : d.catalog)
      cat.push_back({{"subject", subject_json(r.kind, r.first, r.second)},
                     {"proposed", r.proposed},
                     {"cost", rational_json(r.cost.cost)},
                     {"profit", rational_json(r.cost.profit)}});
    j["catalog"] = cat;
  }
  if (d.budget) j["budget"] = rational_json(*d.budget);
  return j;
}

// Wraps a payload parser so JSON library exceptions surface as input errors.
template <typename F>
auto guarded(const Json& doc, const char* kind, F&& f) {
  if (document_kind(doc) != kind) bad(std::string("expected a '") + kind + "' document");
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    bad(std::string(kind) + ": " + e.what());
  }
}

}  // namespace

Json load_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bad("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const nlohmann::json::exception& e) {
    bad("'" + path + "' is not valid JSON: " + e.what());
  }
}

std::string document_kind(const Json& doc) {
  if (!doc.is_object()) bad("document must be a JSON object");
  auto kind = str(req(doc, "kind", "document"), "kind");
  static const std::set<std::string> kinds{"morphology", "mckp",    "restructure", "recolor",
                                           "tree",       "steiner", "cluster",     "network"};
  if (!kinds.count(kind)) bad("unknown kind '" + kind + "'");
  if (integer(req(doc, "schema", "document"), "schema") != kSchema)
    bad("unsupported schema version (expected " + std::to_string(kSchema) + ")");
  return kind;
}

Rational get_rational(const Json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (v.is_number_float()) return rational_from_double(v.get<double>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  bad(where + ": expected a number");
}

Json rational_json(const Rational& r) {
  if (r.denominator() == 1) return r.numerator();
  if (is_terminating_decimal(r)) return std::stod(to_string(r));
  return to_string(r);
}

ActionCatalog MorphologyDoc::action_catalog() const {
  ActionCatalog c;
  for (const auto& r : catalog) c.add(r.kind, r.first, r.second, r.proposed, r.cost);
  return c;
}

MorphologyDoc parse_morphology(const Json& doc) {
  return guarded(doc, "morphology", [&] { return morphology_payload(doc); });
}

Json to_json(const MorphologyDoc& d) { return morphology_body(d, header("morphology")); }

MckpDoc parse_mckp(const Json& doc) {
  return guarded(doc, "mckp", [&] {
    MckpDoc d;
    auto& inst = d.instance;
    inst.budget = get_rational(req(doc, "budget", "mckp"), "budget");
    if (auto g = opt_rational(doc, "granularity")) inst.granularity = *g;
    if (const auto* s = opt(doc, "senses"))
      for (const auto& x : arr(*s, "senses")) inst.senses.push_back(parse_sense(x, "senses"));
    for (const auto& g : arr(req(doc, "groups", "mckp"), "groups")) {
      MckpGroup group{str(req(g, "id", "group"), "group.id"), {}};
      for (const auto& it : arr(req(g, "items", "group " + group.id), "items")) {
        MckpItem item;
        item.id = str(req(it, "id", "item"), "item.id");
        item.cost = get_rational(req(it, "cost", "item " + item.id), "cost");
        if (const auto* p = opt(it, "profit")) item.profit = get_rational(*p, "profit");
        if (const auto* c = opt(it, "criteria")) item.criteria = rationals(*c, "criteria");
        if (const auto* a = opt(it, "action")) {
          Bottleneck b;
          parse_subject(req(*a, "subject", "action"), b.kind, b.first, b.second, "action");
          b.current = static_cast<int>(integer(req(*a, "current", "action"), "action.current"));
          b.proposed = static_cast<int>(integer(req(*a, "proposed", "action"), "action.proposed"));
          item.action = b;
        }
        group.items.push_back(std::move(item));
      }
      inst.groups.push_back(std::move(group));
    }
    inst.validate();
    if (const auto* base = opt(doc, "base")) {
      d.base = morphology_payload(*base);
      if (d.base->composition.empty()) bad("base: a composition is required");
    }
    return d;
  });
}

Json to_json(const MckpDoc& d) {
  Json j = header("mckp");
  const auto& inst = d.instance;
  j["budget"] = rational_json(inst.budget);
  j["granularity"] = rational_json(inst.granularity);
  if (!inst.senses.empty()) {
    Json s = Json::array();
    for (auto x : inst.senses) s.push_back(x == Sense::max ? "max" : "min");
    j["senses"] = s;
  }
  Json groups = Json::array();
  for (const auto& g : inst.groups) {
    Json items = Json::array();
    for (const auto& it : g.items) {
      Json ji = {{"id", it.id}, {"cost", rational_json(it.cost)}, {"profit", rational_json(it.profit)}};
      if (!it.criteria.empty()) ji["criteria"] = rationals_json(it.criteria);
      if (it.action)
        ji["action"] = {{"subject", subject_json(it.action->kind, it.action->first, it.action->second)},
                        {"current", it.action->current},
                        {"proposed", it.action->proposed}};
      items.push_back(ji);
    }
    groups.push_back({{"id", g.id}, {"items", items}});
  }
  j["groups"] = groups;
  if (d.base) j["base"] = morphology_body(*d.base, Json::object());
  return j;
}

RestructureDoc parse_restructure(const Json& doc) {
  return guarded(doc, "restructure", [&] {
    RestructureDoc d;
    auto variant = str(req(doc, "variant", "restructure"), "variant");
    if (variant == "subset") {
      auto flags = [&](const char* key) {
        std::vector<bool> out;
        for (const auto& x : arr(req(doc, key, "restructure"), key)) {
          auto v = integer(x, key);
          if (v != 0 && v != 1) bad(std::string(key) + ": entries must be 0 or 1");
          out.push_back(v == 1);
        }
        return out;
      };
      auto& s = d.subset;
      s.initial = flags("initial");
      s.goal = flags("goal");
      s.move_cost = rationals(req(doc, "move_cost", "restructure"), "move_cost");
      s.budget = opt_rational(doc, "budget");
      s.proximity = parse_proximity(doc);
      if (const auto* v = opt(doc, "value")) s.value = rationals(*v, "value");
      if (const auto* w = opt(doc, "weight")) d.weight = rationals(*w, "weight");
      d.capacity = opt_rational(doc, "capacity");
      if (d.capacity) {
        if (d.weight.size() != s.initial.size()) bad("restructure: one weight per item required with a capacity");
        s.feasible = knapsack_constraint(d.weight, *d.capacity);
      }
    } else if (variant == "choice") {
      d.choice = true;
      auto& c = d.mckp;
      for (const auto& g : arr(req(doc, "groups", "restructure"), "groups")) {
        std::vector<ChoiceItem> items;
        for (const auto& it : arr(g, "group"))
          items.push_back({get_rational(req(it, "cost", "item"), "cost"), get_rational(req(it, "profit", "item"), "profit")});
        c.groups.push_back(std::move(items));
      }
      for (const auto& x : arr(req(doc, "initial", "restructure"), "initial")) c.initial.push_back(index(x, "initial"));
      for (const auto& x : arr(req(doc, "goal", "restructure"), "goal")) c.goal.push_back(index(x, "goal"));
      c.switch_cost = rationals(req(doc, "switch_cost", "restructure"), "switch_cost");
      c.budget = opt_rational(doc, "budget");
      c.proximity = parse_proximity(doc);
      c.capacity = opt_rational(doc, "capacity");
    } else {
      bad("restructure: variant must be 'subset' or 'choice'");
    }
    return d;
  });
}

Json to_json(const RestructureDoc& d) {
  Json j = header("restructure");
  if (!d.choice) {
    const auto& s = d.subset;
    j["variant"] = "subset";
    auto flags = [](const std::vector<bool>& v) {
      Json out = Json::array();
      for (bool b : v) out.push_back(b ? 1 : 0);
      return out;
    };
    j["initial"] = flags(s.initial);
    j["goal"] = flags(s.goal);
    j["move_cost"] = rationals_json(s.move_cost);
    if (s.budget) j["budget"] = rational_json(*s.budget);
    j["proximity"] = proximity_name(s.proximity);
    if (!s.value.empty()) j["value"] = rationals_json(s.value);
    if (!d.weight.empty()) j["weight"] = rationals_json(d.weight);
    if (d.capacity) j["capacity"] = rational_json(*d.capacity);
  } else {
    const auto& c = d.mckp;
    j["variant"] = "choice";
    Json groups = Json::array();
    for (const auto& g : c.groups) {
      Json items = Json::array();
      for (const auto& it : g) items.push_back({{"cost", rational_json(it.cost)}, {"profit", rational_json(it.profit)}});
      groups.push_back(items);
    }
    j["groups"] = groups;
    j["initial"] = c.initial;
    j["goal"] = c.goal;
    j["switch_cost"] = rationals_json(c.switch_cost);
    if (c.budget) j["budget"] = rational_json(*c.budget);
    j["proximity"] = proximity_name(c.proximity);
    if (c.capacity) j["capacity"] = rational_json(*c.capacity);
  }
  return j;
}

RecolorDoc parse_recolor(const Json& doc) {
  return guarded(doc, "recolor", [&] {
    RecolorDoc d;
    for (const auto& v : arr(req(doc, "vertices", "recolor"), "vertices")) d.vertices.push_back(str(v, "vertices"));
    for (const auto& c : arr(req(doc, "colors", "recolor"), "colors")) d.colors.push_back(str(c, "colors"));
    auto lookup = [](const std::vector<std::string>& names, const Json& v, const char* what) {
      auto s = str(v, what);
      for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == s) return i;
      bad(std::string("recolor: unknown ") + what + " '" + s + "'");
    };
    if (std::set<std::string>(d.vertices.begin(), d.vertices.end()).size() != d.vertices.size())
      bad("recolor: duplicate vertex name");
    if (std::set<std::string>(d.colors.begin(), d.colors.end()).size() != d.colors.size())
      bad("recolor: duplicate color name");
    auto& inst = d.instance;
    inst.graph.vertex_count = d.vertices.size();
    inst.colors = d.colors.size();
    for (const auto& e : arr(req(doc, "edges", "recolor"), "edges")) {
      if (!e.is_array() || e.size() != 2) bad("recolor: edges are [u, v]");
      inst.graph.edges.emplace_back(lookup(d.vertices, e[0], "vertex"), lookup(d.vertices, e[1], "vertex"));
    }
    for (const auto& c : arr(req(doc, "initial", "recolor"), "initial")) inst.initial.push_back(lookup(d.colors, c, "color"));
    for (const auto& c : arr(req(doc, "goal", "recolor"), "goal")) inst.goal.push_back(lookup(d.colors, c, "color"));
    const auto& cost = req(doc, "cost", "recolor");
    if (cost.is_string() && cost.get<std::string>() == "unit") {
      inst.cost = unit_costs(inst.graph.vertex_count, inst.colors);
    } else {
      d.unit_cost = false;
      for (const auto& m : arr(cost, "cost")) {
        CostMatrix cm;
        for (const auto& row : arr(m, "cost matrix")) cm.push_back(rationals(row, "cost row"));
        inst.cost.push_back(std::move(cm));
      }
    }
    inst.budget = opt_rational(doc, "budget");
    inst.validate();
    return d;
  });
}

Json to_json(const RecolorDoc& d) {
  Json j = header("recolor");
  const auto& inst = d.instance;
  j["vertices"] = d.vertices;
  j["colors"] = d.colors;
  Json edges = Json::array();
  for (auto [u, v] : inst.graph.edges) edges.push_back(Json::array({d.vertices[u], d.vertices[v]}));
  j["edges"] = edges;
  Json init = Json::array(), goal = Json::array();
  for (auto c : inst.initial) init.push_back(d.colors[c]);
  for (auto c : inst.goal) goal.push_back(d.colors[c]);
  j["initial"] = init;
  j["goal"] = goal;
  if (d.unit_cost) {
    j["cost"] = "unit";
  } else {
    Json ms = Json::array();
    for (const auto& m : inst.cost) {
      Json rows = Json::array();
      for (const auto& r : m) rows.push_back(rationals_json(r));
      ms.push_back(rows);
    }
    j["cost"] = ms;
  }
  if (inst.budget) j["budget"] = rational_json(*inst.budget);
  return j;
}

TreeDoc parse_tree(const Json& doc) {
  return guarded(doc, "tree", [&] {
    TreeDoc d;
    const auto& nodes = arr(req(doc, "nodes", "tree"), "nodes");
    for (const auto& n : nodes) d.names.push_back(str(req(n, "id", "node"), "node.id"));
    if (std::set<std::string>(d.names.begin(), d.names.end()).size() != d.names.size()) bad("tree: duplicate node id");
    for (const auto& n : nodes) {
      const auto* p = opt(n, "parent");
      if (!p) {
        d.parent.push_back(std::nullopt);
      } else {
        auto name = str(*p, "parent");
        auto it = std::find(d.names.begin(), d.names.end(), name);
        if (it == d.names.end()) bad("tree: unknown parent '" + name + "'");
        d.parent.push_back(static_cast<std::size_t>(it - d.names.begin()));
      }
      const auto* w = opt(n, "weight");
      d.weight.push_back(w ? get_rational(*w, "weight") : Rational(0));
    }
    if (const auto* c = opt(doc, "count")) d.count = index(*c, "count");
    (void)d.tree();
    return d;
  });
}

Json to_json(const TreeDoc& d) {
  Json j = header("tree");
  Json nodes = Json::array();
  for (std::size_t v = 0; v < d.names.size(); ++v) {
    Json n = {{"id", d.names[v]}, {"weight", rational_json(d.weight[v])}};
    n["parent"] = d.parent[v] ? Json(d.names[*d.parent[v]]) : Json(nullptr);
    nodes.push_back(n);
  }
  j["nodes"] = nodes;
  j["count"] = d.count;
  return j;
}

SteinerInstance parse_steiner(const Json& doc) {
  return guarded(doc, "steiner", [&] {
    SteinerInstance s;
    s.budget = get_rational(req(doc, "budget", "steiner"), "budget");
    if (auto g = opt_rational(doc, "granularity")) s.granularity = *g;
    for (const auto& r : arr(req(doc, "regions", "steiner"), "regions")) {
      SteinerRegion region{str(req(r, "id", "region"), "region.id"), {}};
      for (const auto& c : arr(req(r, "candidates", "region " + region.id), "candidates"))
        region.candidates.push_back({str(req(c, "id", "candidate"), "candidate.id"),
                                     get_rational(req(c, "cost", "candidate"), "cost"),
                                     get_rational(req(c, "profit", "candidate"), "profit")});
      s.regions.push_back(std::move(region));
    }
    steiner_to_mckp(s).validate();
    return s;
  });
}

Json to_json(const SteinerInstance& s) {
  Json j = header("steiner");
  j["budget"] = rational_json(s.budget);
  j["granularity"] = rational_json(s.granularity);
  Json regions = Json::array();
  for (const auto& r : s.regions) {
    Json cands = Json::array();
    for (const auto& c : r.candidates)
      cands.push_back({{"id", c.id}, {"cost", rational_json(c.cost)}, {"profit", rational_json(c.profit)}});
    regions.push_back({{"id", r.id}, {"candidates", cands}});
  }
  j["regions"] = regions;
  return j;
}

ClusterDoc parse_cluster(const Json& doc) {
  return guarded(doc, "cluster", [&] {
    ClusterDoc d;
    std::set<std::string> ids;
    for (const auto& p : arr(req(doc, "points", "cluster"), "points")) {
      RegionPoint rp{str(req(p, "id", "point"), "point.id"), {}};
      if (!ids.insert(rp.id).second) bad("cluster: duplicate point id '" + rp.id + "'");
      for (const auto& x : arr(req(p, "params", "point " + rp.id), "params")) rp.params.push_back(real(x, "params"));
      d.points.push_back(std::move(rp));
    }
    if (const auto* t = opt(doc, "threshold")) d.threshold = real(*t, "threshold");
    if (const auto* l = opt(doc, "linkage")) {
      auto s = str(*l, "linkage");
      if (s == "single") d.linkage = Linkage::single;
      else if (s == "average") d.linkage = Linkage::average;
      else if (s == "complete") d.linkage = Linkage::complete;
      else bad("cluster: linkage must be single, average or complete");
    }
    return d;
  });
}

Json to_json(const ClusterDoc& d) {
  Json j = header("cluster");
  Json pts = Json::array();
  for (const auto& p : d.points) pts.push_back({{"id", p.id}, {"params", p.params}});
  j["points"] = pts;
  j["threshold"] = d.threshold;
  j["linkage"] = to_string(d.linkage);
  return j;
}

NetworkDoc parse_network(const Json& doc) {
  return guarded(doc, "network", [&] {
    NetworkDoc d;
    auto& inst = d.instance;
    for (const auto& u : arr(req(doc, "users", "network"), "users")) {
      NetUser x;
      x.id = static_cast<int>(integer(req(u, "id", "user"), "user.id"));
      auto w = "user " + std::to_string(x.id);
      x.x = real(req(u, "x", w), "x");
      x.y = real(req(u, "y", w), "y");
      x.z = real(req(u, "z", w), "z");
      x.bandwidth = real(req(u, "bandwidth", w), "bandwidth");
      x.priority = static_cast<int>(integer(req(u, "priority", w), "priority"));
      x.reliability = real(req(u, "reliability", w), "reliability");
      inst.users.push_back(x);
    }
    for (const auto& p : arr(req(doc, "points", "network"), "points")) {
      AccessPoint x;
      x.id = static_cast<int>(integer(req(p, "id", "point"), "point.id"));
      auto w = "access point " + std::to_string(x.id);
      x.x = real(req(p, "x", w), "x");
      x.y = real(req(p, "y", w), "y");
      x.z = real(req(p, "z", w), "z");
      x.capacity = real(req(p, "capacity", w), "capacity");
      x.max_users = static_cast<int>(integer(req(p, "max_users", w), "max_users"));
      x.reliability = real(req(p, "reliability", w), "reliability");
      inst.points.push_back(x);
    }
    if (const auto* l = opt(doc, "distance_limit")) inst.distance_limit = real(*l, "distance_limit");
    if (const auto* o = opt(doc, "outrank")) {
      if (const auto* a = opt(*o, "concordance")) d.params.concordance = real(*a, "concordance");
      if (const auto* b = opt(*o, "discordance")) d.params.discordance = real(*b, "discordance");
      if (const auto* w = opt(*o, "weights"))
        for (const auto& x : arr(*w, "weights")) d.params.weights.push_back(real(x, "weights"));
    }
    inst.validate();
    return d;
  });
}

Json to_json(const NetworkDoc& d) {
  Json j = header("network");
  Json users = Json::array(), points = Json::array();
  for (const auto& u : d.instance.users)
    users.push_back({{"id", u.id}, {"x", u.x}, {"y", u.y}, {"z", u.z}, {"bandwidth", u.bandwidth},
                     {"priority", u.priority}, {"reliability", u.reliability}});
  for (const auto& p : d.instance.points)
    points.push_back({{"id", p.id}, {"x", p.x}, {"y", p.y}, {"z", p.z}, {"capacity", p.capacity},
                      {"max_users", p.max_users}, {"reliability", p.reliability}});
  j["users"] = users;
  j["points"] = points;
  j["distance_limit"] = d.instance.distance_limit ? Json(*d.instance.distance_limit) : Json(nullptr);
  Json o = {{"concordance", d.params.concordance}, {"discordance", d.params.discordance}};
  if (!d.params.weights.empty()) o["weights"] = d.params.weights;
  j["outrank"] = o;
  return j;
}

}  // namespace rekit::io
