#include "rekit/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "rekit/error.hpp"
#include "rekit/instance_io.hpp"

#ifndef REKIT_INSTANCES_DIR
#define REKIT_INSTANCES_DIR "instances"
#endif

namespace rekit::cli {

namespace {

using io::Json;
namespace fs = std::filesystem;

struct Options {
  std::vector<std::string> files;
  std::optional<std::string> budget;
  std::string method = "exact";
  std::optional<double> threshold;
  std::string strategy = "separate";
  double radius = 0;
  std::optional<std::string> hmax;
  std::optional<std::size_t> count;
  std::string out;
  std::optional<long long> seed;
  std::optional<std::string> linkage;
};

[[noreturn]] void usage(const std::string& msg) { throw Error(ErrorKind::invalid_input, msg); }

// Left-aligned text table, two spaces between columns.
class Table {
 public:
  explicit Table(std::vector<std::string> head) { rows_.push_back(std::move(head)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  void print(std::ostream& os) const {
    std::vector<std::size_t> width;
    for (const auto& r : rows_)
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (width.size() <= i) width.push_back(0);
        width[i] = std::max(width[i], r[i].size());
      }
    for (const auto& r : rows_) {
      std::string line;
      for (std::size_t i = 0; i < r.size(); ++i) {
        line += r[i];
        if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
      }
      os << line << "\n";
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string strip_examples(const std::string& p) {
  const std::string prefix = "examples/";
  return p.rfind(prefix, 0) == 0 ? p.substr(prefix.size()) : p;
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(6) << v;
  return os.str();
}

Json quality_json(const QualityVector& q) { return {{"w", q.w}, {"n", q.n}, {"text", to_string(q)}}; }

Json selection_json(const MckpInstance& inst, const Selection& s) {
  Json picks = Json::array();
  for (std::size_t g = 0; g < s.chosen.size(); ++g)
    picks.push_back({{"group", inst.groups[g].id}, {"item", inst.groups[g].items[s.chosen[g]].id}});
  Json j = {{"selection", picks},
            {"cost", io::rational_json(s.total_cost)},
            {"profit", io::rational_json(s.total_profit)},
            {"plan", format_plan(inst, s)}};
  if (!inst.senses.empty()) {
    Json c = Json::array();
    for (const auto& v : criteria_totals(inst, s)) c.push_back(io::rational_json(v));
    j["criteria"] = c;
  }
  return j;
}

void print_selection(std::ostream& out, const MckpInstance& inst, const Selection& s) {
  Table t({"group", "item", "cost", "profit"});
  for (std::size_t g = 0; g < s.chosen.size(); ++g) {
    const auto& it = inst.groups[g].items[s.chosen[g]];
    t.add({inst.groups[g].id, it.id, to_string(it.cost), to_string(it.profit)});
  }
  t.print(out);
  out << "cost: " << to_string(s.total_cost) << "\n";
  out << "profit: " << to_string(s.total_profit) << "\n";
  out << "plan: " << format_plan(inst, s) << "\n";
}

Rational budget_or(const Options& o, const Rational& fallback) {
  return o.budget ? parse_rational(*o.budget) : fallback;
}

Json cmd_synth(const Options& o, const Json& doc, std::ostream& out) {
  auto d = io::parse_morphology(doc);
  const auto& ms = d.structure;
  auto r = pareto_synthesize(ms);
  std::size_t total = 1;
  for (const auto& c : ms.components()) total *= c.alternatives.size();
  (void)o;
  out << "feasible compositions: " << r.feasible_count << " of " << total << "\n";
  if (r.infeasible) throw Error(ErrorKind::infeasible, "no composition is free of incompatible pairs");
  Table t({"composition", "N(S)"});
  Json frontier = Json::array();
  for (const auto& s : r.frontier) {
    t.add({format_composition(ms, s.composition), to_string(s.quality)});
    Json ids = Json::array();
    for (std::size_t i = 0; i < s.composition.picks.size(); ++i)
      ids.push_back(ms.components()[i].alternatives[s.composition.picks[i]].id);
    frontier.push_back({{"composition", ids}, {"quality", quality_json(s.quality)}});
  }
  t.print(out);
  return {{"feasible", r.feasible_count}, {"total", total}, {"frontier", frontier}};
}

Json solve_actions(const Options& o, const MckpInstance& inst, const std::optional<io::MorphologyDoc>& base,
                   std::ostream& out) {
  Json j = {{"method", o.method}, {"budget", io::rational_json(inst.budget)}};
  out << "budget: " << to_string(inst.budget) << "  method: " << o.method << "\n";
  if (o.method == "pareto") {
    MckpInstance crit = inst;
    if (crit.senses.empty()) {
      // profit up, cost down
      crit.senses = {Sense::max, Sense::min};
      for (auto& g : crit.groups)
        for (auto& it : g.items) it.criteria = {it.profit, it.cost};
    }
    auto front = mckp_pareto(crit);
    if (front.empty()) throw Error(ErrorKind::infeasible, "no selection fits the budget");
    Table t({"plan", "cost", "criteria"});
    Json arr = Json::array();
    for (const auto& s : front) {
      std::string c;
      for (const auto& v : criteria_totals(crit, s)) c += (c.empty() ? "" : ",") + to_string(v);
      t.add({format_plan(crit, s), to_string(s.total_cost), "(" + c + ")"});
      arr.push_back(selection_json(crit, s));
    }
    t.print(out);
    j["frontier"] = arr;
    return j;
  }
  Selection s;
  if (o.method == "greedy") {
    s = mckp_greedy(inst);
  } else if (o.method == "exact") {
    s = mckp_exact(inst);
  } else if (o.method == "weighted") {
    // equal weights over the oriented criteria
    s = mckp_weighted(inst, {std::vector<Rational>(inst.senses.size(), Rational(1))});
  } else {
    usage("--method must be greedy, exact, weighted or pareto");
  }
  print_selection(out, inst, s);
  j.update(selection_json(inst, s));
  if (base) {
    auto comp = make_composition(base->structure, base->composition);
    auto before = evaluate(base->structure, comp);
    auto after = apply_actions(base->structure, comp, inst, s);
    out << "quality: " << to_string(before) << " -> " << to_string(after.quality) << "\n";
    j["quality_before"] = quality_json(before);
    j["quality_after"] = quality_json(after.quality);
  }
  return j;
}

Json cmd_improve(const Options& o, const Json& doc, std::ostream& out) {
  auto kind = io::document_kind(doc);
  if (kind == "mckp") {
    auto d = io::parse_mckp(doc);
    d.instance.budget = budget_or(o, d.instance.budget);
    d.instance.validate();
    return solve_actions(o, d.instance, d.base, out);
  }
  if (kind != "morphology") usage("improve expects a morphology or mckp document");
  auto d = io::parse_morphology(doc);
  if (d.composition.empty()) usage("improve needs a composition in the morphology document");
  auto comp = make_composition(d.structure, d.composition);
  auto catalog = d.action_catalog();
  auto found = detect_bottlenecks(d.structure, comp);
  std::vector<Bottleneck> priced;
  Json bj = Json::array();
  out << "composition: " << format_composition(d.structure, comp) << "\n";
  for (const auto& b : found) {
    bool known = catalog.find(b) != nullptr;
    if (known) priced.push_back(b);
    bj.push_back({{"bottleneck", to_string(b)}, {"priced", known}});
  }
  Table t({"bottleneck", "priced"});
  for (const auto& b : found) t.add({to_string(b), catalog.find(b) ? "yes" : "no"});
  t.print(out);
  auto inst = generate_actions(priced, catalog, budget_or(o, d.budget.value_or(Rational(0))));
  Json j = solve_actions(o, inst, d, out);
  j["bottlenecks"] = bj;
  return j;
}

Json cmd_restructure(const Options& o, const Json& doc, std::ostream& out) {
  auto d = io::parse_restructure(doc);
  std::optional<Rational> h;
  if (o.hmax) {
    if (*o.hmax == "inf" || *o.hmax == "unlimited") h.reset();
    else h = parse_rational(*o.hmax);
  }
  Json j;
  if (!d.choice) {
    if (o.hmax) d.subset.budget = h;
    auto r = restructure_subset(d.subset);
    std::string members;
    Json sol = Json::array();
    for (std::size_t e = 0; e < r.solution.size(); ++e) {
      sol.push_back(r.solution[e] ? 1 : 0);
      members += r.solution[e] ? '1' : '0';
    }
    out << "solution: " << members << "\n";
    out << "change cost: " << to_string(r.change_cost) << "\n";
    out << "proximity: " << to_string(r.proximity) << "\n";
    j = {{"solution", sol}, {"change_cost", io::rational_json(r.change_cost)},
         {"proximity", io::rational_json(r.proximity)}};
  } else {
    if (o.hmax) d.mckp.budget = h;
    auto r = restructure_mckp(d.mckp);
    Table t({"group", "initial", "goal", "result"});
    for (std::size_t g = 0; g < r.solution.size(); ++g)
      t.add({std::to_string(g), std::to_string(d.mckp.initial[g]), std::to_string(d.mckp.goal[g]),
             std::to_string(r.solution[g])});
    t.print(out);
    out << "change cost: " << to_string(r.change_cost) << "\n";
    out << "proximity: " << to_string(r.proximity) << "\n";
    j = {{"solution", r.solution}, {"change_cost", io::rational_json(r.change_cost)},
         {"proximity", io::rational_json(r.proximity)}};
  }
  auto b = d.choice ? d.mckp.budget : d.subset.budget;
  j["budget"] = b ? io::rational_json(*b) : Json(nullptr);
  return j;
}

Json cmd_recolor(const Options& o, const Json& doc, std::ostream& out) {
  auto d = io::parse_recolor(doc);
  if (o.budget) d.instance.budget = parse_rational(*o.budget);
  auto r = recolor_optimize(d.instance);
  Table t({"vertex", "initial", "goal", "result"});
  Json col = Json::array();
  for (std::size_t v = 0; v < d.vertices.size(); ++v) {
    t.add({d.vertices[v], d.colors[d.instance.initial[v]], d.colors[d.instance.goal[v]], d.colors[r.coloring[v]]});
    col.push_back(d.colors[r.coloring[v]]);
  }
  t.print(out);
  out << "goal distance: " << r.distance << "\n";
  out << "cost: " << to_string(r.cost) << "\n";
  out << "search: " << (r.exact ? "exact" : "local") << "\n";
  return {{"coloring", col}, {"distance", r.distance}, {"cost", io::rational_json(r.cost)}, {"exact", r.exact},
          {"proper", is_proper(d.instance.graph, r.coloring)}};
}

Json cmd_hotlink(const Options& o, const Json& doc, std::ostream& out) {
  auto d = io::parse_tree(doc);
  auto tree = d.tree();
  auto plan = assign_hotlinks_greedy(tree, o.count.value_or(d.count));
  Table t({"step", "target", "gain", "expected length"});
  t.add({"0", "-", "-", to_string(plan.lengths[0])});
  Json links = Json::array();
  for (std::size_t i = 0; i < plan.hotlinks.size(); ++i) {
    const auto& h = plan.hotlinks[i];
    t.add({std::to_string(i + 1), d.names[h.target], to_string(h.gain), to_string(plan.lengths[i + 1])});
    links.push_back({{"target", d.names[h.target]}, {"gain", io::rational_json(h.gain)}});
  }
  t.print(out);
  if (plan.short_count) out << "no eligible target left; fewer hotlinks placed than requested\n";
  Json lengths = Json::array();
  for (const auto& l : plan.lengths) lengths.push_back(io::rational_json(l));
  return {{"hotlinks", links}, {"lengths", lengths}, {"short_count", plan.short_count}};
}

Json cmd_steiner(const Options& o, const Json& doc, std::ostream& out) {
  auto s = io::parse_steiner(doc);
  s.budget = budget_or(o, s.budget);
  auto r = steiner_selection(s);
  auto inst = steiner_to_mckp(s);
  out << "budget: " << to_string(s.budget) << "\n";
  print_selection(out, inst, r.selection);
  Json j = selection_json(inst, r.selection);
  j["points"] = r.points;
  j["budget"] = io::rational_json(s.budget);
  return j;
}

Json cmd_cluster(const Options& o, const Json& doc, std::ostream& out) {
  auto d = io::parse_cluster(doc);
  if (o.threshold) d.threshold = *o.threshold;
  if (o.linkage) {
    if (*o.linkage == "single") d.linkage = Linkage::single;
    else if (*o.linkage == "average") d.linkage = Linkage::average;
    else if (*o.linkage == "complete") d.linkage = Linkage::complete;
    else usage("--linkage must be single, average or complete");
  }
  auto c = cluster_agglomerative(d.points, d.threshold, d.linkage);
  out << "linkage: " << to_string(d.linkage) << "  threshold: " << fmt(d.threshold) << "\n";
  Table t({"cluster", "members"});
  Json cl = Json::array();
  for (std::size_t k = 0; k < c.clusters.size(); ++k) {
    std::string m;
    Json ids = Json::array();
    for (auto i : c.clusters[k]) {
      m += (m.empty() ? "" : ",") + d.points[i].id;
      ids.push_back(d.points[i].id);
    }
    t.add({std::to_string(k + 1), "{" + m + "}"});
    cl.push_back(ids);
  }
  t.print(out);
  Json merges = Json::array();
  for (const auto& m : c.merges)
    merges.push_back({{"left", d.points[m.left].id}, {"right", d.points[m.right].id}, {"distance", m.distance}});
  return {{"clusters", cl}, {"merges", merges}, {"threshold", d.threshold}, {"linkage", to_string(d.linkage)}};
}

Json assignment_json(const AssignmentInstance& inst, const Assignment& a) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < inst.users.size(); ++i)
    rows.push_back({{"user", inst.users[i].id},
                    {"point", a.point_of[i] ? Json(inst.points[*a.point_of[i]].id) : Json(nullptr)}});
  Json loads = Json::array();
  auto l = point_loads(inst, a);
  for (std::size_t j = 0; j < l.size(); ++j)
    loads.push_back({{"point", inst.points[j].id}, {"bandwidth", l[j].bandwidth}, {"users", l[j].users}});
  return {{"assignment", rows}, {"loads", loads}, {"assigned", a.assigned_count()}};
}

void print_assignment(std::ostream& out, const AssignmentInstance& inst, const Assignment& a) {
  Table t({"user", "point", "distance"});
  for (std::size_t i = 0; i < inst.users.size(); ++i) {
    const auto& p = a.point_of[i];
    t.add({std::to_string(inst.users[i].id), p ? std::to_string(inst.points[*p].id) : "-",
           p ? fmt(distance(inst.users[i], inst.points[*p])) : "-"});
  }
  t.print(out);
  Table loads({"point", "bandwidth", "users"});
  auto l = point_loads(inst, a);
  for (std::size_t j = 0; j < l.size(); ++j)
    loads.add({std::to_string(inst.points[j].id),
               fmt(l[j].bandwidth) + "/" + fmt(inst.points[j].capacity),
               std::to_string(l[j].users) + "/" + std::to_string(inst.points[j].max_users)});
  loads.print(out);
  out << "assigned: " << a.assigned_count() << " of " << inst.users.size() << "\n";
}

Json cmd_assign(const Options& o, const std::vector<Json>& docs, std::ostream& out) {
  auto first = io::parse_network(docs[0]);
  if (docs.size() == 1) {
    auto a = assign_users(first.instance, first.params);
    print_assignment(out, first.instance, a);
    return assignment_json(first.instance, a);
  }
  auto second = io::parse_network(docs[1]);
  Strategy s;
  if (o.strategy == "separate") s = Strategy::separate;
  else if (o.strategy == "joint") s = Strategy::joint;
  else if (o.strategy == "border") s = Strategy::border;
  else usage("--strategy must be separate, joint or border");
  auto r = extend(first.instance, second.instance, s, o.radius, first.params);
  out << "strategy: " << to_string(s) << "\n";
  print_assignment(out, r.merged, r.assignment);
  Json j = assignment_json(r.merged, r.assignment);
  j["strategy"] = to_string(s);
  j["released"] = r.released;
  if (s == Strategy::border) j["radius"] = o.radius;
  if (s != Strategy::separate) {
    auto sep = extend(first.instance, second.instance, Strategy::separate, 0, first.params);
    auto diff = reassigned_users(r.merged, sep.assignment, r.assignment);
    std::string ids;
    for (int id : diff) ids += (ids.empty() ? "" : ", ") + std::to_string(id);
    out << "re-assigned versus separate: {" << ids << "}\n";
    j["reassigned"] = diff;
  }
  return j;
}

const std::map<std::string, int> kPositional = {{"synth", 1},   {"improve", 1}, {"restructure", 1}, {"recolor", 1},
                                                {"hotlink", 1}, {"steiner", 1}, {"cluster", 1},     {"assign", 2}};

}  // namespace

std::string resolve_instance(const std::string& path) {
  std::error_code ec;
  if (fs::is_regular_file(path, ec)) return path;
  auto rel = strip_examples(path);
  if (const char* env = std::getenv("REKIT_EXAMPLES")) {
    auto p = fs::path(env) / rel;
    if (fs::is_regular_file(p, ec)) return p.string();
  }
  auto p = fs::path(REKIT_INSTANCES_DIR) / rel;
  if (fs::is_regular_file(p, ec)) return p.string();
  return path;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (args.empty()) {
    err << "usage: rekit <synth|improve|restructure|recolor|hotlink|steiner|cluster|assign> FILE [options]\n";
    return 2;
  }
  const auto& sub = args[0];
  auto pos = kPositional.find(sub);
  if (pos == kPositional.end()) {
    if (sub == "--help" || sub == "-h") {
      out << "usage: rekit <synth|improve|restructure|recolor|hotlink|steiner|cluster|assign> FILE [options]\n";
      return 0;
    }
    err << "rekit: unknown subcommand '" << sub << "'\n";
    return 2;
  }

  Options o;
  CLI::App app("rekit " + sub, "rekit " + sub);
  app.add_option("files", o.files, "instance file(s)")->required()->expected(1, pos->second);
  app.add_option("--budget", o.budget, "budget (decimal or p/q)");
  app.add_option("--method", o.method, "greedy|exact|weighted|pareto");
  app.add_option("--threshold", o.threshold, "clustering threshold");
  app.add_option("--strategy", o.strategy, "separate|joint|border");
  app.add_option("--radius", o.radius, "border radius");
  app.add_option("--hmax", o.hmax, "change budget for restructuring (or 'inf')");
  app.add_option("--count", o.count, "number of hotlinks");
  app.add_option("--out", o.out, "write a JSON result document");
  app.add_option("--seed", o.seed, "accepted for compatibility; solvers are deterministic");
  app.add_option("--linkage", o.linkage, "single|average|complete");

  try {
    std::vector<std::string> rest(args.rbegin(), args.rend() - 1);
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    if (msg.empty()) msg = e.get_name();
    err << "rekit " << sub << ": " << msg << "\n";
    return 2;
  }

  try {
    std::vector<Json> docs;
    for (const auto& f : o.files) docs.push_back(io::load_json(resolve_instance(f)));
    if (sub != "assign" && docs.size() != 1) usage(sub + " takes exactly one instance file");
    std::ostringstream table;
    Json result;
    if (sub == "synth") result = cmd_synth(o, docs[0], table);
    else if (sub == "improve") result = cmd_improve(o, docs[0], table);
    else if (sub == "restructure") result = cmd_restructure(o, docs[0], table);
    else if (sub == "recolor") result = cmd_recolor(o, docs[0], table);
    else if (sub == "hotlink") result = cmd_hotlink(o, docs[0], table);
    else if (sub == "steiner") result = cmd_steiner(o, docs[0], table);
    else if (sub == "cluster") result = cmd_cluster(o, docs[0], table);
    else result = cmd_assign(o, docs, table);
    result["command"] = sub;
    result["schema"] = io::kSchema;
    out << table.str();
    if (!o.out.empty()) {
      std::ofstream f(o.out, std::ios::binary | std::ios::trunc);
      if (!f) usage("cannot write '" + o.out + "'");
      f << result.dump(2) << "\n";
      if (!f) usage("write to '" + o.out + "' failed");
    }
    return 0;
  } catch (const Error& e) {
    err << "rekit " << sub << ": " << to_string(e.kind()) << ": " << e.what() << "\n";
    return e.kind() == ErrorKind::infeasible ? 1 : 2;
  } catch (const std::exception& e) {
    err << "rekit " << sub << ": " << e.what() << "\n";
    return 2;
  }
}

}  // namespace rekit::cli
