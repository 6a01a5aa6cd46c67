// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fails.
#include <unistd.h>

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "cli_corpus.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "rekit/error.hpp"
#include "rekit/netassign.hpp"
#include "rekit/planner.hpp"
#include "rekit/recolor.hpp"
#include "rekit/restructure.hpp"
#include "rekit/synthesis.hpp"
#include "rekit/trees.hpp"

using namespace rekit;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// collects failures for one criterion; the first few are kept for the report
struct Check {
  int failures = 0;
  std::vector<std::string> notes;
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures;
    if (notes.size() < 3) notes.push_back(what);
  }
};

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome finish(const Check& c, std::string detail) {
  for (const auto& n : c.notes) detail += "; " + n;
  if (c.failures > 3) detail += "; (" + std::to_string(c.failures) + " failures in total)";
  return {c.failures == 0, detail};
}

std::string join(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

Outcome synthesis() {
  Check c;
  auto ms = fixture::fig16();
  auto t0 = Clock::now();
  auto r = pareto_synthesize(ms);
  double t = seconds_since(t0);
  c.expect(t < 1, "took " + std::to_string(t) + " s");
  c.expect(r.feasible_count == 54, "feasible count " + std::to_string(r.feasible_count));

  // exhaustive check of the frontier over all 108 compositions
  std::vector<std::size_t> sizes;
  for (const auto& comp : ms.components()) sizes.push_back(comp.alternatives.size());
  std::vector<ScoredComposition> all;
  std::size_t total = 0;
  oracle::for_each_product(sizes, [&](const std::vector<std::size_t>& p) {
    ++total;
    try {
      all.push_back({Composition{p}, evaluate(ms, Composition{p})});
    } catch (const Error&) {
    }
  });
  c.expect(total == 108, "enumerated " + std::to_string(total));
  std::vector<Composition> expect;
  for (const auto& a : all) {
    bool dominated = false;
    for (const auto& b : all) dominated = dominated || compare_quality(b.quality, a.quality) == Verdict::dominates;
    if (!dominated) expect.push_back(a.composition);
  }
  std::sort(expect.begin(), expect.end());
  std::vector<Composition> got;
  for (const auto& s : r.frontier) got.push_back(s.composition);
  c.expect(got == expect, "frontier differs from exhaustive enumeration");

  auto find = [&](const std::string& text) -> const ScoredComposition* {
    for (const auto& s : r.frontier)
      if (format_composition(ms, s.composition) == text) return &s;
    return nullptr;
  };
  auto* a = find("X2 * Y1 * Z2 * U1 * V2");
  c.expect(a && a->quality == QualityVector{1, {3, 2, 0, 0}}, "X2*Y1*Z2*U1*V2 missing or not (1;3,2,0,0)");
  auto* b = find("X2 * Y1 * Z3 * U2 * V2");
  c.expect(b && b->quality.w == 3, "X2*Y1*Z3*U2*V2 missing or w != 3");
  c.expect(b && b->quality.n == std::vector<int>{1, 3, 1, 0}, "X2*Y1*Z3*U2*V2 n-part is not the recount (1,3,1,0)");
  std::string detail = std::to_string(r.frontier.size()) + " frontier members; X2*Y1*Z3*U2*V2 = " +
                       (b ? to_string(b->quality) : "?") +
                       " (recount from the structure; the printed value (2,2,1,0) does not match it)";
  return finish(c, detail);
}

Outcome mckp_exactness() {
  Check c;
  const std::pair<int, int> targets[] = {{1, 2}, {2, 4}, {7, 10}, {14, 16}};
  for (auto [b, p] : targets) {
    auto s = mckp_exact(fixture::table6(b));
    c.expect(s.total_profit == p, "b=" + std::to_string(b) + " profit " + to_string(s.total_profit));
  }
  auto t0 = Clock::now();
  for (int b = 0; b <= 15; ++b) {
    auto inst = fixture::table6(b);
    auto s = mckp_exact(inst);
    auto o = oracle::mckp(inst);
    c.expect(o && s.total_profit == o->profit && s.chosen == o->picks, "b=" + std::to_string(b) + " differs from brute force");
  }
  double t = seconds_since(t0);
  c.expect(t < 1, "took " + std::to_string(t) + " s");
  return finish(c, "b=1,2,7,14 -> 2,4,10,16; b=7 brute force gives 10 (printed elsewhere as 8); b=0..15 equal brute force");
}

Outcome steiner() {
  Check c;
  auto t0 = Clock::now();
  auto inst = fixture::table9(parse_rational("2.9"));
  auto s = steiner_selection(inst);
  auto m = steiner_to_mckp(inst);
  std::size_t combos = 1;
  for (const auto& g : m.groups) combos *= g.items.size();
  auto o = oracle::mckp(m);
  double t = seconds_since(t0);
  c.expect(s.points == std::vector<std::string>{"s11", "s31"}, "selected points differ");
  c.expect(s.selection.total_profit == parse_rational("5.5"), "profit " + to_string(s.selection.total_profit));
  c.expect(combos == 36, "brute force covers " + std::to_string(combos) + " combinations");
  c.expect(o && o->profit == s.selection.total_profit && o->picks == s.selection.chosen, "brute force disagrees");
  c.expect(t < 1, "took " + std::to_string(t) + " s");
  return finish(c, "{s11,s31} profit " + to_string(s.selection.total_profit));
}

Outcome improvement() {
  Check c;
  auto ms = fixture::fig16();
  auto inst = fixture::table6(14);
  auto applied = apply_actions(ms, make_composition(ms, fixture::s2()), inst, mckp_exact(inst));
  c.expect(applied.quality == QualityVector{3, {5, 0, 0, 0}}, "got " + to_string(applied.quality));
  return finish(c, "S2 -> " + to_string(applied.quality));
}

Outcome aggregation() {
  Check c;
  auto sa = aggregate_median({{{0, 2, 1}}, {{1, 1, 1}}, {{1, 2, 0}}});
  auto sb = aggregate_median({{{1, 2, 0}}, {{1, 1, 1}}, {{1, 2, 0}}, {{3, 0, 0}}});
  c.expect(sa == MultisetEstimate{{1, 1, 1}}, "S^a median " + to_string(sa));
  c.expect(sb == MultisetEstimate{{1, 2, 0}}, "S^b median " + to_string(sb));
  return finish(c, "S^a " + to_string(sa) + ", S^b " + to_string(sb));
}

std::vector<std::set<std::string>> named(const std::vector<RegionPoint>& pts, const Clustering& cl) {
  std::vector<std::set<std::string>> out;
  for (const auto& group : cl.clusters) {
    std::set<std::string> s;
    for (auto i : group) s.insert(pts[i].id);
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string show(const std::vector<std::set<std::string>>& cs) {
  std::string s;
  for (const auto& c : cs) {
    s += "{";
    bool first = true;
    for (const auto& x : c) {
      s += (first ? "" : ",") + x;
      first = false;
    }
    s += "}";
  }
  return s;
}

Outcome clustering() {
  Check c;
  auto pts = fixture::table11();
  std::vector<std::set<std::string>> want = {{"A1"}, {"A2"}, {"A3", "A8"}, {"A4"}, {"A5", "A7", "A9"}, {"A6"}};
  std::sort(want.begin(), want.end());
  auto single = named(pts, cluster_agglomerative(pts, 2.1, Linkage::single));
  c.expect(single == want, "single linkage at 2.1 gives " + show(single) + ", wanted " + show(want) +
                               " (d(A7,A8) = d(A3,A8) = sqrt 2, so single linkage joins A3 whenever it joins A8 to A7)");
  std::mt19937 rng(2024);
  int bad = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<RegionPoint> rp;
    auto n = std::uniform_int_distribution<int>(0, 20)(rng);
    auto dim = std::uniform_int_distribution<int>(1, 4)(rng);
    for (int i = 0; i < n; ++i) {
      RegionPoint p{std::to_string(i), {}};
      for (int d = 0; d < dim; ++d) p.params.push_back(std::uniform_real_distribution<double>(0, 10)(rng));
      rp.push_back(p);
    }
    auto cl = cluster_agglomerative(rp, 1e9);
    for (std::size_t k = 1; k < cl.merges.size(); ++k)
      if (cl.merges[k].distance < cl.merges[k - 1].distance) ++bad;
  }
  c.expect(bad == 0, std::to_string(bad) + " decreasing merge steps");
  auto avg = named(pts, cluster_agglomerative(pts, 2.3, Linkage::average));
  std::string info = "merge distances non-decreasing on 1000 random instances";
  info += (avg == want ? "; note: average linkage at 2.3 does reproduce " : "; note: average linkage at 2.3 gives ") +
          show(avg);
  return finish(c, info);
}

Outcome restructuring() {
  Check c;
  std::mt19937 rng(7);
  const int hs[] = {0, 1, 2, 4, -1};
  auto set_budget = [](std::optional<Rational>& b, int h) {
    if (h < 0) b.reset();
    else b = h;
  };
  for (int trial = 0; trial < 500; ++trial) {
    if (trial % 2 == 0) {
      SubsetRestructure p;
      auto n = std::uniform_int_distribution<std::size_t>(1, 12)(rng);
      Rational load = 0;
      std::vector<Rational> w;
      for (std::size_t e = 0; e < n; ++e) {
        p.initial.push_back(rng() % 2);
        p.goal.push_back(rng() % 2);
        p.move_cost.push_back(std::uniform_int_distribution<int>(0, 3)(rng));
        p.value.push_back(Rational(std::uniform_int_distribution<int>(0, 9)(rng), 1 + rng() % 2));
        w.push_back(std::uniform_int_distribution<int>(1, 4)(rng));
        if (p.initial[e]) load += w.back();
      }
      p.proximity = rng() % 2 ? Proximity::objective_gap : Proximity::element_difference;
      if (rng() % 2) p.feasible = knapsack_constraint(w, load + std::uniform_int_distribution<int>(0, 4)(rng));
      Rational prev = -1;
      for (int h : hs) {
        set_budget(p.budget, h);
        auto r = restructure_subset(p);
        auto o = oracle::subset_restructure(p);
        std::string tag = "subset trial " + std::to_string(trial) + " h=" + std::to_string(h);
        c.expect(o && r.proximity == o->rho, tag + ": rho not minimal");
        c.expect(!p.budget || r.change_cost <= *p.budget, tag + ": over budget");
        c.expect(prev < 0 || r.proximity <= prev, tag + ": rho increased");
        prev = r.proximity;
      }
    } else {
      ChoiceRestructure p;
      std::size_t space = 1;
      Rational load = 0;
      while (true) {
        auto k = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
        if (space * k > 4096 || p.groups.size() == 6) break;
        space *= k;
        std::vector<ChoiceItem> items;
        for (std::size_t j = 0; j < k; ++j)
          items.push_back({std::uniform_int_distribution<int>(0, 5)(rng), std::uniform_int_distribution<int>(0, 9)(rng)});
        p.initial.push_back(rng() % k);
        p.goal.push_back(rng() % k);
        p.switch_cost.push_back(std::uniform_int_distribution<int>(0, 3)(rng));
        load += items[p.initial.back()].cost;
        p.groups.push_back(items);
        if (rng() % 4 == 0) break;
      }
      p.proximity = rng() % 2 ? Proximity::objective_gap : Proximity::element_difference;
      if (rng() % 2) p.capacity = load + std::uniform_int_distribution<int>(0, 5)(rng);
      Rational prev = -1;
      for (int h : hs) {
        set_budget(p.budget, h);
        auto r = restructure_mckp(p);
        auto o = oracle::choice_restructure(p);
        std::string tag = "choice trial " + std::to_string(trial) + " h=" + std::to_string(h);
        c.expect(o && r.proximity == o->rho, tag + ": rho not minimal");
        c.expect(!p.budget || r.change_cost <= *p.budget, tag + ": over budget");
        c.expect(prev < 0 || r.proximity <= prev, tag + ": rho increased");
        prev = r.proximity;
      }
    }
  }
  return finish(c, "500 instances (250 subset, 250 choice), budgets 0,1,2,4,inf");
}

Outcome recoloring() {
  Check c;
  std::mt19937 rng(8);
  int done = 0;
  while (done < 500) {
    RecolorInstance inst;
    auto n = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
    inst.colors = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    inst.graph.vertex_count = n;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (rng() % 3 == 0) inst.graph.edges.emplace_back(a, b);
    inst.initial.assign(n, 0);
    bool ok = true;
    for (std::size_t v = 0; v < n && ok; ++v) {
      std::vector<bool> used(inst.colors, false);
      for (auto [a, b] : inst.graph.edges) {
        if (a == v && b < v) used[inst.initial[b]] = true;
        if (b == v && a < v) used[inst.initial[a]] = true;
      }
      auto start = rng() % inst.colors;
      ok = false;
      for (std::size_t k = 0; k < inst.colors && !ok; ++k) {
        auto col = (start + k) % inst.colors;
        if (!used[col]) {
          inst.initial[v] = col;
          ok = true;
        }
      }
    }
    if (!ok) continue;
    for (std::size_t v = 0; v < n; ++v) inst.goal.push_back(rng() % inst.colors);
    inst.cost.resize(n, CostMatrix(inst.colors, std::vector<Rational>(inst.colors)));
    for (auto& m : inst.cost)
      for (std::size_t i = 0; i < inst.colors; ++i)
        for (std::size_t j = 0; j < inst.colors; ++j) m[i][j] = i == j ? 0 : std::uniform_int_distribution<int>(1, 3)(rng);
    if (rng() % 3) inst.budget = std::uniform_int_distribution<int>(0, 8)(rng);
    auto r = recolor_optimize(inst);
    auto o = oracle::recolor(inst);
    std::string tag = "instance " + std::to_string(done);
    c.expect(is_proper(inst.graph, r.coloring), tag + ": improper");
    c.expect(!inst.budget || r.cost <= *inst.budget, tag + ": over budget");
    c.expect(o && r.distance == o->distance, tag + ": distance not minimal");
    ++done;
  }
  auto fig = fixture::fig18();
  auto r = recolor_optimize(fig);
  c.expect(is_proper(fig.graph, fig.goal), "the pictured resultant coloring is not proper");
  c.expect(is_proper(fig.graph, r.coloring), "optimized coloring is not proper");
  return finish(c, "500 random graphs (<= 8 vertices, <= 4 colors); pictured result proper, optimizer reaches distance " +
                       std::to_string(r.distance) + " at cost " + to_string(r.cost));
}

Outcome hotlinks() {
  Check c;
  std::mt19937 rng(9);
  for (int trial = 0; trial < 500; ++trial) {
    auto n = std::uniform_int_distribution<std::size_t>(1, 64)(rng);
    auto t = oracle::random_tree(rng, n);
    auto got = assign_single_hotlink(t);
    auto want = oracle::single_hotlink(t, {});
    std::string tag = "tree " + std::to_string(trial);
    c.expect(got.has_value() == want.has_value() && (!got || (got->target == want->target && got->gain == want->gain)),
             tag + ": single hotlink differs from brute force");
    auto plan = assign_hotlinks_greedy(t, 1 + rng() % 6);
    Rational prev = expected_path_length(t, {});
    for (const auto& len : plan.lengths) {
      c.expect(len <= prev, tag + ": path length increased");
      prev = len;
    }
  }
  return finish(c, "500 random trees with <= 64 nodes");
}

Outcome network() {
  Check c;
  auto t0 = Clock::now();
  auto a = fixture::table13();
  auto b = fixture::table14();
  auto sep = extend(a, b, Strategy::separate);
  auto joint = extend(a, b, Strategy::joint);
  auto border = extend(a, b, Strategy::border, 20);
  for (const auto* r : {&sep, &joint, &border}) {
    try {
      check_assignment(r->merged, r->assignment);
    } catch (const Error& e) {
      c.expect(false, std::string("constraint violated: ") + e.what());
    }
    c.expect(is_maximal(*r), "assignment not maximal");
  }
  auto diff = reassigned_users(joint.merged, sep.assignment, joint.assignment);
  auto diff_border = reassigned_users(border.merged, sep.assignment, border.assignment);
  double t = seconds_since(t0);
  c.expect(t < 1, "took " + std::to_string(t) + " s");

  const std::vector<int> target = {3, 13, 25};
  auto deviation = [&](const std::vector<int>& got) {
    std::vector<int> missing, extra;
    std::set_difference(target.begin(), target.end(), got.begin(), got.end(), std::back_inserter(missing));
    std::set_difference(got.begin(), got.end(), target.begin(), target.end(), std::back_inserter(extra));
    if (missing.empty() && extra.empty()) return std::string("matches");
    return "missing " + join(missing) + " extra " + join(extra);
  };
  std::ostringstream d;
  d << "separate " << sep.assignment.assigned_count() << ", joint " << joint.assignment.assigned_count()
    << ", border(20) " << border.assignment.assigned_count() << " assigned; joint re-assigns " << join(diff) << " vs "
    << join(target) << " (" << deviation(diff) << "); border re-assigns " << join(diff_border) << " ("
    << deviation(diff_border) << "); " << static_cast<int>(t * 1000) << " ms";
  return finish(c, d.str());
}

Outcome cli_contract() {
  Check c;
  auto dir = corpus::scratch_dir();
  int k = 0;
  for (const auto& args : corpus::bundled_commands()) {
    std::string tag = args[0] + " " + args[1];
    std::string docs[2];
    for (int rep = 0; rep < 2; ++rep) {
      auto path = dir / ("run" + std::to_string(k) + "_" + std::to_string(rep) + ".json");
      auto full = args;
      full.push_back("--out");
      full.push_back(path.string());
      auto r = corpus::run(full);
      c.expect(r.code == 0, tag + ": exit " + std::to_string(r.code));
      docs[rep] = corpus::slurp(path);
    }
    c.expect(!docs[0].empty() && docs[0] == docs[1], tag + ": result documents differ");
    ++k;
  }
  int cases = 0;
  for (const auto& m : corpus::malformed_inputs()) {
    auto file = dir / "case.json";
    if (!m.file_text.empty()) corpus::write(file, m.file_text);
    auto args = m.args;
    for (auto& x : args)
      if (x == "@") x = file.string();
    auto r = corpus::run(args);
    c.expect(r.code == m.code, m.name + ": exit " + std::to_string(r.code) + ", wanted " + std::to_string(m.code));
    ++cases;
  }
  std::filesystem::remove_all(dir);
  return finish(c, std::to_string(k) + " bundled runs byte-identical; " + std::to_string(cases) + " malformed inputs");
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"synthesis frontier", synthesis},
      {"mckp exactness", mckp_exactness},
      {"steiner selection", steiner},
      {"improvement application", improvement},
      {"multiset aggregation", aggregation},
      {"clustering", clustering},
      {"restructuring properties", restructuring},
      {"recoloring properties", recoloring},
      {"hotlink properties", hotlinks},
      {"network assignment", network},
      {"cli determinism and exit codes", cli_contract},
  };
  int failed = 0;
  int n = 0;
  for (const auto& [name, fn] : criteria) {
    ++n;
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << n << "] " << name << ": " << o.detail << "\n";
  }
  std::cout << (n - failed) << "/" << n << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
