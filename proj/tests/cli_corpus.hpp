#pragma once

// Bundled-example commands and a corpus of malformed invocations with the
// exit code each must produce.

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "rekit/cli.hpp"

namespace corpus {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out;
  std::string err;
};

inline Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = rekit::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

inline std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline fs::path scratch_dir() {
  auto d = fs::temp_directory_path() / ("rekit_tests_" + std::to_string(::getpid()));
  fs::create_directories(d);
  return d;
}

inline void write(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out << text;
}

/// One command line per bundled example (without --out).
inline std::vector<std::vector<std::string>> bundled_commands() {
  return {
      {"synth", "fig16_table4.json"},
      {"improve", "fig16_table4.json", "--budget", "7"},
      {"improve", "examples/table6.json", "--budget", "14", "--method", "exact"},
      {"improve", "table6.json", "--budget", "7", "--method", "greedy"},
      {"improve", "table6.json", "--budget", "2", "--method", "pareto"},
      {"improve", "table12.json", "--method", "weighted"},
      {"steiner", "table9.json"},
      {"steiner", "table9.json", "--budget", "5.4"},
      {"recolor", "fig18.json"},
      {"recolor", "fig18.json", "--budget", "2"},
      {"cluster", "table11.json"},
      {"cluster", "table11.json", "--linkage", "average", "--threshold", "2.3"},
      {"hotlink", "tree_binary.json", "--count", "3"},
      {"restructure", "restructure_choice.json"},
      {"restructure", "restructure_choice.json", "--hmax", "inf"},
      {"assign", "table13.json"},
      {"assign", "table13.json", "table14.json", "--strategy", "separate"},
      {"assign", "table13.json", "table14.json", "--strategy", "joint"},
      {"assign", "table13.json", "table14.json", "--strategy", "border", "--radius", "20"},
  };
}

struct Malformed {
  std::string name;
  std::string file_text;  // written to a scratch file when non-empty
  std::vector<std::string> args;  // "@" is replaced by the scratch file path
  int code;
};

inline std::vector<Malformed> malformed_inputs() {
  const std::string mckp_head = R"({"kind":"mckp","schema":1,)";
  return {
      {"unknown subcommand", "", {"frobnicate", "x.json"}, 2},
      {"no arguments", "", {}, 2},
      {"missing file", "", {"synth", "no/such/file.json"}, 2},
      {"unknown flag", "", {"synth", "fig16_table4.json", "--frob"}, 2},
      {"flag without value", "", {"improve", "table6.json", "--budget"}, 2},
      {"bad method", "", {"improve", "table6.json", "--method", "magic"}, 2},
      {"bad budget text", "", {"improve", "table6.json", "--budget", "ten"}, 2},
      {"too many files", "", {"synth", "fig16_table4.json", "table6.json"}, 2},
      {"bad strategy", "", {"assign", "table13.json", "table14.json", "--strategy", "merge"}, 2},
      {"bad linkage", "", {"cluster", "table11.json", "--linkage", "ward"}, 2},
      {"wrong kind for command", "", {"synth", "table6.json"}, 2},
      {"not json", "{nope", {"synth", "@"}, 2},
      {"not an object", "[1,2]", {"synth", "@"}, 2},
      {"unknown kind", R"({"kind":"poem","schema":1})", {"synth", "@"}, 2},
      {"missing kind", R"({"schema":1})", {"synth", "@"}, 2},
      {"wrong schema", R"({"kind":"mckp","schema":7,"budget":1,"groups":[]})", {"improve", "@"}, 2},
      {"missing groups", mckp_head + R"("budget":1})", {"improve", "@"}, 2},
      {"string where number expected", mckp_head + R"("budget":1,"groups":[{"id":"g","items":[{"id":"a","cost":"x","profit":1}]}]})", {"improve", "@"}, 2},
      {"negative cost", mckp_head + R"("budget":1,"groups":[{"id":"g","items":[{"id":"a","cost":-1,"profit":1}]}]})", {"improve", "@"}, 2},
      {"empty group", mckp_head + R"("budget":1,"groups":[{"id":"g","items":[]}]})", {"improve", "@"}, 2},
      {"infeasible budget", mckp_head + R"("budget":1,"groups":[{"id":"g","items":[{"id":"a","cost":3,"profit":1}]}]})", {"improve", "@"}, 1},
      {"infeasible budget greedy", mckp_head + R"("budget":1,"groups":[{"id":"g","items":[{"id":"a","cost":3,"profit":1}]}]})", {"improve", "@", "--method", "greedy"}, 1},
      {"no feasible composition",
       R"({"kind":"morphology","schema":1,"scales":{"priority":2,"compat":3},"components":[{"id":"X","alternatives":[{"id":"X1","priority":1}]},{"id":"Y","alternatives":[{"id":"Y1","priority":1}]}],"compat":[]})",
       {"synth", "@"}, 1},
      {"priority out of scale",
       R"({"kind":"morphology","schema":1,"scales":{"priority":2,"compat":3},"components":[{"id":"X","alternatives":[{"id":"X1","priority":5}]}]})",
       {"synth", "@"}, 2},
      {"duplicate alternative",
       R"({"kind":"morphology","schema":1,"scales":{"priority":2,"compat":3},"components":[{"id":"X","alternatives":[{"id":"A","priority":1}]},{"id":"Y","alternatives":[{"id":"A","priority":1}]}]})",
       {"synth", "@"}, 2},
      {"improper initial coloring",
       R"({"kind":"recolor","schema":1,"vertices":["a","b"],"colors":["1","2"],"edges":[["a","b"]],"initial":["1","1"],"goal":["1","2"],"cost":"unit"})",
       {"recolor", "@"}, 2},
      {"unknown color",
       R"({"kind":"recolor","schema":1,"vertices":["a"],"colors":["1"],"edges":[],"initial":["9"],"goal":["1"],"cost":"unit"})",
       {"recolor", "@"}, 2},
      {"tree with cycle",
       R"({"kind":"tree","schema":1,"nodes":[{"id":"r","parent":null},{"id":"a","parent":"b"},{"id":"b","parent":"a","weight":1}]})",
       {"hotlink", "@"}, 2},
      {"tree weight on inner node",
       R"({"kind":"tree","schema":1,"nodes":[{"id":"r","parent":null,"weight":1},{"id":"a","parent":"r","weight":1}]})",
       {"hotlink", "@"}, 2},
      {"duplicate user ids",
       R"({"kind":"network","schema":1,"users":[{"id":1,"x":0,"y":0,"z":0,"bandwidth":1,"priority":1,"reliability":1},{"id":1,"x":0,"y":0,"z":0,"bandwidth":1,"priority":1,"reliability":1}],"points":[]})",
       {"assign", "@"}, 2},
      {"overlapping regions", "", {"assign", "table13.json", "table13.json", "--strategy", "joint"}, 2},
      {"negative threshold", "", {"cluster", "table11.json", "--threshold", "-1"}, 2},
      {"negative budget", "", {"steiner", "table9.json", "--budget", "-1"}, 2},
      {"restructure bad variant", R"({"kind":"restructure","schema":1,"variant":"tree"})", {"restructure", "@"}, 2},
      {"hotlink count zero", "", {"hotlink", "tree_binary.json", "--count", "0"}, 2},
  };
}

}  // namespace corpus
