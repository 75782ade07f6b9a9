// Copyright 2026 The lazyheur Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: solve, ground, oracle and gen subcommands.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lazyheur/lazyheur.h"

namespace {

constexpr int kExitSat = 10;
constexpr int kExitUnsat = 20;
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitResource = 2;

using json = nlohmann::json;

int exit_for(lzh_status s) {
  return s == LZH_E_TOO_LARGE ? kExitResource : kExitUsage;
}

int fail(lzh_status s) {
  std::cerr << "error: " << lzh_status_name(s) << ": " << lzh_last_error() << "\n";
  return exit_for(s);
}

bool read_inputs(const std::vector<std::string>& paths, std::string& text) {
  for (const auto& p : paths) {
    std::stringstream ss;
    if (p == "-") {
      ss << std::cin.rdbuf();
    } else {
      std::ifstream f(p);
      if (!f) {
        std::cerr << "error: E_IO: cannot read " << p << "\n";
        return false;
      }
      ss << f.rdbuf();
    }
    text += ss.str();
    text += "\n";
  }
  return true;
}

// Parsed program that is released on scope exit.
struct ProgramHandle {
  lzh_program* p = nullptr;
  ~ProgramHandle() { lzh_program_free(p); }
};

int load(const std::vector<std::string>& inputs, ProgramHandle& h) {
  std::string text;
  if (!read_inputs(inputs, text)) return kExitUsage;
  lzh_status s = lzh_program_parse(text.c_str(), &h.p);
  if (s != LZH_OK) return fail(s);
  for (size_t i = 0; i < lzh_program_warning_count(h.p); ++i)
    std::cerr << "warning: " << lzh_program_warning(h.p, i) << "\n";
  return kExitOk;
}

std::string braces(const char* const* atoms, size_t n) {
  std::string s = "{";
  for (size_t i = 0; i < n; ++i) s += (i ? ", " : "") + std::string(atoms[i]);
  return s + "}";
}

struct Output {
  bool jsonl = false;
  size_t count = 0;
};

int print_model(void* user, const char* const* atoms, size_t n) {
  auto* out = static_cast<Output*>(user);
  ++out->count;
  if (out->jsonl) {
    std::cout << json{{"answer_set", std::vector<std::string>(atoms, atoms + n)}}.dump() << "\n";
  } else {
    std::cout << braces(atoms, n) << "\n";
  }
  std::cout.flush();
  return 1;
}

void print_trace(void* user, const char* line) {
  if (static_cast<Output*>(user)->jsonl) std::cout << json{{"trace", line}}.dump() << "\n";
  else std::cout << line << "\n";
}

void print_warning(void*, const char* line) { std::cerr << "warning: " << line << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lazy-grounding answer set solver with declarative heuristic directives"};
  app.require_subcommand(1);

  std::vector<std::string> inputs;
  size_t models = 1;
  std::string heuristics = "on";
  bool trace = false;
  bool have_seed = false;
  uint64_t seed = 0;
  size_t cap = 1000000;
  std::string format = "text";
  double time_limit = 0;
  size_t max_atoms = 24;

  auto* solve = app.add_subcommand("solve", "search for answer sets");
  solve->add_option("inputs", inputs, "program files (- for stdin)")->required();
  solve->add_option("-n,--models", models, "number of answer sets, 0 = all")->capture_default_str();
  solve->add_option("--heuristics", heuristics, "use heuristic directives")
      ->check(CLI::IsMember({"on", "off"}))
      ->capture_default_str();
  solve->add_flag("--trace", trace, "print DECIDE/ASSIGN trace lines");
  auto* seed_opt = solve->add_option("--seed", seed, "random tie-breaking among equal priorities");
  solve->add_option("--cap", cap, "maximum number of ground rules")->capture_default_str();
  solve->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "jsonl"}))
      ->capture_default_str();
  solve->add_option("--time-limit", time_limit, "seconds, 0 = unlimited")->capture_default_str();

  auto* ground = app.add_subcommand("ground", "print the full grounding");
  ground->add_option("inputs", inputs, "program files (- for stdin)")->required();
  ground->add_option("--cap", cap, "maximum number of ground rules")->capture_default_str();

  auto* oracle = app.add_subcommand("oracle", "enumerate answer sets by brute force");
  oracle->add_option("inputs", inputs, "program files (- for stdin)")->required();
  oracle->add_option("--cap", cap, "maximum number of ground rules")->capture_default_str();
  oracle->add_option("--max-atoms", max_atoms, "largest candidate base")->capture_default_str();
  oracle->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "jsonl"}))
      ->capture_default_str();

  size_t items = 0, bins = 0;
  int64_t bcap = 0;
  auto* gen = app.add_subcommand("gen", "generate a perfectly packable bin-packing instance");
  gen->add_option("--items", items, "number of items")->required();
  gen->add_option("--cap", bcap, "bin capacity")->required();
  gen->add_option("--bins", bins, "number of bins")->required();
  gen->add_option("--seed", seed, "random seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }
  have_seed = seed_opt->count() > 0;

  if (gen->parsed()) {
    char* text = nullptr;
    lzh_status s = lzh_gen_bpp(items, bcap, bins, seed, &text);
    if (s != LZH_OK) return fail(s);
    std::cout << text;
    lzh_string_free(text);
    return kExitOk;
  }

  ProgramHandle h;
  if (int rc = load(inputs, h); rc != kExitOk) return rc;

  if (ground->parsed()) {
    char* text = nullptr;
    lzh_status s = lzh_ground(h.p, cap, &text);
    if (s != LZH_OK) return fail(s);
    std::cout << text;
    lzh_string_free(text);
    return kExitOk;
  }

  Output out;
  out.jsonl = format == "jsonl";
  if (oracle->parsed()) {
    size_t n = 0;
    lzh_status s = lzh_oracle(h.p, max_atoms, cap, print_model, &out, &n);
    if (s != LZH_OK) return fail(s);
    return kExitOk;
  }

  lzh_solve_options opts;
  lzh_solve_options_init(&opts);
  opts.models = models;
  opts.heuristics = heuristics == "on";
  opts.use_seed = have_seed;
  opts.seed = seed;
  opts.cap = cap;
  opts.time_limit = time_limit;
  lzh_callbacks cb{print_model, trace ? print_trace : nullptr, print_warning, &out};
  lzh_solve_stats st{};
  lzh_status s = lzh_solve(h.p, &opts, &cb, &st);
  if (s != LZH_OK) return fail(s);

  const char* result = st.models > 0 ? "SATISFIABLE" : st.timed_out ? "TIMEOUT" : "UNSATISFIABLE";
  if (out.jsonl) {
    std::cout << json{{"result", result},
                      {"models", st.models},
                      {"exhausted", st.exhausted != 0},
                      {"timed_out", st.timed_out != 0},
                      {"stats",
                       {{"decisions", st.decisions},
                        {"heuristic_decisions", st.heuristic_decisions},
                        {"backtracks", st.backtracks},
                        {"ground_rules", st.ground_rules},
                        {"ground_directives", st.ground_directives},
                        {"wall_time", st.wall_time}}}}
                     .dump()
              << "\n";
  } else {
    std::cout << result << (st.timed_out ? " (time limit reached)" : "") << "\n";
    std::printf("%% models: %zu%s\n", st.models, st.exhausted ? " (search exhausted)" : "");
    std::printf("%% decisions: %llu\n", static_cast<unsigned long long>(st.decisions));
    std::printf("%% heuristic decisions: %llu\n",
                static_cast<unsigned long long>(st.heuristic_decisions));
    std::printf("%% backtracks: %llu\n", static_cast<unsigned long long>(st.backtracks));
    std::printf("%% ground rules: %llu\n", static_cast<unsigned long long>(st.ground_rules));
    std::printf("%% ground directives: %llu\n",
                static_cast<unsigned long long>(st.ground_directives));
    std::printf("%% wall time: %.3fs\n", st.wall_time);
  }
  std::cout.flush();
  if (st.models > 0) return kExitSat;
  return st.timed_out ? kExitResource : kExitUnsat;
}
