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

// Helpers shared by the unit tests and the acceptance runner.
#pragma once

#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lazyheur/normalize.hpp"
#include "lazyheur/oracle.hpp"
#include "lazyheur/parser.hpp"
#include "lazyheur/solver.hpp"

namespace testsupport {

using AnswerSets = std::set<std::vector<std::string>>;

inline std::string read_file(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

inline std::string corpus(const std::string& name) {
  return read_file(std::string(LAZYHEUR_CORPUS_DIR) + "/" + name);
}

inline lazyheur::Program load(const std::string& text) {
  return lazyheur::normalize(lazyheur::parse(text));
}

inline AnswerSets solve_all(const lazyheur::Program& p, bool heuristics = true,
                            std::optional<std::uint64_t> seed = std::nullopt) {
  AnswerSets out;
  lazyheur::SolveOptions o;
  o.models = 0;
  o.heuristics = heuristics;
  o.seed = seed;
  lazyheur::solve(p, o, [&](const std::vector<std::string>& m) {
    out.insert(m);
    return true;
  });
  return out;
}

inline std::vector<std::vector<std::string>> solve_list(const lazyheur::Program& p,
                                                        bool heuristics = true) {
  std::vector<std::vector<std::string>> out;
  lazyheur::SolveOptions o;
  o.models = 0;
  o.heuristics = heuristics;
  lazyheur::solve(p, o, [&](const std::vector<std::string>& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

inline AnswerSets oracle_all(const lazyheur::Program& p) {
  auto v = lazyheur::enumerate_answer_sets(p);
  return {v.begin(), v.end()};
}

// DECIDE lines of the search for the first answer set.
inline std::vector<std::string> decisions(const lazyheur::Program& p, bool heuristics = true) {
  std::vector<std::string> out;
  lazyheur::SolveOptions o;
  o.heuristics = heuristics;
  lazyheur::solve(p, o, {}, [&](std::string_view line) {
    if (line.substr(0, 6) == "DECIDE") out.emplace_back(line);
  });
  return out;
}

// Small hand-written programs covering negation cycles, constraints, choice
// rules and monotone aggregates; every one has a small Herbrand base.
inline const std::vector<std::string>& small_programs() {
  static const std::vector<std::string> programs = {
      "a :- not b. b :- not a.",
      "a.",
      "a :- b. b :- a.",
      "a :- not a.",
      ":- a. a :- not b. b :- not a.",
      "{a; b; c}. :- a, b.",
      "{a; b}. c :- a. c :- b. :- not c.",
      "p(1..3). {q(X) : p(X)}. :- q(1), q(2).",
      "p(1..3). {q(X)} :- p(X). r :- 2 <= #count{ X : q(X) }.",
      "w(1,1). w(2,2). w(3,3). {s(X)} :- w(X,W). ok :- 3 <= #sum{ W,X : s(X), w(X,W) }. "
      ":- not ok.",
      "a :- not b. b :- not c. c :- not a.",
      "a :- not b. b :- not c. c :- not d. d :- not a.",
      "p :- q. q :- p. p :- not r. r :- not p.",
      "x(1..2). y(X) :- x(X), not z(X). z(X) :- x(X), not y(X). :- y(1), y(2).",
      "{a}. b :- a. c :- not a. :- b, c.",
      "n(1..3). e(1,2). e(2,3). e(1,3). {col(X)} :- n(X). :- e(X,Y), col(X), col(Y).",
      "d(1..3). {m(X)} :- d(X). big :- 2 <= #count{ X : d(X), not m(X) }.",
      "{a; b}. #heuristic -a. [5] #heuristic b : -a. [3]",
      "a :- b. b :- c. c :- not d. d :- not c. :- a.",
      "p(1). p(2). q(X) :- p(X), X > 1. r :- q(2).",
      "{a(1); a(2); a(3)}. :- 2 <= #count{ X : a(X) }.",
      "{a; b; c}. :- a, b, c. #heuristic a. [1@2] #heuristic -b : a. [9@1] "
      "#heuristic c : not b. [2]",
      "v(1..2). {on(X)} :- v(X). any :- 1 <= #count{ X : on(X) }. :- not any. "
      "#heuristic -on(X) : v(X), not +any. [X]",
      "t(1,2). t(2,3). reach(X,Y) :- t(X,Y). reach(X,Z) :- reach(X,Y), t(Y,Z). "
      "{cut(X,Y)} :- t(X,Y). :- cut(1,2), reach(1,3).",
  };
  return programs;
}

// Random small programs over a two-element domain with optional directives.
class RandomPrograms {
 public:
  explicit RandomPrograms(std::uint64_t seed) : rng_(seed) {}

  std::string next(bool with_directives) {
    std::string s = "d(1..2).\n";
    std::size_t n_rules = 2 + pick(4);
    for (std::size_t i = 0; i < n_rules; ++i) s += rule() + "\n";
    if (with_directives) {
      std::size_t n = 1 + pick(3);
      for (std::size_t i = 0; i < n; ++i) s += directive() + "\n";
    }
    return s;
  }

 private:
  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  std::string unary(const std::string& arg) {
    static const char* preds[] = {"a", "b", "c"};
    return std::string(preds[pick(3)]) + "(" + arg + ")";
  }
  std::string atom(bool var) {
    if (pick(4) == 0) return pick(2) ? "p" : "q";
    return unary(var ? "X" : std::to_string(1 + pick(2)));
  }
  std::string body(bool with_var) {
    std::string s = with_var ? "d(X)" : "";
    auto add = [&](const std::string& lit) { s += (s.empty() ? "" : ", ") + lit; };
    std::size_t pos = pick(2), neg = pick(3);
    for (std::size_t i = 0; i < pos; ++i) add(atom(with_var && pick(2)));
    for (std::size_t i = 0; i < neg; ++i) add("not " + atom(with_var && pick(2)));
    if (pick(5) == 0) {
      std::string pred = pick(2) ? "a" : "b";
      add(std::to_string(1 + pick(2)) + " <= #count{ Y : " + pred + "(Y) }");
    }
    return s;
  }
  std::string rule() {
    bool var = pick(2);
    switch (pick(6)) {
      case 0: {
        std::string b = body(var);
        return ":- " + (b.empty() ? std::string("p") : b) + ".";
      }
      case 1: {
        std::string b = body(var);
        return "{ " + atom(var) + " }" + (b.empty() ? "" : " :- " + b) + ".";
      }
      default: {
        std::string b = body(var);
        return atom(var) + (b.empty() ? "" : " :- " + b) + ".";
      }
    }
  }
  std::string directive() {
    static const char* signs[] = {"", "+", "-"};
    std::string s = "#heuristic " + std::string(signs[pick(3)]) + unary("X") + " : d(X)";
    std::size_t n = pick(3);
    for (std::size_t i = 0; i < n; ++i)
      s += std::string(", ") + (pick(2) ? "not " : "") + signs[pick(3)] + atom(pick(2));
    return s + ". [" + std::to_string(pick(4)) + "@" + std::to_string(pick(2)) + "]";
  }

  std::mt19937_64 rng_;
};

}  // namespace testsupport
