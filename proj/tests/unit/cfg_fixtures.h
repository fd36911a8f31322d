// Copyright 2026 The VulnGraph Authors. All Rights Reserved.
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
//
// Hand-drawn control-flow graphs for small functions. Each fixture lists the
// expected blocks (id, code) and edges; ids 0/1 are entry/exit.

#ifndef VULNGRAPH_TESTS_CFG_FIXTURES_H_
#define VULNGRAPH_TESTS_CFG_FIXTURES_H_

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace vulngraph::testing {

struct CfgFixture {
  std::string name;
  std::string source;
  std::vector<std::string> block_code;  // index = block id; 0/1 are ""
  std::vector<std::pair<int, int>> edges;
  bool has_loop;
};

inline void PrintTo(const CfgFixture& fx, std::ostream* os) { *os << fx.name; }

inline std::vector<CfgFixture> GoldenCfgFixtures() {
  return {
      {"straight_line",
       "int f(int a){int b = a + 1; b = b * 2; return b;}",
       {"", "", "int b = a + 1; b = b * 2; return b;"},
       {{0, 2}, {2, 1}},
       false},
      {"if_no_else",
       "int f(int a){int r = 0; if (a > 0) {r = 1;} return r;}",
       {"", "", "int r = 0;", "a > 0", "r = 1;", "return r;"},
       {{0, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}, {5, 1}},
       false},
      {"if_else",
       "int f(int a){if(a){b=1;}else{b=2;}return b;}",
       {"", "", "a", "b=1;", "b=2;", "return b;"},
       {{0, 2}, {2, 3}, {2, 4}, {3, 5}, {4, 5}, {5, 1}},
       false},
      {"nested_if",
       "int f(int a, int b){int r = 0; if (a) { if (b) { r = 2; } else { r = "
       "1; } } return r;}",
       {"", "", "int r = 0;", "a", "b", "r = 2;", "r = 1;", "return r;"},
       {{0, 2}, {2, 3}, {3, 4}, {3, 7}, {4, 5}, {4, 6}, {5, 7}, {6, 7},
        {7, 1}},
       false},
      {"while_loop",
       "int f(int n){int i = 0; while (i < n) { i = i + 1; } return i;}",
       {"", "", "int i = 0;", "i < n", "i = i + 1;", "return i;"},
       {{0, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 3}, {5, 1}},
       true},
      {"for_loop",
       "int f(int n){int s = 0; for (int i = 0; i < n; i++) { s = s + i; } "
       "return s;}",
       {"", "", "int s = 0; int i = 0;", "i < n", "s = s + i;", "i++",
        "return s;"},
       {{0, 2}, {2, 3}, {3, 4}, {3, 6}, {4, 5}, {5, 3}, {6, 1}},
       true},
      {"while_break",
       "int f(int n){int i = 0; while (1) { if (i > n) { break; } i++; } "
       "return i;}",
       {"", "", "int i = 0;", "1", "i > n", "break;", "i++;", "return i;"},
       {{0, 2}, {2, 3}, {3, 4}, {3, 7}, {4, 5}, {4, 6}, {5, 7}, {6, 3},
        {7, 1}},
       true},
      {"for_continue",
       "int f(int n){int s = 0; for (int i = 0; i < n; i++) { if (i == 2) { "
       "continue; } s = s + i; } return s;}",
       {"", "", "int s = 0; int i = 0;", "i < n", "i == 2", "continue;",
        "s = s + i;", "i++", "return s;"},
       {{0, 2}, {2, 3}, {3, 4}, {3, 8}, {4, 5}, {4, 6}, {5, 7}, {6, 7},
        {7, 3}, {8, 1}},
       true},
      {"early_return",
       "int f(int *p){if (p == 0) { return -1; } int v = *p; return v;}",
       {"", "", "p == 0", "return -1;", "int v = *p; return v;"},
       {{0, 2}, {2, 3}, {2, 4}, {3, 1}, {4, 1}},
       false},
      {"loop_with_diamond",
       "void f(int n){int i = 0; while (i < n) { if (i % 2) { i = i + 3; } "
       "else { i = i + 1; } } g(i);}",
       {"", "", "int i = 0;", "i < n", "i % 2", "i = i + 3;", "i = i + 1;",
        "g(i);"},
       {{0, 2}, {2, 3}, {3, 4}, {3, 7}, {4, 5}, {4, 6}, {5, 3}, {6, 3},
        {7, 1}},
       true},
      {"empty_body", "void f(){}", {"", ""}, {{0, 1}}, false},
      {"both_arms_return",
       "int f(int a){if (a) { return 1; } else { return 2; }}",
       {"", "", "a", "return 1;", "return 2;"},
       {{0, 2}, {2, 3}, {2, 4}, {3, 1}, {4, 1}},
       false},
      {"unbraced_for",
       "int f(int n){int s = 0; for (int i = 0; i < n; i++) s += i; return "
       "s;}",
       {"", "", "int s = 0; int i = 0;", "i < n", "s += i;", "i++",
        "return s;"},
       {{0, 2}, {2, 3}, {3, 4}, {3, 6}, {4, 5}, {5, 3}, {6, 1}},
       true},
      {"empty_then",
       "void f(int a){if (a) {} g();}",
       {"", "", "a", "", "g();"},
       {{0, 2}, {2, 3}, {2, 4}, {3, 4}, {4, 1}},
       false},
  };
}

}  // namespace vulngraph::testing

#endif  // VULNGRAPH_TESTS_CFG_FIXTURES_H_
