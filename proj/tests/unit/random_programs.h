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
// Random generator of functions in the accepted C subset, for property tests.

#ifndef VULNGRAPH_TESTS_RANDOM_PROGRAMS_H_
#define VULNGRAPH_TESTS_RANDOM_PROGRAMS_H_

#include <string>

#include "vulngraph/rng.h"

namespace vulngraph::testing {

class RandomProgram {
 public:
  explicit RandomProgram(std::uint64_t seed) : rng_(seed) {}

  // loop_free restricts output to straight-line code and if/else.
  // Without bare_jumps, break/continue only appear under an if.
  std::string Function(bool loop_free = false, bool bare_jumps = true) {
    loop_free_ = loop_free;
    bare_jumps_ = bare_jumps;
    std::string body;
    const int n = 1 + static_cast<int>(rng_.UniformIndex(5));
    for (int i = 0; i < n; ++i) body += Statement(0, false);
    if (rng_.UniformIndex(2) == 0) body += "return " + Expr(1) + ";";
    return "int fn(int a, char *buf, int n){" + body + "}";
  }

 private:
  std::string Var() {
    static const char* kNames[] = {"a", "n", "x", "y", "len", "idx"};
    return kNames[rng_.UniformIndex(6)];
  }

  std::string Expr(int depth) {
    const auto pick = rng_.UniformIndex(depth > 2 ? 2 : 6);
    switch (pick) {
      case 0:
        return Var();
      case 1:
        return std::to_string(rng_.UniformIndex(100));
      case 2: {
        static const char* kOps[] = {"+", "-", "*", "<", ">=", "==", "&&", "%"};
        return Expr(depth + 1) + " " + kOps[rng_.UniformIndex(8)] + " " +
               Expr(depth + 1);
      }
      case 3:
        return "buf[" + Expr(depth + 1) + "]";
      case 4:
        return "g(" + Expr(depth + 1) + ", " + Expr(depth + 1) + ")";
      default:
        return "(" + Expr(depth + 1) + ")";
    }
  }

  std::string Block(int depth, bool in_loop) {
    std::string out = "{";
    const int n = static_cast<int>(rng_.UniformIndex(4));
    for (int i = 0; i < n; ++i) out += Statement(depth + 1, in_loop);
    return out + "}";
  }

  std::string Statement(int depth, bool in_loop) {
    const std::uint64_t kinds = depth >= 3 ? 3 : (loop_free_ ? 5 : 8);
    switch (rng_.UniformIndex(kinds)) {
      case 0:
        return "int " + Var() + "_v = " + Expr(0) + ";";
      case 1:
        return Var() + " = " + Expr(0) + ";";
      case 2:
        return "g(" + Expr(0) + ");";
      case 3:
        return "if (" + Expr(0) + ") " + Block(depth, in_loop);
      case 4:
        return "if (" + Expr(0) + ") " + Block(depth, in_loop) + " else " +
               Block(depth, in_loop);
      case 5:
        return "while (" + Expr(0) + ") " + LoopBody(depth);
      case 6:
        return "for (x = 0; x < n; x++) " + LoopBody(depth);
      default:
        if (in_loop) {
          std::string jump = rng_.UniformIndex(2) ? "break;" : "continue;";
          return bare_jumps_ ? jump : "if (y) { " + jump + " }";
        }
        return "y = y + 1;";
    }
  }

  std::string LoopBody(int depth) {
    std::string body = Block(depth, true);
    if (rng_.UniformIndex(3) == 0) {
      body.insert(body.size() - 1, "if (x > 3) { break; }");
    }
    return body;
  }

  Rng rng_;
  bool loop_free_ = false;
  bool bare_jumps_ = true;
};

}  // namespace vulngraph::testing

#endif  // VULNGRAPH_TESTS_RANDOM_PROGRAMS_H_
