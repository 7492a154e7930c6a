// Copyright 2026 The Shadowgraph Authors
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

#ifndef SHADOWGRAPH_PREDICATE_H_
#define SHADOWGRAPH_PREDICATE_H_

#include <functional>
#include <string>
#include <string_view>

#include "shadowgraph/multigraph.h"

namespace shadowgraph {

// A deterministic multigraph property. The built-in kinds are the ones the
// oracle and the experiment harness know how to name; kCustom wraps an
// arbitrary callable.
class PropertyPredicate {
 public:
  enum class Kind {
    kSimple,
    kConnected,
    kNoIsolated,
    kHasEdge,
    kHasTriangle,  // textual name "triangle-count"
    kPairAdjacent,
    kCustom,
  };

  static PropertyPredicate Simple() { return PropertyPredicate(Kind::kSimple); }
  static PropertyPredicate Connected() {
    return PropertyPredicate(Kind::kConnected);
  }
  static PropertyPredicate NoIsolated() {
    return PropertyPredicate(Kind::kNoIsolated);
  }
  static PropertyPredicate HasEdge() {
    return PropertyPredicate(Kind::kHasEdge);
  }
  static PropertyPredicate HasTriangle() {
    return PropertyPredicate(Kind::kHasTriangle);
  }
  static PropertyPredicate PairAdjacent(Vertex i, Vertex j);
  static PropertyPredicate Custom(std::string name,
                                  std::function<bool(const Multigraph&)> fn);

  // Accepts "simple", "connected", "no-isolated", "has-edge",
  // "triangle-count" and "pair-adjacent(i,j)". Throws InvalidParameter.
  static PropertyPredicate Parse(std::string_view text);

  Kind kind() const { return kind_; }
  Vertex i() const { return i_; }
  Vertex j() const { return j_; }
  std::string Name() const;

  // Preserved under edge addition.
  bool IsMonotoneIncreasing() const;

  bool operator()(const Multigraph& g) const;

  // Integer statistic reported alongside the predicate in Monte Carlo
  // summaries: triangle count for kHasTriangle, isolated-vertex count for
  // kNoIsolated, total edge count otherwise.
  std::uint64_t Statistic(const Multigraph& g) const;

 private:
  explicit PropertyPredicate(Kind kind) : kind_(kind) {}

  Kind kind_;
  Vertex i_ = 0;
  Vertex j_ = 0;
  std::string custom_name_;
  std::function<bool(const Multigraph&)> custom_;
};

}  // namespace shadowgraph

#endif  // SHADOWGRAPH_PREDICATE_H_
