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

#include "shadowgraph/predicate.h"

#include <algorithm>
#include <charconv>
#include <utility>

#include "shadowgraph/errors.h"

namespace shadowgraph {

PropertyPredicate PropertyPredicate::PairAdjacent(Vertex i, Vertex j) {
  if (i == j || i == 0 || j == 0) {
    throw InvalidParameter("pair-adjacent needs two distinct vertices");
  }
  PropertyPredicate pred(Kind::kPairAdjacent);
  pred.i_ = std::min(i, j);
  pred.j_ = std::max(i, j);
  return pred;
}

PropertyPredicate PropertyPredicate::Custom(
    std::string name, std::function<bool(const Multigraph&)> fn) {
  PropertyPredicate pred(Kind::kCustom);
  pred.custom_name_ = std::move(name);
  pred.custom_ = std::move(fn);
  return pred;
}

PropertyPredicate PropertyPredicate::Parse(std::string_view text) {
  if (text == "simple") return Simple();
  if (text == "connected") return Connected();
  if (text == "no-isolated") return NoIsolated();
  if (text == "has-edge") return HasEdge();
  if (text == "triangle-count") return HasTriangle();
  constexpr std::string_view kPair = "pair-adjacent(";
  if (text.starts_with(kPair) && text.ends_with(")")) {
    const std::string_view args =
        text.substr(kPair.size(), text.size() - kPair.size() - 1);
    const auto comma = args.find(',');
    Vertex i = 0, j = 0;
    if (comma != std::string_view::npos) {
      const auto trim = [](std::string_view s) {
        while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
        return s;
      };
      const auto a = trim(args.substr(0, comma));
      const auto b = trim(args.substr(comma + 1));
      const auto ra = std::from_chars(a.data(), a.data() + a.size(), i);
      const auto rb = std::from_chars(b.data(), b.data() + b.size(), j);
      if (ra.ec == std::errc() && ra.ptr == a.data() + a.size() &&
          rb.ec == std::errc() && rb.ptr == b.data() + b.size()) {
        return PairAdjacent(i, j);
      }
    }
  }
  throw InvalidParameter("unknown property \"" + std::string(text) + "\"");
}

std::string PropertyPredicate::Name() const {
  switch (kind_) {
    case Kind::kSimple:
      return "simple";
    case Kind::kConnected:
      return "connected";
    case Kind::kNoIsolated:
      return "no-isolated";
    case Kind::kHasEdge:
      return "has-edge";
    case Kind::kHasTriangle:
      return "triangle-count";
    case Kind::kPairAdjacent:
      return "pair-adjacent(" + std::to_string(i_) + "," + std::to_string(j_) +
             ")";
    case Kind::kCustom:
      return custom_name_;
  }
  return {};
}

bool PropertyPredicate::IsMonotoneIncreasing() const {
  switch (kind_) {
    case Kind::kConnected:
    case Kind::kNoIsolated:
    case Kind::kHasEdge:
    case Kind::kHasTriangle:
    case Kind::kPairAdjacent:
      return true;
    case Kind::kSimple:
    case Kind::kCustom:
      return false;
  }
  return false;
}

bool PropertyPredicate::operator()(const Multigraph& g) const {
  switch (kind_) {
    case Kind::kSimple:
      return IsSimple(g);
    case Kind::kConnected:
      return IsConnected(g);
    case Kind::kNoIsolated:
      return CountIsolated(g) == 0;
    case Kind::kHasEdge:
      return !g.pairs().empty();
    case Kind::kHasTriangle:
      return CountTriangles(g) > 0;
    case Kind::kPairAdjacent:
      return g.multiplicity(i_, j_) > 0;
    case Kind::kCustom:
      return custom_(g);
  }
  return false;
}

std::uint64_t PropertyPredicate::Statistic(const Multigraph& g) const {
  switch (kind_) {
    case Kind::kHasTriangle:
      return CountTriangles(g);
    case Kind::kNoIsolated:
      return CountIsolated(g);
    default:
      return g.total_edges();
  }
}

}  // namespace shadowgraph
