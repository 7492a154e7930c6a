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

#ifndef SHADOWGRAPH_COMBINATORICS_H_
#define SHADOWGRAPH_COMBINATORICS_H_

#include <cstdint>
#include <span>
#include <utility>

namespace shadowgraph {

// Vertices are labelled 1..n throughout the library.
using Vertex = std::uint32_t;

// Binomial coefficient C(n, k). Throws std::overflow_error when the value
// does not fit in 64 bits.
std::uint64_t Choose(std::uint64_t n, std::uint64_t k);

// C(n, k) as a double; never overflows (may be inf for absurd inputs).
double ChooseReal(std::uint64_t n, std::uint64_t k);

// Colexicographic ranking of k-subsets of {1..n}. The subset {c_1 < ... <
// c_k} has rank sum_i C(c_i - 1, i); ranks of k-subsets of [n] fill
// [0, C(n, k)).
std::uint64_t RankColex(std::span<const Vertex> subset);
void UnrankColex(std::uint64_t rank, std::span<Vertex> out);

// Lexicographic unranking of k-subsets of {1..n}: rank 0 is {1..k}.
void UnrankLex(std::uint64_t rank, Vertex n, std::span<Vertex> out);

// Maps an index in [0, C(s, 2)) to a pair of positions (a, b), a < b < s.
std::pair<std::uint32_t, std::uint32_t> UnrankPairPositions(
    std::uint64_t index);

// Advances `subset` (sorted, values in 1..n) to the next k-subset in
// lexicographic order. Returns false after the last one.
bool NextCombination(std::span<Vertex> subset, Vertex n);

}  // namespace shadowgraph

#endif  // SHADOWGRAPH_COMBINATORICS_H_
