// Copyright 2026 The Propeval Authors.
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

// Maximum-cardinality matching in a bipartite graph (Hopcroft-Karp).

#ifndef PROPEVAL_BIPARTITE_H_
#define PROPEVAL_BIPARTITE_H_

#include <vector>

namespace propeval {

inline constexpr int kUnmatched = -1;

struct BipartiteMatching {
  int size = 0;
  std::vector<int> left_to_right;  // kUnmatched where a left vertex is free
  std::vector<int> right_to_left;
};

// `adjacency[u]` lists the right vertices in [0, right_size) adjacent to
// left vertex u. Runs in O(E sqrt(V)).
BipartiteMatching MaximumMatching(const std::vector<std::vector<int>>& adjacency,
                                  int right_size);

}  // namespace propeval

#endif  // PROPEVAL_BIPARTITE_H_
