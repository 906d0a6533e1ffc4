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

#include "propeval/bipartite.h"

#include <limits>
#include <queue>

namespace propeval {
namespace {

constexpr int kInfinity = std::numeric_limits<int>::max();

class HopcroftKarp {
 public:
  HopcroftKarp(const std::vector<std::vector<int>>& adjacency, int right_size)
      : adj_(adjacency),
        left_size_(static_cast<int>(adjacency.size())),
        match_left_(left_size_, kUnmatched),
        match_right_(right_size, kUnmatched),
        dist_(left_size_, 0) {}

  BipartiteMatching Run() {
    int size = 0;
    while (BuildLayers()) {
      for (int u = 0; u < left_size_; ++u) {
        if (match_left_[u] == kUnmatched && Augment(u)) ++size;
      }
    }
    return {size, std::move(match_left_), std::move(match_right_)};
  }

 private:
  // BFS from all free left vertices; true if some free right vertex is
  // reachable along an alternating path.
  bool BuildLayers() {
    std::queue<int> queue;
    for (int u = 0; u < left_size_; ++u) {
      if (match_left_[u] == kUnmatched) {
        dist_[u] = 0;
        queue.push(u);
      } else {
        dist_[u] = kInfinity;
      }
    }
    bool found = false;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop();
      for (int v : adj_[u]) {
        int next = match_right_[v];
        if (next == kUnmatched) {
          found = true;
        } else if (dist_[next] == kInfinity) {
          dist_[next] = dist_[u] + 1;
          queue.push(next);
        }
      }
    }
    return found;
  }

  bool Augment(int u) {
    for (int v : adj_[u]) {
      int next = match_right_[v];
      if (next == kUnmatched ||
          (dist_[next] == dist_[u] + 1 && Augment(next))) {
        match_left_[u] = v;
        match_right_[v] = u;
        return true;
      }
    }
    dist_[u] = kInfinity;
    return false;
  }

  const std::vector<std::vector<int>>& adj_;
  int left_size_;
  std::vector<int> match_left_;
  std::vector<int> match_right_;
  std::vector<int> dist_;
};

}  // namespace

BipartiteMatching MaximumMatching(const std::vector<std::vector<int>>& adjacency,
                                  int right_size) {
  return HopcroftKarp(adjacency, right_size).Run();
}

}  // namespace propeval
