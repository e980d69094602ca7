/*
   Copyright 2026 The confpoly authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "poset.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace confpoly {

bool refines(const SetPartition& sigma, const SetPartition& pi) {
  if (sigma.n() != pi.n()) {
    throw PreconditionError("refinement compares partitions of the same ground set");
  }
  // Each sigma-block must map into a single pi-block.
  std::vector<int> target(static_cast<size_t>(sigma.block_count()), -1);
  for (size_t i = 0; i < sigma.rgs().size(); ++i) {
    const int sb = sigma.rgs()[i];
    const int pb = pi.rgs()[i];
    if (target[static_cast<size_t>(sb)] == -1) {
      target[static_cast<size_t>(sb)] = pb;
    } else if (target[static_cast<size_t>(sb)] != pb) {
      return false;
    }
  }
  return true;
}

BigInt mobius_closed(const SetPartition& sigma) {
  BigInt value = 1;
  for (int size : sigma.block_sizes()) value *= factorial(size - 1);
  if ((sigma.n() - sigma.block_count()) % 2 != 0) value = -value;
  return value;
}

namespace {

using ShapeKey = std::vector<int>;  // sorted non-increasing block sizes

BigInt mu_shape(const ShapeKey& key, std::map<ShapeKey, BigInt>& memo);

// Walks every refinement of the canonical partition with the given block
// sizes by partitioning each block independently; accumulates mu over the
// proper refinements.
void sweep_refinements(const ShapeKey& key, size_t block_idx,
                       std::vector<int>& pieces, bool all_blocks_unsplit,
                       std::map<ShapeKey, BigInt>& memo, BigInt& sum) {
  if (block_idx == key.size()) {
    if (all_blocks_unsplit) return;  // that combination is sigma itself
    ShapeKey refined = pieces;
    std::sort(refined.begin(), refined.end(), std::greater<int>());
    sum += mu_shape(refined, memo);
    return;
  }
  const int m = key[block_idx];
  for_each_set_partition(m, [&](const SetPartition& part) {
    const auto sizes = part.block_sizes();
    pieces.insert(pieces.end(), sizes.begin(), sizes.end());
    sweep_refinements(key, block_idx + 1, pieces,
                      all_blocks_unsplit && part.block_count() == 1, memo, sum);
    pieces.resize(pieces.size() - sizes.size());
  });
}

BigInt mu_shape(const ShapeKey& key, std::map<ShapeKey, BigInt>& memo) {
  bool is_minimum = true;
  for (int p : key) {
    if (p != 1) {
      is_minimum = false;
      break;
    }
  }
  if (is_minimum) return 1;  // mu(0, 0) = 1
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  // sum_{pi <= sigma} mu(0, pi) = 0 for sigma != 0, so mu(0, sigma) is
  // minus the sum over the proper refinements.
  BigInt sum = 0;
  std::vector<int> pieces;
  sweep_refinements(key, 0, pieces, true, memo, sum);
  BigInt value = -sum;
  memo.emplace(key, value);
  return value;
}

}  // namespace

BigInt mobius_recursive(const SetPartition& sigma, int limit) {
  if (sigma.n() > limit) {
    throw BudgetError("recursive Mobius evaluation limited to n <= " +
                      std::to_string(limit) + ", got n = " + std::to_string(sigma.n()));
  }
  ShapeKey key = sigma.shape().parts();
  std::map<ShapeKey, BigInt> memo;
  return mu_shape(key, memo);
}

BigInt count_functions_with_kernel(const SetPartition& sigma, int x, int limit) {
  if (x < 1) throw RangeError("kernel counting needs x >= 1");
  const int n = sigma.n();
  if (n > limit || x > limit) {
    throw BudgetError("kernel counting limited to n, x <= " + std::to_string(limit));
  }
  std::vector<int> values(static_cast<size_t>(n), 0);
  std::vector<int> kernel(static_cast<size_t>(n));
  std::vector<int> label_of(static_cast<size_t>(x));
  BigInt count = 0;
  while (true) {
    // Kernel of the function: relabel values by first occurrence.
    std::fill(label_of.begin(), label_of.end(), -1);
    int next = 0;
    for (int i = 0; i < n; ++i) {
      int& label = label_of[static_cast<size_t>(values[static_cast<size_t>(i)])];
      if (label == -1) label = next++;
      kernel[static_cast<size_t>(i)] = label;
    }
    if (kernel == sigma.rgs()) ++count;
    // Odometer step over all x^n functions.
    int pos = n - 1;
    while (pos >= 0 && values[static_cast<size_t>(pos)] == x - 1) {
      values[static_cast<size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++values[static_cast<size_t>(pos)];
  }
  return count;
}

}  // namespace confpoly
