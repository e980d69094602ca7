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

#include "partitions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace confpoly {

Shape::Shape(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw PreconditionError("shape parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw PreconditionError("shape parts must be non-increasing");
    }
    n_ += parts_[i];
  }
}

int Shape::gcd() const {
  if (parts_.empty()) throw PreconditionError("gcd of the empty shape is undefined");
  int g = 0;
  for (int p : parts_) g = std::gcd(g, p);
  return g;
}

BigInt Shape::multiplicity() const {
  BigInt denom = 1;
  int run = 0;
  for (size_t i = 0; i < parts_.size(); ++i) {
    denom *= factorial(parts_[i]);
    ++run;
    if (i + 1 == parts_.size() || parts_[i + 1] != parts_[i]) {
      denom *= factorial(run);
      run = 0;
    }
  }
  return factorial(n_) / denom;
}

std::string Shape::to_string() const {
  std::ostringstream out;
  out << "[";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out << ",";
    out << parts_[i];
  }
  out << "]";
  return out.str();
}

std::vector<Shape> all_shapes(int n) {
  std::vector<Shape> shapes;
  for_each_shape(n, [&](const Shape& s) { shapes.push_back(s); });
  return shapes;
}

SetPartition::SetPartition(std::vector<int> rgs) : rgs_(std::move(rgs)) {
  if (rgs_.empty()) throw PreconditionError("set partition needs n >= 1");
  int max_seen = -1;
  for (int label : rgs_) {
    if (label < 0 || label > max_seen + 1) {
      throw PreconditionError("invalid restricted growth string");
    }
    max_seen = std::max(max_seen, label);
  }
  blocks_ = max_seen + 1;
}

SetPartition SetPartition::minimum(int n) {
  if (n < 1) throw PreconditionError("set partition needs n >= 1");
  std::vector<int> rgs(static_cast<size_t>(n));
  std::iota(rgs.begin(), rgs.end(), 0);
  return SetPartition(std::move(rgs));
}

SetPartition SetPartition::maximum(int n) {
  if (n < 1) throw PreconditionError("set partition needs n >= 1");
  return SetPartition(std::vector<int>(static_cast<size_t>(n), 0));
}

std::vector<int> SetPartition::block_sizes() const {
  std::vector<int> sizes(static_cast<size_t>(blocks_), 0);
  for (int label : rgs_) ++sizes[static_cast<size_t>(label)];
  return sizes;
}

Shape SetPartition::shape() const {
  std::vector<int> sizes = block_sizes();
  std::sort(sizes.begin(), sizes.end(), std::greater<int>());
  return Shape(std::move(sizes));
}

std::vector<std::vector<int>> SetPartition::blocks() const {
  std::vector<std::vector<int>> out(static_cast<size_t>(blocks_));
  for (size_t i = 0; i < rgs_.size(); ++i) {
    out[static_cast<size_t>(rgs_[i])].push_back(static_cast<int>(i) + 1);
  }
  return out;
}

std::string SetPartition::to_string() const {
  std::ostringstream out;
  out << "{";
  auto bs = blocks();
  for (size_t b = 0; b < bs.size(); ++b) {
    if (b > 0) out << "|";
    for (size_t i = 0; i < bs[b].size(); ++i) {
      if (i > 0) out << " ";
      out << bs[b][i];
    }
  }
  out << "}";
  return out.str();
}

namespace {

void rgs_descend(std::vector<int>& rgs, size_t pos, int used_blocks,
                 std::optional<int> want_blocks,
                 const std::function<void(const SetPartition&)>& visit) {
  const size_t n = rgs.size();
  if (pos == n) {
    if (!want_blocks || used_blocks == *want_blocks) {
      visit(SetPartition(rgs));
    }
    return;
  }
  if (want_blocks) {
    // Not enough positions left to open the missing blocks.
    if (used_blocks + static_cast<int>(n - pos) < *want_blocks) return;
  }
  const int top = want_blocks ? std::min(used_blocks, *want_blocks - 1) : used_blocks;
  for (int label = 0; label <= top; ++label) {
    rgs[pos] = label;
    rgs_descend(rgs, pos + 1, std::max(used_blocks, label + 1), want_blocks, visit);
  }
}

}  // namespace

void for_each_set_partition(int n, const std::function<void(const SetPartition&)>& visit,
                            std::optional<int> block_count, int limit) {
  if (n < 1) throw RangeError("set partition enumeration needs n >= 1");
  if (n > limit) {
    throw BudgetError("set partition enumeration limited to n <= " +
                      std::to_string(limit) + ", got n = " + std::to_string(n));
  }
  if (block_count && (*block_count < 1 || *block_count > n)) {
    throw RangeError("block count must satisfy 1 <= k <= n");
  }
  std::vector<int> rgs(static_cast<size_t>(n), 0);
  rgs_descend(rgs, 1, 1, block_count, visit);
}

std::vector<SetPartition> all_set_partitions(int n, std::optional<int> block_count,
                                             int limit) {
  std::vector<SetPartition> out;
  for_each_set_partition(n, [&](const SetPartition& p) { out.push_back(p); },
                         block_count, limit);
  return out;
}

}  // namespace confpoly
