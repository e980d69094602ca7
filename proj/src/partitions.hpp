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

#ifndef CONFPOLY_PARTITIONS_HPP
#define CONFPOLY_PARTITIONS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"

namespace confpoly {

// Bell(12) is about 4.2 million partitions; enumeration beyond that is
// rejected unless the caller raises the limit explicitly.
inline constexpr int kSetPartitionLimit = 12;

// Integer partition: the multiset of block sizes of a set partition,
// stored as a non-increasing list of positive parts.
class Shape {
 public:
  Shape() = default;  // the empty shape of n = 0
  explicit Shape(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int n() const { return n_; }
  int length() const { return static_cast<int>(parts_.size()); }

  // gcd of the parts; rejects the empty shape.
  int gcd() const;

  // Number of set partitions of {1..n} whose block sizes realize this
  // shape: n! / (prod_i parts[i]! * prod_j mult_j!) where mult_j counts
  // repeats of part size j.
  BigInt multiplicity() const;

  bool operator==(const Shape& rhs) const { return parts_ == rhs.parts_; }

  std::string to_string() const;

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

// Visits every integer partition of n exactly once in reverse-lexicographic
// order: [n], [n-1,1], ..., [1,...,1]. For n = 0 the single empty shape is
// visited. The callback may return void, or bool with false stopping the walk.
template <typename F>
void for_each_shape(int n, F&& visit);

std::vector<Shape> all_shapes(int n);

// Set partition of {1..n} encoded as a restricted growth string:
// rgs[0] = 0 and rgs[i] <= 1 + max(rgs[0..i-1]).
class SetPartition {
 public:
  explicit SetPartition(std::vector<int> rgs);

  // The partition into n singletons (the poset minimum).
  static SetPartition minimum(int n);
  // The one-block partition (the poset maximum).
  static SetPartition maximum(int n);

  const std::vector<int>& rgs() const { return rgs_; }
  int n() const { return static_cast<int>(rgs_.size()); }
  int block_count() const { return blocks_; }

  // Block sizes indexed by block label.
  std::vector<int> block_sizes() const;
  // Block sizes as a Shape (sorted non-increasing).
  Shape shape() const;
  std::vector<std::vector<int>> blocks() const;

  bool operator==(const SetPartition& rhs) const { return rgs_ == rhs.rgs_; }

  // Renders in block notation, e.g. "{1 2|3}".
  std::string to_string() const;

 private:
  std::vector<int> rgs_;
  int blocks_ = 0;
};

// Visits every set partition of {1..n} in lexicographic rgs order; when
// block_count is given, only partitions with exactly that many blocks.
// Enumeration is capped at `limit` (default kSetPartitionLimit) since the
// stream has Bell(n) elements.
void for_each_set_partition(int n, const std::function<void(const SetPartition&)>& visit,
                            std::optional<int> block_count = std::nullopt,
                            int limit = kSetPartitionLimit);

std::vector<SetPartition> all_set_partitions(int n,
                                             std::optional<int> block_count = std::nullopt,
                                             int limit = kSetPartitionLimit);

// --- implementation ---

namespace detail {

template <typename F>
bool shape_descend(std::vector<int>& parts, int remaining, int max_part, F& visit) {
  if (remaining == 0) {
    if constexpr (std::is_void_v<decltype(visit(Shape(parts)))>) {
      visit(Shape(parts));
      return true;
    } else {
      return visit(Shape(parts));
    }
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    parts.push_back(part);
    bool keep_going = shape_descend(parts, remaining - part, part, visit);
    parts.pop_back();
    if (!keep_going) return false;
  }
  return true;
}

}  // namespace detail

template <typename F>
void for_each_shape(int n, F&& visit) {
  if (n < 0) throw RangeError("shape enumeration needs n >= 0");
  std::vector<int> parts;
  parts.reserve(static_cast<size_t>(n));
  detail::shape_descend(parts, n, n == 0 ? 1 : n, visit);
}

}  // namespace confpoly

#endif  // CONFPOLY_PARTITIONS_HPP
